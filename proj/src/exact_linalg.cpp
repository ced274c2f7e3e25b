#include "maillet/exact_linalg.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "maillet/zmod.hpp"

namespace maillet {

Int det_bareiss(IntMatrix m) {
  const auto n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("det_bareiss: matrix must be square");
  if (n == 0) return 1;
  int sign = 1;
  Int prev{1};
  Int t;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = k; r < n; ++r) {
      if (m(r, k) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        // m(i,j) <- (m(i,j) m(k,k) - m(i,k) m(k,j)) / prev, division exact
        mpz_mul(t.get_mpz_t(), m(i, j).get_mpz_t(), m(k, k).get_mpz_t());
        mpz_submul(t.get_mpz_t(), m(i, k).get_mpz_t(), m(k, j).get_mpz_t());
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Int det = m(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

namespace {

// Fixed descending sequence of primes just below 2^31, extended on demand.
// Residue products then stay below 2^62 and never overflow 64-bit math.
std::uint64_t crt_prime(std::size_t index) {
  static std::vector<std::uint64_t> pool;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  std::uint64_t candidate = pool.empty() ? (1ull << 31) - 1 : pool.back() - 2;
  while (pool.size() <= index) {
    while (!is_prime_u64(candidate)) candidate -= 2;
    pool.push_back(candidate);
    candidate -= 2;
  }
  return pool[index];
}

std::uint64_t modular_det(const IntMatrix& m, std::uint64_t q) {
  const auto n = static_cast<std::size_t>(m.rows());
  std::vector<std::uint64_t> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i * n + j] = mpz_fdiv_ui(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)).get_mpz_t(), q);

  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot * n + k] == 0) ++pivot;
    if (pivot == n) return 0;  // determinant is 0 mod q
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
      det = q - det;
      if (det == q) det = 0;
    }
    const std::uint64_t pv = a[k * n + k];
    det = mul_mod(det, pv, q);
    const std::uint64_t inv = pow_mod(pv, q - 2, q);
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::uint64_t factor = mul_mod(a[i * n + k], inv, q);
      if (factor == 0) continue;
      for (std::size_t j = k; j < n; ++j) {
        const std::uint64_t sub = mul_mod(factor, a[k * n + j], q);
        a[i * n + j] = (a[i * n + j] + q - sub) % q;
      }
    }
  }
  return det;
}

}  // namespace

Int det_modular_crt(const IntMatrix& m) {
  const auto n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("det_modular_crt: matrix must be square");
  if (n == 0) return 1;

  Int hadamard{1};
  for (Eigen::Index i = 0; i < n; ++i) {
    Int s{0};
    for (Eigen::Index j = 0; j < n; ++j) s += m(i, j) * m(i, j);
    if (s == 0) return 0;  // zero row
    hadamard *= isqrt_ceil(s);
  }

  const Int target = 2 * hadamard;
  Int modulus{1};
  Int result{0};
  std::size_t index = 0;
  while (modulus <= target) {
    const std::uint64_t q = crt_prime(index++);
    const std::uint64_t r_q = modular_det(m, q);
    // Lift: result' == result (mod modulus), result' == r_q (mod q).
    const std::uint64_t cur = mpz_fdiv_ui(result.get_mpz_t(), q);
    const std::uint64_t diff = (r_q + q - cur) % q;
    const std::uint64_t minv = pow_mod(mpz_fdiv_ui(modulus.get_mpz_t(), q), q - 2, q);
    result += modulus * Int(mul_mod(diff, minv, q));
    modulus *= Int(q);
  }
  if (2 * result > modulus) result -= modulus;
  return result;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimensions must agree");
  return a * b;
}

namespace {

bool entrywise_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace

bool is_normal(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  return entrywise_equal(a * a.transpose(), a.transpose() * a);
}

bool is_centrosymmetric(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  return entrywise_equal(a, a.reverse());
}

bool is_latin_square(const IntMatrix& a) {
  const auto n = a.rows();
  if (a.cols() != n || n == 0) return false;
  std::vector<Int> ref(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) ref[static_cast<std::size_t>(j)] = a(0, j);
  std::sort(ref.begin(), ref.end());
  for (std::size_t k = 1; k < ref.size(); ++k)
    if (ref[k] == ref[k - 1]) return false;

  std::vector<Int> line(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) line[static_cast<std::size_t>(j)] = a(i, j);
    std::sort(line.begin(), line.end());
    if (line != ref) return false;
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) line[static_cast<std::size_t>(i)] = a(i, j);
    std::sort(line.begin(), line.end());
    if (line != ref) return false;
  }
  return true;
}

Eigen::Index rank_over_rationals(IntMatrix m) {
  const auto rows = m.rows();
  const auto cols = m.cols();
  Eigen::Index rank = 0;
  Int prev{1};
  Int t, q, r;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = rank; i < rows; ++i) {
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(rank).swap(m.row(pivot));
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        mpz_mul(t.get_mpz_t(), m(i, j).get_mpz_t(), m(rank, col).get_mpz_t());
        mpz_submul(t.get_mpz_t(), m(i, col).get_mpz_t(), m(rank, j).get_mpz_t());
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        if (r != 0) throw std::logic_error("rank_over_rationals: inexact fraction-free step");
        m(i, j) = q;
      }
      m(i, col) = 0;
    }
    prev = m(rank, col);
    ++rank;
  }
  return rank;
}

}  // namespace maillet
