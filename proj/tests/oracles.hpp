#pragma once

// Independent test oracles. Everything here is deliberately naive and kept
// apart from the library's computation paths: cofactor expansion instead of
// elimination, rational Gaussian elimination instead of fraction-free,
// exhaustive power enumeration instead of factor tests, and finite
// differences instead of coefficient formulas.

#include <complex>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "maillet/numeric.hpp"

namespace oracles {

using maillet::Int;
using maillet::IntMatrix;
using maillet::Rational;

/// Determinant by recursive cofactor expansion along the first row.
/// Only for small matrices (n <= 8 or so).
inline Int cofactor_determinant(const IntMatrix& m) {
  const auto n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int det{0};
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index cc = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const Int term = m(0, j) * cofactor_determinant(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

/// Determinant by Gaussian elimination over the rationals.
inline Int rational_determinant(const IntMatrix& m) {
  const auto n = m.rows();
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n)));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
  Rational det{1};
  for (std::size_t k = 0; k < a.size(); ++k) {
    std::size_t pivot = k;
    while (pivot < a.size() && a[pivot][k] == 0) ++pivot;
    if (pivot == a.size()) return 0;
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < a.size(); ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < a.size(); ++j) a[i][j] -= f * a[k][j];
    }
  }
  det.canonicalize();
  return det.get_num();  // denominator is 1 for integer input
}

/// Rank by Gaussian elimination over the rationals; rectangular input.
inline Eigen::Index rational_rank(const IntMatrix& m) {
  const auto rows = static_cast<std::size_t>(m.rows());
  const auto cols = static_cast<std::size_t>(m.cols());
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      a[i][j] = Rational(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
  Eigen::Index rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[row]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      const Rational f = a[i][col] / a[row][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

/// Primitive roots by exhaustive enumeration of {h^k mod p}.
inline std::vector<std::uint64_t> brute_force_primitive_roots(std::uint64_t p) {
  std::vector<std::uint64_t> roots;
  for (std::uint64_t h = 1; h < p; ++h) {
    std::set<std::uint64_t> seen;
    std::uint64_t acc = 1;
    for (std::uint64_t k = 1; k < p; ++k) {
      acc = (acc * h) % p;
      seen.insert(acc);
    }
    if (seen.size() == p - 1) roots.push_back(h);
  }
  return roots;
}

inline std::uint64_t brute_force_phi(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    std::uint64_t a = k, b = n;
    while (b) {
      const std::uint64_t t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) ++count;
  }
  return count;
}

using LongComplex = std::complex<long double>;
using LongFunction = std::function<LongComplex(long double)>;

/// m-th derivative by fourth-order central differences in long double.
/// Supports m = 0..4; step tuned for trigonometric-polynomial scales.
inline LongComplex finite_difference_derivative(const LongFunction& f, unsigned m, long double x,
                                                long double h = 1e-3L) {
  auto at = [&](int k) { return f(x + static_cast<long double>(k) * h); };
  switch (m) {
    case 0:
      return f(x);
    case 1:
      return (-at(2) + 8.0L * at(1) - 8.0L * at(-1) + at(-2)) / (12.0L * h);
    case 2:
      return (-at(2) + 16.0L * at(1) - 30.0L * at(0) + 16.0L * at(-1) - at(-2)) / (12.0L * h * h);
    case 3:
      return (-at(3) + 8.0L * at(2) - 13.0L * at(1) + 13.0L * at(-1) - 8.0L * at(-2) + at(-3)) /
             (8.0L * h * h * h);
    case 4:
      return (-at(3) + 12.0L * at(2) - 39.0L * at(1) + 56.0L * at(0) - 39.0L * at(-1) + 12.0L * at(-2) -
              at(-3)) /
             (6.0L * h * h * h * h);
    default:
      throw std::invalid_argument("finite_difference_derivative: order not supported");
  }
}

}  // namespace oracles
