#include "maillet/spectral.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "maillet/exact_linalg.hpp"
#include "maillet/matrices.hpp"

namespace maillet {

namespace {

// Unit-circle table: w[t] = exp(2 pi i t / n), t = 0..n-1.
std::vector<Complex> root_table(std::uint64_t n) {
  std::vector<Complex> w(n);
  for (std::uint64_t t = 0; t < n; ++t) {
    const double arg = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(n);
    w[t] = Complex(std::cos(arg), std::sin(arg));
  }
  return w;
}

void require_length(const OddPrime& p, Eigen::Index len) {
  if (len != static_cast<Eigen::Index>(p.value() - 1))
    throw std::invalid_argument("entry vector must have length p-1");
}

}  // namespace

IntPolynomial associated_polynomial(const OddPrime& p, const IntVector& c, const PrimitiveRoot& h) {
  require_length(p, c.size());
  const auto table = power_table(h);
  std::vector<Int> coeffs(p.value(), Int(0));  // degrees 0..p-1, constant term 0
  for (std::uint64_t k = 1; k <= p.value() - 1; ++k)
    coeffs[k] = c(static_cast<Eigen::Index>(table[k - 1]) - 1);
  return IntPolynomial(std::move(coeffs));
}

SymmetryClass symmetry_class(unsigned ell) {
  return ell % 2 == 0 ? SymmetryClass::symmetric : SymmetryClass::skew;
}

Eigenpair eigenpair(const OddPrime& p, const IntVector& c, const PrimitiveRoot& h, unsigned ell) {
  require_length(p, c.size());
  const std::uint64_t n = p.value() - 1;
  if (ell < 1 || ell > n) throw std::invalid_argument("eigenpair: ell must be in 1..p-1");
  const auto table = power_table(h);
  const auto w = root_table(n);
  Eigenpair out;
  out.ell = ell;
  out.nu = ComplexVector(static_cast<Eigen::Index>(n));
  Complex lambda{0.0, 0.0};
  for (std::uint64_t j = 1; j <= n; ++j) {
    const Complex z = w[(static_cast<std::uint64_t>(ell) * j) % n];
    out.nu(static_cast<Eigen::Index>(table[j - 1]) - 1) = z;
    lambda += z * c(static_cast<Eigen::Index>(table[j - 1]) - 1).get_d();
  }
  out.lambda = lambda;
  return out;
}

std::set<unsigned> exact_zero_eigenvalues(const OddPrime& p, const IntVector& c, const PrimitiveRoot& h) {
  const std::uint64_t n = p.value() - 1;
  const IntPolynomial f = associated_polynomial(p, c, h);
  std::set<unsigned> zeros;
  if (f.is_zero()) {
    for (unsigned ell = 1; ell <= n; ++ell) zeros.insert(ell);
    return zeros;
  }
  // One divisibility test per distinct multiplicative order d of z_ell.
  std::map<std::uint64_t, bool> vanishes_at_order;
  for (unsigned ell = 1; ell <= n; ++ell) {
    const std::uint64_t d = n / std::gcd<std::uint64_t>(ell, n);
    auto it = vanishes_at_order.find(d);
    if (it == vanishes_at_order.end())
      it = vanishes_at_order.emplace(d, f.divisible_by(cyclotomic(static_cast<unsigned>(d)))).first;
    if (it->second) zeros.insert(ell);
  }
  return zeros;
}

Int resultant_monic(const IntPolynomial& g, const IntPolynomial& f) {
  if (g.is_zero() || g.coeffs().back() != 1)
    throw std::invalid_argument("resultant_monic: g must be monic");
  if (f.is_zero()) return 0;
  const int n = g.degree();
  const int m = f.degree();
  if (m == 0) return int_pow(f.coeff(0), static_cast<unsigned long>(n));
  const Eigen::Index size = n + m;
  IntMatrix syl(size, size);
  syl.setConstant(Int(0));
  // m rows of g shifts, then n rows of f shifts; det = prod of f over roots of g.
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) syl(i, i + k) = g.coeff(static_cast<std::size_t>(n - k));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) syl(m + i, i + k) = f.coeff(static_cast<std::size_t>(m - k));
  return det_bareiss(std::move(syl));
}

Int det_spectral_exact(const OddPrime& p, const IntVector& c, const PrimitiveRoot& h) {
  const IntPolynomial f = associated_polynomial(p, c, h);
  if (f.is_zero()) return 0;
  return resultant_monic(IntPolynomial::power_minus_one(static_cast<unsigned>(p.value() - 1)), f);
}

FloatDeterminant det_spectral_float(const OddPrime& p, const ComplexVector& c, const PrimitiveRoot& h) {
  require_length(p, c.size());
  const std::uint64_t n = p.value() - 1;
  const auto table = power_table(h);
  const auto w = root_table(n);
  Complex product{1.0, 0.0};
  for (unsigned ell = 1; ell <= n; ++ell) {
    Complex f{0.0, 0.0};
    for (std::uint64_t k = 1; k <= n; ++k)
      f += c(static_cast<Eigen::Index>(table[k - 1]) - 1) * w[(static_cast<std::uint64_t>(ell) * k) % n];
    product *= f;
  }
  const double scale = std::abs(product);
  return FloatDeterminant{product, scale * 1e-13 * static_cast<double>(n) + 1e-300};
}

Spectrum compute_spectrum(const OddPrime& p, const IntVector& c, const PrimitiveRoot& h) {
  const std::uint64_t n = p.value() - 1;
  const auto zeros = exact_zero_eigenvalues(p, c, h);
  Spectrum s;
  s.p = p.value();
  s.h = h.value();
  s.entries.reserve(n);
  for (unsigned ell = 1; ell <= n; ++ell) {
    auto pair = eigenpair(p, c, h, ell);
    SpectrumEntry e;
    e.ell = ell;
    e.lambda = pair.lambda;
    e.nu = std::move(pair.nu);
    e.symmetry = symmetry_class(ell);
    e.exactly_zero = zeros.contains(ell);
    s.entries.push_back(std::move(e));
  }
  return s;
}

Spectrum compute_spectrum(const OddPrime& p, unsigned m, const PrimitiveRoot& h) {
  return compute_spectrum(p, power_entries(p, m), h);
}

}  // namespace maillet
