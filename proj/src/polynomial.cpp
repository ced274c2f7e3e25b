#include "maillet/polynomial.hpp"

#include <map>
#include <stdexcept>

namespace maillet {

namespace {
const Int kZero{0};
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::power_minus_one(unsigned n) {
  std::vector<Int> c(n + 1, Int(0));
  c[0] = -1;
  c[n] = 1;
  return IntPolynomial(std::move(c));
}

const Int& IntPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

Complex IntPolynomial::evaluate(Complex z) const {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + Complex(it->get_d(), 0.0);
  return acc;
}

Int IntPolynomial::evaluate(const Int& x) const {
  Int acc{0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

PolyDivMod divmod_monic(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  if (divisor.is_zero() || divisor.coeffs().back() != 1)
    throw std::invalid_argument("divmod_monic: divisor must be monic");
  const int dd = divisor.degree();
  std::vector<Int> rem = dividend.coeffs();
  if (dividend.degree() < dd) return PolyDivMod{IntPolynomial(), dividend};
  std::vector<Int> quot(rem.size() - static_cast<std::size_t>(dd), Int(0));
  for (int k = dividend.degree(); k >= dd; --k) {
    const Int factor = rem[static_cast<std::size_t>(k)];
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(k - dd)] = factor;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= factor * divisor.coeffs()[static_cast<std::size_t>(j)];
  }
  return PolyDivMod{IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

bool IntPolynomial::divisible_by(const IntPolynomial& monic_divisor) const {
  return divmod_monic(*this, monic_divisor).remainder.is_zero();
}

IntPolynomial cyclotomic(unsigned d) {
  if (d == 0) throw std::invalid_argument("cyclotomic: d must be positive");
  // Phi_e for every divisor e of d, built in increasing order of e.
  std::map<unsigned, IntPolynomial> phi;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    IntPolynomial num = IntPolynomial::power_minus_one(e);
    for (const auto& [f, poly] : phi) {
      if (e % f == 0) {
        auto dm = divmod_monic(num, poly);
        if (!dm.remainder.is_zero()) throw std::logic_error("cyclotomic: inexact division");
        num = std::move(dm.quotient);
      }
    }
    phi.emplace(e, std::move(num));
  }
  return phi.at(d);
}

}  // namespace maillet
