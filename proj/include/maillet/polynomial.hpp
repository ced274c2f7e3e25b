#pragma once

#include <vector>

#include "maillet/numeric.hpp"

namespace maillet {

/// Integer-coefficient polynomial, coefficient index = degree.
/// The highest-degree coefficient is nonzero unless the polynomial is zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;  // zero polynomial
  explicit IntPolynomial(std::vector<Int> coeffs);

  /// x^n - 1.
  static IntPolynomial power_minus_one(unsigned n);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  const Int& coeff(std::size_t i) const;

  Complex evaluate(Complex z) const;
  Int evaluate(const Int& x) const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  bool divisible_by(const IntPolynomial& monic_divisor) const;

 private:
  std::vector<Int> coeffs_;
};

struct PolyDivMod {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Long division by a monic divisor; exact over the integers.
PolyDivMod divmod_monic(const IntPolynomial& dividend, const IntPolynomial& divisor);

/// The d-th cyclotomic polynomial, by the recursive quotient
/// Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e.
IntPolynomial cyclotomic(unsigned d);

}  // namespace maillet
