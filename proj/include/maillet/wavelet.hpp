#pragma once

#include <vector>

#include "maillet/numeric.hpp"
#include "maillet/zmod.hpp"

namespace maillet {

/// Finitely supported trigonometric polynomial R(xi) = sum_k r(k) e^{-i k xi},
/// with support k in [0, K]. The only non-exact data type in the library.
class TrigPolynomial {
 public:
  explicit TrigPolynomial(std::vector<Complex> coeffs);

  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex evaluate(double xi) const;
  /// D^order R(xi) = sum_k r(k) (-ik)^order e^{-i k xi}.
  Complex derivative(unsigned order, double xi) const;

 private:
  std::vector<Complex> coeffs_;
};

/// The m-th power of the length-p averaging mask (1/p) sum_{j=0}^{p-1} e^{-ij xi}.
/// R(0) = 1, and R has a zero of order exactly m at 2 pi k / p for k = 1..p-1,
/// so D^m R is nonzero at each of those points.
TrigPolynomial averaging_mask_power(const OddPrime& p, unsigned m);

/// (1/(p-1)) sum_{k=1}^{p-1} R(k xi): the single-axis restriction of tau.
Complex tau_restricted(const TrigPolynomial& r, const OddPrime& p, double xi);

/// The full two-dimensional tau evaluated on the first axis at omega = (xi, 0):
/// (1/((p-1) p)) (1 - p + sum_{nu in {0..p-1}^2 \ 0} R(xi nu_1)).
/// Agrees with tau_restricted up to rounding.
Complex tau_full_2d_on_axis(const TrigPolynomial& r, const OddPrime& p, double xi);

enum class TauOrderStatus { holds, violated, indeterminate };

struct TauOrderResult {
  TauOrderStatus status = TauOrderStatus::indeterminate;
  double max_entry = 0.0;  // ||(1/(p-1)) A v||_inf with v = [D^m R(2 pi k / p)]
};

/// Criterion that the order of zeros of tau is at most m: with
/// v(k) = D^m R(2 pi k / p), the vector u = (1/(p-1)) A v collects the
/// derivatives D^(m,0,...) tau at the lattice points, and must have a
/// nonzero entry. Indeterminate when the matrix is singular (exactly
/// decided), since the criterion's hypothesis fails there.
TauOrderResult check_tau_order(const OddPrime& p, unsigned m, double tol);

}  // namespace maillet
