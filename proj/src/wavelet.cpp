#include "maillet/wavelet.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "maillet/matrices.hpp"
#include "maillet/spectral.hpp"

namespace maillet {

TrigPolynomial::TrigPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TrigPolynomial: empty coefficient list");
}

Complex TrigPolynomial::evaluate(double xi) const { return derivative(0, xi); }

Complex TrigPolynomial::derivative(unsigned order, double xi) const {
  Complex sum{0.0, 0.0};
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const double kd = static_cast<double>(k);
    Complex factor{1.0, 0.0};
    const Complex minus_ik{0.0, -kd};
    for (unsigned n = 0; n < order; ++n) factor *= minus_ik;
    sum += coeffs_[k] * factor * std::polar(1.0, -kd * xi);
  }
  return sum;
}

TrigPolynomial averaging_mask_power(const OddPrime& p, unsigned m) {
  if (m == 0) throw std::invalid_argument("averaging_mask_power: m must be positive");
  const std::size_t pv = static_cast<std::size_t>(p.value());
  std::vector<double> base(pv, 1.0 / static_cast<double>(pv));
  std::vector<double> acc{1.0};
  for (unsigned step = 0; step < m; ++step) {
    std::vector<double> next(acc.size() + base.size() - 1, 0.0);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < base.size(); ++j) next[i + j] += acc[i] * base[j];
    acc = std::move(next);
  }
  std::vector<Complex> coeffs(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) coeffs[k] = Complex(acc[k], 0.0);
  return TrigPolynomial(std::move(coeffs));
}

Complex tau_restricted(const TrigPolynomial& r, const OddPrime& p, double xi) {
  Complex sum{0.0, 0.0};
  for (std::uint64_t k = 1; k <= p.value() - 1; ++k) sum += r.evaluate(static_cast<double>(k) * xi);
  return sum / static_cast<double>(p.value() - 1);
}

Complex tau_full_2d_on_axis(const TrigPolynomial& r, const OddPrime& p, double xi) {
  const double pv = static_cast<double>(p.value());
  Complex sum{0.0, 0.0};
  for (std::uint64_t n1 = 0; n1 < p.value(); ++n1) {
    for (std::uint64_t n2 = 0; n2 < p.value(); ++n2) {
      if (n1 == 0 && n2 == 0) continue;
      sum += r.evaluate(xi * static_cast<double>(n1));  // omega . nu = xi * nu_1
    }
  }
  return (Complex(1.0 - pv, 0.0) + sum) / ((pv - 1.0) * pv);
}

TauOrderResult check_tau_order(const OddPrime& p, unsigned m, double tol) {
  const auto h = smallest_primitive_root(p);
  const Int det = det_spectral_exact(p, power_entries(p, m), h);

  const TrigPolynomial r = averaging_mask_power(p, m);
  const std::uint64_t n = p.value() - 1;
  ComplexVector v(static_cast<Eigen::Index>(n));
  const double step = 2.0 * std::numbers::pi / static_cast<double>(p.value());
  for (std::uint64_t k = 1; k <= n; ++k)
    v(static_cast<Eigen::Index>(k) - 1) = r.derivative(m, static_cast<double>(k) * step);
  if (v.lpNorm<Eigen::Infinity>() == 0.0)
    throw std::logic_error("check_tau_order: derivative vector is zero");

  const ComplexMatrix a = to_complex(maillet_matrix(p, m));
  const ComplexVector u = (a * v) / static_cast<double>(n);
  const double max_entry = u.lpNorm<Eigen::Infinity>();

  TauOrderResult result;
  result.max_entry = max_entry;
  if (det == 0)
    result.status = TauOrderStatus::indeterminate;
  else
    result.status = max_entry > tol ? TauOrderStatus::holds : TauOrderStatus::violated;
  return result;
}

}  // namespace maillet
