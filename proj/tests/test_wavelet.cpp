#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "maillet/matrices.hpp"
#include "maillet/wavelet.hpp"
#include "oracles.hpp"

using namespace maillet;

namespace {

constexpr double kPi = std::numbers::pi;

// Long-double evaluation of R from its coefficients, for the FD oracle.
oracles::LongFunction long_double_evaluator(const TrigPolynomial& r) {
  return [coeffs = r.coeffs()](long double x) {
    oracles::LongComplex sum{0.0L, 0.0L};
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      const long double kd = static_cast<long double>(k);
      sum += oracles::LongComplex(coeffs[k].real(), coeffs[k].imag()) *
             std::exp(oracles::LongComplex(0.0L, -kd * x));
    }
    return sum;
  };
}

double fd_step(unsigned order) {
  switch (order) {
    case 1: return 1e-4;
    case 2: return 5e-4;
    default: return 8e-4;
  }
}

}  // namespace

TEST_CASE("averaging mask power: R(0) = 1 and coefficients sum to one") {
  for (std::uint64_t pv : {3ull, 5ull, 7ull}) {
    for (unsigned m : {1u, 2u, 3u, 4u}) {
      const TrigPolynomial r = averaging_mask_power(OddPrime(pv), m);
      CHECK(r.coeffs().size() == m * (pv - 1) + 1);
      CHECK(std::abs(r.evaluate(0.0) - Complex(1, 0)) < 1e-12);
    }
  }
}

TEST_CASE("averaging mask power: p=3, m=1 has a simple zero at 2 pi / 3") {
  const TrigPolynomial r = averaging_mask_power(OddPrime(3), 1);
  CHECK(std::abs(r.evaluate(2.0 * kPi / 3.0)) < 1e-12);
  CHECK(std::abs(r.derivative(1, 2.0 * kPi / 3.0)) > 1e-3);
}

TEST_CASE("averaging mask power: zero of order exactly m at every 2 pi k / p") {
  for (std::uint64_t pv : {3ull, 5ull, 7ull}) {
    for (unsigned m : {1u, 2u, 3u}) {
      const TrigPolynomial r = averaging_mask_power(OddPrime(pv), m);
      for (std::uint64_t k = 1; k < pv; ++k) {
        const double xi = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(pv);
        for (unsigned j = 0; j < m; ++j) CHECK(std::abs(r.derivative(j, xi)) < 1e-9);
        CHECK(std::abs(r.derivative(m, xi)) > 1e-8);
      }
    }
  }
}

TEST_CASE("derivative via coefficients matches central finite differences") {
  for (std::uint64_t pv : {3ull, 5ull, 7ull}) {
    for (unsigned m : {1u, 2u, 3u}) {
      const TrigPolynomial r = averaging_mask_power(OddPrime(pv), m);
      const auto f = long_double_evaluator(r);
      for (double xi : {0.0, 0.37, 2.0 * kPi / static_cast<double>(pv), 1.234, -2.5}) {
        for (unsigned order = 1; order <= m; ++order) {
          const auto fd = oracles::finite_difference_derivative(f, order, xi, fd_step(order));
          const Complex analytic = r.derivative(order, xi);
          CHECK(std::abs(analytic - Complex(static_cast<double>(fd.real()),
                                            static_cast<double>(fd.imag()))) < 1e-6);
        }
      }
    }
  }
}

TEST_CASE("tau_restricted: value one at the origin") {
  for (std::uint64_t pv : {3ull, 5ull, 7ull}) {
    for (unsigned m : {1u, 2u}) {
      const TrigPolynomial r = averaging_mask_power(OddPrime(pv), m);
      CHECK(std::abs(tau_restricted(r, OddPrime(pv), 0.0) - Complex(1, 0)) < 1e-12);
    }
  }
}

TEST_CASE("tau_restricted: p=3, m=1 equals the two-term average at 2 pi / 3") {
  const OddPrime p(3);
  const TrigPolynomial r = averaging_mask_power(p, 1);
  const double xi = 2.0 * kPi / 3.0;
  const Complex direct = 0.5 * (r.evaluate(xi) + r.evaluate(2.0 * xi));
  CHECK(std::abs(tau_restricted(r, p, xi) - direct) < 1e-14);
}

TEST_CASE("tau_restricted agrees with the full 2-d tau on the first axis") {
  for (std::uint64_t pv : {3ull, 5ull, 7ull}) {
    const OddPrime p(pv);
    for (unsigned m : {1u, 2u, 3u}) {
      const TrigPolynomial r = averaging_mask_power(p, m);
      for (int i = -20; i <= 20; ++i) {
        const double xi = kPi * static_cast<double>(i) / 20.0;
        CHECK(std::abs(tau_restricted(r, p, xi) - tau_full_2d_on_axis(r, p, xi)) < 1e-10);
      }
      // the lattice points the criterion cares about
      for (std::uint64_t k = 1; k < pv; ++k) {
        const double xi = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(pv);
        CHECK(std::abs(tau_restricted(r, p, xi) - tau_full_2d_on_axis(r, p, xi)) < 1e-10);
      }
    }
  }
}

TEST_CASE("chain-rule identity: A v reproduces the direct derivative of tau") {
  for (std::uint64_t pv : {3ull, 5ull, 7ull}) {
    const OddPrime p(pv);
    const std::uint64_t n = pv - 1;
    for (unsigned m : {1u, 2u, 3u}) {
      const TrigPolynomial r = averaging_mask_power(p, m);
      ComplexVector v(static_cast<Eigen::Index>(n));
      for (std::uint64_t k = 1; k <= n; ++k)
        v(static_cast<Eigen::Index>(k) - 1) =
            r.derivative(m, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(pv));
      const double vnorm = v.lpNorm<Eigen::Infinity>();
      for (Eigen::Index i = 0; i < v.size(); ++i) CHECK(std::abs(v(i)) > 1e-8);  // no zero entry

      const ComplexMatrix a = to_complex(maillet_matrix(p, m));
      const ComplexVector u = (a * v) / static_cast<double>(n);
      for (std::uint64_t ell = 1; ell <= n; ++ell) {
        // D^m tau on the first axis, differentiated term by term: no mod-p
        // rearrangement, so this is an independent route to the same value.
        Complex direct{0, 0};
        for (std::uint64_t k = 1; k <= n; ++k) {
          const double arg = 2.0 * kPi * static_cast<double>(k) * static_cast<double>(ell) /
                             static_cast<double>(pv);
          direct += std::pow(static_cast<double>(k), static_cast<int>(m)) * r.derivative(m, arg);
        }
        direct /= static_cast<double>(n);
        CHECK(std::abs(u(static_cast<Eigen::Index>(ell) - 1) - direct) <= 1e-6 * vnorm);
      }
    }
  }
}

TEST_CASE("check_tau_order: p=3 holds for m = 1..4") {
  for (unsigned m = 1; m <= 4; ++m) {
    const auto r = check_tau_order(OddPrime(3), m, 1e-8);
    CHECK(r.status == TauOrderStatus::holds);
    CHECK(r.max_entry > 1e-8);
  }
}

TEST_CASE("check_tau_order: singular matrices give indeterminate") {
  CHECK(check_tau_order(OddPrime(5), 1, 1e-8).status == TauOrderStatus::indeterminate);
  CHECK(check_tau_order(OddPrime(7), 1, 1e-8).status == TauOrderStatus::indeterminate);
}

TEST_CASE("check_tau_order: invertible cases hold") {
  CHECK(check_tau_order(OddPrime(5), 2, 1e-8).status == TauOrderStatus::holds);
  CHECK(check_tau_order(OddPrime(5), 3, 1e-8).status == TauOrderStatus::holds);
  CHECK(check_tau_order(OddPrime(7), 2, 1e-8).status == TauOrderStatus::holds);
  CHECK(check_tau_order(OddPrime(7), 3, 1e-8).status == TauOrderStatus::holds);
}
