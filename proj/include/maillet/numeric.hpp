#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <complex>
#include <cstddef>
#include <cstdint>

// Eigen scalar adaptor for GMP arbitrary-precision integers. Exact scalar:
// no epsilon, no rounding, integer division is never performed implicitly.
namespace Eigen {
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Literal = mpz_class;
  using Nested = mpz_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 100,
  };
};
}  // namespace Eigen

namespace maillet {

using Int = mpz_class;
using Rational = mpq_class;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// base^exp over the integers.
Int int_pow(const Int& base, unsigned long exp);
Int int_pow(unsigned long base, unsigned long exp);

/// Smallest s >= 0 with s*s >= x. Requires x >= 0.
Int isqrt_ceil(const Int& x);

/// Number of decimal digits of |x|; zero has one digit.
std::size_t decimal_digit_count(const Int& x);

ComplexMatrix to_complex(const IntMatrix& m);
ComplexVector to_complex(const IntVector& v);

}  // namespace maillet
