#include "maillet/numeric.hpp"

#include <stdexcept>

namespace maillet {

Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int int_pow(unsigned long base, unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

Int isqrt_ceil(const Int& x) {
  if (x < 0) throw std::domain_error("isqrt_ceil: negative input");
  Int s;
  mpz_sqrt(s.get_mpz_t(), x.get_mpz_t());  // floor sqrt
  if (s * s < x) ++s;
  return s;
}

std::size_t decimal_digit_count(const Int& x) {
  // mpz_sizeinbase may overestimate by one; go through the exact string.
  Int a = abs(x);
  return a.get_str().size();
}

ComplexMatrix to_complex(const IntMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Complex(m(i, j).get_d(), 0.0);
  return out;
}

ComplexVector to_complex(const IntVector& v) {
  ComplexVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Complex(v(i).get_d(), 0.0);
  return out;
}

}  // namespace maillet
