#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "maillet/numeric.hpp"
#include "maillet/polynomial.hpp"
#include "maillet/zmod.hpp"

namespace maillet {

/// The polynomial f_c(z) = sum_{k=1}^{p-1} c(h^k mod p) z^k whose values at
/// the (p-1)st roots of unity are the eigenvalues of the matrix built from c.
IntPolynomial associated_polynomial(const OddPrime& p, const IntVector& c, const PrimitiveRoot& h);

enum class SymmetryClass { symmetric, skew };

/// Eigenvectors are symmetric under the reversal J exactly for even ell.
SymmetryClass symmetry_class(unsigned ell);

struct Eigenpair {
  unsigned ell = 0;       // 1..p-1
  Complex lambda;         // f_c(z_ell), z_ell = exp(2 pi i ell / (p-1))
  ComplexVector nu;       // entry h^j mod p (1-based) equals z_ell^j
};

/// The closed-form eigenpair for index ell.
Eigenpair eigenpair(const OddPrime& p, const IntVector& c, const PrimitiveRoot& h, unsigned ell);

/// Indices ell with lambda_ell exactly zero, decided by cyclotomic
/// divisibility: f_c(z_ell) = 0 iff Phi_d | f_c with d = (p-1)/gcd(ell, p-1).
std::set<unsigned> exact_zero_eigenvalues(const OddPrime& p, const IntVector& c, const PrimitiveRoot& h);

/// Exact spectral determinant prod_ell f_c(z_ell), computed as the resultant
/// Res(x^{p-1} - 1, f_c) via a Bareiss determinant of the Sylvester matrix.
Int det_spectral_exact(const OddPrime& p, const IntVector& c, const PrimitiveRoot& h);

/// Resultant Res(g, f) for monic g, as det of the Sylvester matrix; equals
/// the product of f over the roots of g.
Int resultant_monic(const IntPolynomial& g, const IntPolynomial& f);

struct FloatDeterminant {
  Complex value;
  double error_estimate;
};

/// Floating-point product of f_c over the roots of unity. Sanity cross-check
/// only, never ground truth.
FloatDeterminant det_spectral_float(const OddPrime& p, const ComplexVector& c, const PrimitiveRoot& h);

struct SpectrumEntry {
  unsigned ell = 0;
  Complex lambda;
  ComplexVector nu;
  SymmetryClass symmetry = SymmetryClass::skew;
  bool exactly_zero = false;
};

/// All p-1 eigenpairs with symmetry classes and exact-zero flags.
struct Spectrum {
  std::uint64_t p = 0;
  std::uint64_t h = 0;
  std::vector<SpectrumEntry> entries;
};

Spectrum compute_spectrum(const OddPrime& p, const IntVector& c, const PrimitiveRoot& h);
Spectrum compute_spectrum(const OddPrime& p, unsigned m, const PrimitiveRoot& h);

}  // namespace maillet
