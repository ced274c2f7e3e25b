#pragma once

#include "maillet/numeric.hpp"

namespace maillet {

/// Exact determinant by Bareiss fraction-free elimination. Pivot is the
/// first nonzero entry in the column; a row swap flips the sign.
Int det_bareiss(IntMatrix m);

/// Exact determinant by modular elimination and CRT reconstruction.
/// The prime count is fixed in advance so the modulus product exceeds twice
/// the Hadamard bound prod_i ||row_i||_2 (integer square-root ceilings, no
/// floating point); no probabilistic early exit.
Int det_modular_crt(const IntMatrix& m);

/// Exact product; throws on inner-dimension mismatch.
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

/// A A^T == A^T A exactly (integer entries, so conjugation is transposition).
bool is_normal(const IntMatrix& a);

/// A(i,j) == A(n-i+1, n-j+1) for all i,j.
bool is_centrosymmetric(const IntMatrix& a);

/// Every row and every column is a permutation of the first row's entries,
/// which must be pairwise distinct.
bool is_latin_square(const IntMatrix& a);

/// Rank over the rationals by fraction-free elimination; works on
/// rectangular input. Kernel dimension is cols - rank.
Eigen::Index rank_over_rationals(IntMatrix m);

}  // namespace maillet
