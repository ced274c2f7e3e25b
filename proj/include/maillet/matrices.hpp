#pragma once

#include <cstdint>
#include <stdexcept>

#include "maillet/numeric.hpp"
#include "maillet/permutation.hpp"
#include "maillet/zmod.hpp"

namespace maillet {

/// The (p-1) x (p-1) matrix with entry (i,j) = (i^{-1} j mod p)^m, the
/// exponentiation taken over the integers.
IntMatrix maillet_matrix(const OddPrime& p, unsigned m);

/// The (p-1) x (p-1) matrix with entry (i,j) = c(i^{-1} j mod p), for a
/// 1-based entry vector c of length p-1. Works for exact integer entries
/// and for complex entries on the floating-point path.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> maillet_matrix(
    const OddPrime& p, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& c) {
  const auto n = static_cast<Eigen::Index>(p.value() - 1);
  if (c.size() != n) throw std::invalid_argument("entry vector must have length p-1");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::uint64_t inv = mod_inverse(Residue{static_cast<std::uint64_t>(i + 1), p.value()}).value;
    for (Eigen::Index j = 0; j < n; ++j) {
      const std::uint64_t r = mul_mod(inv, static_cast<std::uint64_t>(j + 1), p.value());
      a(i, j) = c(static_cast<Eigen::Index>(r) - 1);
    }
  }
  return a;
}

/// The entry vector [k^m] for k = 1..p-1, so that
/// maillet_matrix(p, power_entries(p, m)) == maillet_matrix(p, m).
IntVector power_entries(const OddPrime& p, unsigned m);

/// Centrosymmetric block decomposition A = [[B, JCJ], [C, JBJ]]:
/// B is the leading principal block of order n/2, C the lower-left block.
struct CentroBlocks {
  IntMatrix b;
  IntMatrix c;
};
CentroBlocks centro_blocks(const IntMatrix& a);

/// The orthogonally similar block-diagonal form of a centrosymmetric matrix:
/// det(A) = det(B - JC) * det(B + JC).
struct CentroSimilarForm {
  IntMatrix minus;  // B - JC
  IntMatrix plus;   // B + JC
};
CentroSimilarForm centro_similar_form(const IntMatrix& a);

/// The permutation P with P(i,j) = 1 iff j = h^i mod p, which sends
/// e_{h^j mod p} to e_j. Conjugating the Maillet matrix by P yields a
/// circulant.
Permutation similarity_permutation(const PrimitiveRoot& h);

/// First row of the circulant P A P^T: entry k (1-based) is (h^{k-1} mod p)^m.
IntVector circulant_row(const OddPrime& p, unsigned m, const PrimitiveRoot& h);

/// General-entry variant: entry k is c(h^{k-1} mod p).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> circulant_row(
    const OddPrime& p, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& c, const PrimitiveRoot& h) {
  const auto n = static_cast<Eigen::Index>(p.value() - 1);
  if (c.size() != n) throw std::invalid_argument("entry vector must have length p-1");
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> row(n);
  std::uint64_t acc = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    row(k) = c(static_cast<Eigen::Index>(acc) - 1);
    acc = mul_mod(acc, h.value(), p.value());
  }
  return row;
}

/// Dense circulant with the given first row.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> circulant(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& first_row) {
  const auto n = first_row.size();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = first_row((j - i + n) % n);
  return m;
}

/// The transpose of the circulant with the given first row, as a first row:
/// w(1) = v(1), w(k) = v(n-k+2) for k >= 2.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> transposed_circulant_row(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& v) {
  const auto n = v.size();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> w(n);
  w(0) = v(0);
  for (Eigen::Index k = 1; k < n; ++k) w(k) = v(n - k);
  return w;
}

/// The cyclic generator Q with Q(i,j) = 1 iff j = i*h mod p. Its powers
/// Q, Q^2, ..., Q^{p-1} = I have pairwise disjoint supports, and the
/// Maillet matrix is the polynomial sum_k (h^k mod p)^m Q^k in Q.
Permutation shift_generator(const PrimitiveRoot& h);

/// Exact rational kernel vectors of the m=1 matrix, stacked as columns:
/// column k-1 is e_1 + e_{p-1} - e_k - e_{p-k} for k = 2..(p-1)/2.
/// Requires p >= 5; the product maillet_matrix(p,1) * result is exactly zero.
IntMatrix kernel_block_vectors(const OddPrime& p);

}  // namespace maillet
