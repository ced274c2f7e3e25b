#include "maillet/matrices.hpp"

#include "maillet/exact_linalg.hpp"

namespace maillet {

IntMatrix maillet_matrix(const OddPrime& p, unsigned m) {
  return maillet_matrix(p, power_entries(p, m));
}

IntVector power_entries(const OddPrime& p, unsigned m) {
  const auto n = static_cast<Eigen::Index>(p.value() - 1);
  IntVector c(n);
  for (Eigen::Index k = 0; k < n; ++k) c(k) = int_pow(static_cast<unsigned long>(k + 1), m);
  return c;
}

namespace {

IntMatrix flip_rows(const IntMatrix& m) { return m.colwise().reverse(); }

}  // namespace

CentroBlocks centro_blocks(const IntMatrix& a) {
  const auto n = a.rows();
  if (a.cols() != n || n % 2 != 0) throw std::invalid_argument("centro_blocks: even square matrix required");
  if (!is_centrosymmetric(a)) throw std::invalid_argument("centro_blocks: matrix is not centrosymmetric");
  const auto half = n / 2;
  return CentroBlocks{a.topLeftCorner(half, half), a.bottomLeftCorner(half, half)};
}

CentroSimilarForm centro_similar_form(const IntMatrix& a) {
  const auto blocks = centro_blocks(a);
  const IntMatrix jc = flip_rows(blocks.c);
  return CentroSimilarForm{blocks.b - jc, blocks.b + jc};
}

Permutation similarity_permutation(const PrimitiveRoot& h) {
  const auto table = power_table(h);
  std::vector<std::uint32_t> map(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) map[i] = static_cast<std::uint32_t>(table[i]);
  return Permutation(std::move(map));
}

IntVector circulant_row(const OddPrime& p, unsigned m, const PrimitiveRoot& h) {
  return circulant_row(p, power_entries(p, m), h);
}

Permutation shift_generator(const PrimitiveRoot& h) {
  const std::uint64_t p = h.modulus().value();
  std::vector<std::uint32_t> map(p - 1);
  for (std::uint64_t i = 1; i <= p - 1; ++i)
    map[i - 1] = static_cast<std::uint32_t>(mul_mod(i, h.value(), p));
  return Permutation(std::move(map));
}

IntMatrix kernel_block_vectors(const OddPrime& p) {
  const std::uint64_t pv = p.value();
  if (pv < 5) throw std::invalid_argument("kernel_block_vectors: requires p >= 5");
  const auto n = static_cast<Eigen::Index>(pv - 1);
  const auto cols = static_cast<Eigen::Index>((pv - 1) / 2 - 1);
  IntMatrix k(n, cols);
  k.setConstant(Int(0));
  for (Eigen::Index c = 0; c < cols; ++c) {
    const Eigen::Index kk = c + 2;  // k ranges over 2..(p-1)/2
    k(0, c) = 1;
    k(n - 1, c) = 1;
    k(kk - 1, c) = -1;
    k(static_cast<Eigen::Index>(pv) - kk - 1, c) = -1;
  }
  return k;
}

}  // namespace maillet
