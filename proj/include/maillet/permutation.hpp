#pragma once

#include <cstdint>
#include <vector>

#include "maillet/numeric.hpp"

namespace maillet {

/// A permutation sigma of {1..n}, representing the matrix P with
/// P(i, sigma(i)) = 1. Under this convention (P*A)(i,:) = A(sigma(i),:) and
/// (P*A*P^T)(i,j) = A(sigma(i), sigma(j)).
class Permutation {
 public:
  /// map[i-1] = sigma(i), 1-based; must be a bijection of {1..n}.
  explicit Permutation(std::vector<std::uint32_t> map);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return map_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return map_[i - 1]; }
  bool is_identity() const;

  Permutation inverse() const;
  /// Matrix product: (a * b) has sigma(i) = b(a(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation power(std::uint64_t k) const;
  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Dense 0/1 matrix with entries of the requested scalar type.
  template <typename Scalar>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> to_matrix() const {
    const auto n = static_cast<Eigen::Index>(size());
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(n, n);
    m.setConstant(Scalar(0));
    for (Eigen::Index i = 0; i < n; ++i) m(i, map_[i] - 1) = Scalar(1);
    return m;
  }

  /// P * A * P^T without materializing P.
  template <typename Scalar>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> conjugate(
      const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) const {
    const auto n = static_cast<Eigen::Index>(size());
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) out(i, j) = a(map_[i] - 1, map_[j] - 1);
    return out;
  }

 private:
  std::vector<std::uint32_t> map_;
};

/// The reversal (anti-diagonal) permutation J of even order n: sigma(i) = n-i+1.
Permutation reversal(std::size_t n);

}  // namespace maillet
