#include "maillet/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace maillet {

Permutation::Permutation(std::vector<std::uint32_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (std::uint32_t v : map_) {
    if (v < 1 || v > map_.size() || seen[v - 1])
      throw std::invalid_argument("permutation map is not a bijection of {1..n}");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> map(n);
  std::iota(map.begin(), map.end(), 1u);
  return Permutation(std::move(map));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i] - 1] = static_cast<std::uint32_t>(i + 1);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::uint32_t> map(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) map[i] = b.map_[a.map_[i] - 1];
  return Permutation(std::move(map));
}

Permutation Permutation::power(std::uint64_t k) const {
  Permutation result = identity(size());
  Permutation base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

Permutation reversal(std::size_t n) {
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("reversal: order must be even and positive");
  std::vector<std::uint32_t> map(n);
  for (std::size_t i = 1; i <= n; ++i) map[i - 1] = static_cast<std::uint32_t>(n - i + 1);
  return Permutation(std::move(map));
}

}  // namespace maillet
