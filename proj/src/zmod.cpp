#include "maillet/zmod.hpp"

#include <array>
#include <stdexcept>

namespace maillet {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all n < 2^64 (Sorenson & Webster).
  constexpr std::array<std::uint64_t, 12> witnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t a : witnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; q += (q == 2) ? 1 : 2) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
  std::uint64_t phi = n;
  for (std::uint64_t q : distinct_prime_factors(n)) phi -= phi / q;
  return phi;
}

OddPrime::OddPrime(std::uint64_t value) : value_(value) {
  if (value < 3 || value % 2 == 0 || !is_prime_u64(value))
    throw std::invalid_argument("p must be an odd prime");
}

Residue mod_reduce(std::int64_t a, const OddPrime& p) {
  const std::int64_t m = static_cast<std::int64_t>(p.value());
  std::int64_t r = a % m;
  if (r < 0) r += m;
  return Residue{static_cast<std::uint64_t>(r), p.value()};
}

Residue mod_inverse(const Residue& a) {
  if (a.value == 0) throw std::domain_error("mod_inverse: zero is not invertible");
  return Residue{pow_mod(a.value, a.modulus - 2, a.modulus), a.modulus};
}

Residue mod_mul(const Residue& a, const Residue& b) {
  if (a.modulus != b.modulus) throw std::invalid_argument("mod_mul: modulus mismatch");
  return Residue{mul_mod(a.value, b.value, a.modulus), a.modulus};
}

namespace {

bool is_primitive(std::uint64_t h, std::uint64_t p, const std::vector<std::uint64_t>& factors_of_p_minus_1) {
  if (h % p == 0) return false;
  for (std::uint64_t q : factors_of_p_minus_1)
    if (pow_mod(h, (p - 1) / q, p) == 1) return false;
  return true;
}

}  // namespace

PrimitiveRoot::PrimitiveRoot(const OddPrime& p, std::uint64_t h) : p_(p), h_(h % p.value()) {
  const auto factors = distinct_prime_factors(p.value() - 1);
  if (!is_primitive(h_, p.value(), factors))
    throw std::invalid_argument("h is not a primitive root of Z_p");
}

PrimitiveRoot PrimitiveRoot::inverse() const {
  return PrimitiveRoot(p_, mod_inverse(Residue{h_, p_.value()}).value);
}

std::vector<PrimitiveRoot> find_primitive_roots(const OddPrime& p) {
  const auto factors = distinct_prime_factors(p.value() - 1);
  std::vector<PrimitiveRoot> roots;
  for (std::uint64_t h = 2; h < p.value(); ++h)
    if (is_primitive(h, p.value(), factors)) roots.emplace_back(p, h);
  return roots;
}

PrimitiveRoot smallest_primitive_root(const OddPrime& p) {
  const auto factors = distinct_prime_factors(p.value() - 1);
  for (std::uint64_t h = 2; h < p.value(); ++h)
    if (is_primitive(h, p.value(), factors)) return PrimitiveRoot(p, h);
  throw std::logic_error("no primitive root found");  // unreachable for prime p
}

std::vector<std::uint64_t> power_table(const PrimitiveRoot& h) {
  const std::uint64_t p = h.modulus().value();
  std::vector<std::uint64_t> table(p - 1);
  std::uint64_t acc = 1;
  for (std::uint64_t j = 1; j <= p - 1; ++j) {
    acc = mul_mod(acc, h.value(), p);
    table[j - 1] = acc;
  }
  return table;
}

}  // namespace maillet
