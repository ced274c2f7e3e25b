#pragma once

#include <cstdint>
#include <vector>

namespace maillet {

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

/// (a * b) mod m without overflow.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// (base ^ exp) mod m.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Distinct prime factors of n, by trial division, increasing.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

/// Euler's totient, by trial-division factorization.
std::uint64_t euler_phi(std::uint64_t n);

/// An odd prime modulus. Construction fails unless the value is a prime >= 3.
class OddPrime {
 public:
  explicit OddPrime(std::uint64_t value);
  std::uint64_t value() const { return value_; }
  friend bool operator==(const OddPrime&, const OddPrime&) = default;

 private:
  std::uint64_t value_;
};

/// An element of Z_p in canonical range [0, p).
struct Residue {
  std::uint64_t value;
  std::uint64_t modulus;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Remainder of a divided by p, in [0, p) for any signed a.
Residue mod_reduce(std::int64_t a, const OddPrime& p);

/// Multiplicative inverse in Z_p; throws std::domain_error for the zero element.
Residue mod_inverse(const Residue& a);

Residue mod_mul(const Residue& a, const Residue& b);

/// A generator of the multiplicative group of Z_p.
/// Construction verifies primitivity (h^((p-1)/q) != 1 for every prime q | p-1).
class PrimitiveRoot {
 public:
  PrimitiveRoot(const OddPrime& p, std::uint64_t h);
  std::uint64_t value() const { return h_; }
  const OddPrime& modulus() const { return p_; }
  PrimitiveRoot inverse() const;
  friend bool operator==(const PrimitiveRoot&, const PrimitiveRoot&) = default;

 private:
  OddPrime p_;
  std::uint64_t h_;
};

/// All primitive roots of Z_p in increasing order; the count is phi(p-1).
std::vector<PrimitiveRoot> find_primitive_roots(const OddPrime& p);

/// The least primitive root of Z_p.
PrimitiveRoot smallest_primitive_root(const OddPrime& p);

/// Entry j (1-based) is h^j mod p, for j = 1..p-1. The last entry is 1,
/// and entry k plus entry k+(p-1)/2 equals p for k = 1..(p-1)/2.
std::vector<std::uint64_t> power_table(const PrimitiveRoot& h);

}  // namespace maillet
