#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "maillet/matrices.hpp"
#include "maillet/numeric.hpp"
#include "maillet/zmod.hpp"

namespace maillet {

struct Check {
  std::string id;
  bool passed = false;
  std::string witness;  // offending indices/values on failure, capped at 512 chars
};

struct Subject {
  std::uint64_t p = 0;
  std::optional<unsigned> m;
  std::optional<std::string> c_digest;
  std::optional<std::string> c2_digest;
  std::uint64_t h = 0;
  std::optional<std::uint64_t> seed;
};

struct VerificationReport {
  Subject subject;
  std::vector<Check> checks;

  bool overall() const;
  void add(std::string id, bool passed, std::string witness = "");
  void append(VerificationReport other);  // keeps this report's subject
};

/// JSON object {subject, checks:[{id, passed, witness}], overall}.
std::string to_json_string(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

/// Short stable digest of an entry vector (for report subjects).
std::string entry_digest(const IntVector& c);

// Matrix-level checks; each returns a verdict with a witness on failure.
// They take the matrix as input so negative controls can corrupt it.
Check check_latin(std::string id, const IntMatrix& a);
Check check_centrosymmetric(std::string id, const IntMatrix& a);
Check check_constant_diagonal(std::string id, const IntMatrix& a, const Int& expected);
Check check_constant_antidiagonal(std::string id, const IntMatrix& a, const Int& expected);
Check check_normal(std::string id, const IntMatrix& a);
Check check_circulant_conjugation(std::string id, const IntMatrix& a, const Permutation& perm,
                                  const IntVector& first_row);
Check check_shift_polynomial(std::string id, const IntMatrix& a, const IntVector& c,
                             const PrimitiveRoot& h);

/// Latin-square structure, centrosymmetry, unit diagonal, (p-1)^m antidiagonal.
VerificationReport verify_basic(const OddPrime& p, unsigned m);

/// Determinant facts: divisibility by 4 (p >= 5) and by p, the p=3 closed
/// form 1-4^m, vanishing at m=1 for p >= 5, and the diagonal-dominance
/// regime (asserted only when its hypothesis (p-1)^m > sum_{k<=p-2} k^m holds).
VerificationReport verify_det_lemma(const OddPrime& p, unsigned m);

/// Circulant similarity, normality, shift-generator group and polynomial
/// reconstruction, transposition under h^{-1}, and the phi(p-1) circulant count.
VerificationReport verify_structure(const OddPrime& p, unsigned m, const PrimitiveRoot& h);

/// Closed-form eigenpairs: residuals, symmetry classes, the m=1 zero census,
/// the exact kernel identity, and spectral-vs-Bareiss determinant agreement.
VerificationReport verify_spectrum(const OddPrime& p, unsigned m, const PrimitiveRoot& h, double tol);

/// General-entry analogues of the structural and spectral checks, plus the
/// commuting-family and invertibility-criterion checks.
VerificationReport verify_general(const OddPrime& p, const IntVector& c, const IntVector& c2,
                                  const PrimitiveRoot& h, double tol);

struct MailletDeterminant {
  Int value;                      // det of the leading (p-1)/2 block of the m=1 matrix
  bool nonzero = false;
  bool divisible_by_p_power = false;  // p^{(p-3)/2} divides value
  Int quotient;                   // value / p^{(p-3)/2} when divisible
  bool quotient_flagged = false;  // informational: p divides the quotient again
};

/// The classical Maillet determinant facts for p >= 3 (p=3 is the
/// degenerate 1x1 block with determinant 1).
MailletDeterminant maillet_determinant(const OddPrime& p);

/// Length p-1 vector with pairwise distinct integer entries.
IntVector random_distinct_entries(const OddPrime& p, std::mt19937_64& rng);

}  // namespace maillet
