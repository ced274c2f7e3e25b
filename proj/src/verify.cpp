#include "maillet/verify.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "maillet/exact_linalg.hpp"
#include "maillet/spectral.hpp"

namespace maillet {

namespace {

constexpr std::size_t kWitnessCap = 512;

std::string cap(std::string s) {
  if (s.size() > kWitnessCap) s.resize(kWitnessCap);
  return s;
}

std::string str(const Int& v) { return v.get_str(); }

Check pass(std::string id, std::string note = "") { return Check{std::move(id), true, cap(std::move(note))}; }
Check fail(std::string id, std::string witness) { return Check{std::move(id), false, cap(std::move(witness))}; }

}  // namespace

bool VerificationReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void VerificationReport::add(std::string id, bool passed, std::string witness) {
  checks.push_back(Check{std::move(id), passed, cap(std::move(witness))});
}

void VerificationReport::append(VerificationReport other) {
  for (auto& c : other.checks) checks.push_back(std::move(c));
}

std::string to_json_string(const VerificationReport& report) {
  nlohmann::ordered_json subject;
  subject["p"] = report.subject.p;
  if (report.subject.m) subject["m"] = *report.subject.m;
  if (report.subject.c_digest) subject["c_digest"] = *report.subject.c_digest;
  if (report.subject.c2_digest) subject["c2_digest"] = *report.subject.c2_digest;
  subject["h"] = report.subject.h;
  if (report.subject.seed) subject["seed"] = *report.subject.seed;

  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"id", c.id}, {"passed", c.passed}, {"witness", c.witness}});

  nlohmann::ordered_json out;
  out["subject"] = std::move(subject);
  out["checks"] = std::move(checks);
  out["overall"] = report.overall();
  return out.dump(2);
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.id;
    if (!c.witness.empty()) os << "  [" << c.witness << "]";
    os << "\n";
  }
  os << (report.overall() ? "overall: pass" : "overall: FAIL") << "\n";
  return os.str();
}

std::string entry_digest(const IntVector& c) {
  // FNV-1a over the decimal entries.
  std::uint64_t hash = 1469598103934665603ull;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    for (char ch : c(i).get_str()) {
      hash ^= static_cast<unsigned char>(ch);
      hash *= 1099511628211ull;
    }
    hash ^= ',';
    hash *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << hash;
  return os.str();
}

Check check_latin(std::string id, const IntMatrix& a) {
  const auto n = a.rows();
  if (a.cols() != n || n == 0) return fail(std::move(id), "matrix is not square");
  std::vector<Int> ref(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) ref[static_cast<std::size_t>(j)] = a(0, j);
  std::sort(ref.begin(), ref.end());
  for (std::size_t k = 1; k < ref.size(); ++k)
    if (ref[k] == ref[k - 1])
      return fail(std::move(id), "first row repeats value " + str(ref[k]));

  std::vector<Int> line(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) line[static_cast<std::size_t>(j)] = a(i, j);
    std::sort(line.begin(), line.end());
    if (line != ref) return fail(std::move(id), "row " + std::to_string(i + 1) + " is not a permutation of row 1");
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) line[static_cast<std::size_t>(i)] = a(i, j);
    std::sort(line.begin(), line.end());
    if (line != ref)
      return fail(std::move(id), "column " + std::to_string(j + 1) + " is not a permutation of row 1");
  }
  return pass(std::move(id));
}

Check check_centrosymmetric(std::string id, const IntMatrix& a) {
  const auto n = a.rows();
  if (a.cols() != n) return fail(std::move(id), "matrix is not square");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (a(i, j) != a(n - 1 - i, n - 1 - j))
        return fail(std::move(id), "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")=" +
                                       str(a(i, j)) + " != mirrored " + str(a(n - 1 - i, n - 1 - j)));
  return pass(std::move(id));
}

Check check_constant_diagonal(std::string id, const IntMatrix& a, const Int& expected) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    if (a(i, i) != expected)
      return fail(std::move(id),
                  "diagonal entry " + std::to_string(i + 1) + " is " + str(a(i, i)) + ", expected " + str(expected));
  return pass(std::move(id));
}

Check check_constant_antidiagonal(std::string id, const IntMatrix& a, const Int& expected) {
  const auto n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    if (a(i, n - 1 - i) != expected)
      return fail(std::move(id), "antidiagonal entry " + std::to_string(i + 1) + " is " + str(a(i, n - 1 - i)) +
                                     ", expected " + str(expected));
  return pass(std::move(id));
}

Check check_normal(std::string id, const IntMatrix& a) {
  const IntMatrix left = a * a.transpose();
  const IntMatrix right = a.transpose() * a;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (left(i, j) != right(i, j))
        return fail(std::move(id), "A A^T and A^T A differ at (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + "): " + str(left(i, j)) + " vs " + str(right(i, j)));
  return pass(std::move(id));
}

Check check_circulant_conjugation(std::string id, const IntMatrix& a, const Permutation& perm,
                                  const IntVector& first_row) {
  const IntMatrix pm = perm.to_matrix<Int>();
  const IntMatrix conjugated = pm * a * pm.transpose();
  const IntMatrix expected = circulant(first_row);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (conjugated(i, j) != expected(i, j))
        return fail(std::move(id), "P A P^T differs from the circulant at (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + "): " + str(conjugated(i, j)) + " vs " +
                                       str(expected(i, j)));
  return pass(std::move(id));
}

Check check_shift_polynomial(std::string id, const IntMatrix& a, const IntVector& c,
                             const PrimitiveRoot& h) {
  const std::uint64_t p = h.modulus().value();
  const auto n = static_cast<Eigen::Index>(p - 1);
  if (a.rows() != n || a.cols() != n || c.size() != n)
    return fail(std::move(id), "dimension mismatch");
  IntMatrix sum(n, n);
  sum.setConstant(Int(0));
  std::uint64_t hk = 1;
  for (std::uint64_t k = 1; k <= p - 1; ++k) {
    hk = mul_mod(hk, h.value(), p);
    // Q^k has support (i, i h^k mod p); coefficient is c(h^k mod p).
    const Int& coeff = c(static_cast<Eigen::Index>(hk) - 1);
    for (std::uint64_t i = 1; i <= p - 1; ++i)
      sum(static_cast<Eigen::Index>(i) - 1, static_cast<Eigen::Index>(mul_mod(i, hk, p)) - 1) += coeff;
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (sum(i, j) != a(i, j))
        return fail(std::move(id), "polynomial in Q differs from the matrix at (" + std::to_string(i + 1) + "," +
                                       std::to_string(j + 1) + ")");
  return pass(std::move(id));
}

VerificationReport verify_basic(const OddPrime& p, unsigned m) {
  VerificationReport report;
  report.subject.p = p.value();
  report.subject.m = m;
  const IntMatrix a = maillet_matrix(p, m);
  report.checks.push_back(check_latin("basic.latin", a));
  report.checks.push_back(check_centrosymmetric("basic.centro", a));
  report.checks.push_back(check_constant_diagonal("basic.diag", a, Int(1)));
  report.checks.push_back(check_constant_antidiagonal("basic.antidiag", a, int_pow(p.value() - 1, m)));
  return report;
}

VerificationReport verify_det_lemma(const OddPrime& p, unsigned m) {
  VerificationReport report;
  report.subject.p = p.value();
  report.subject.m = m;
  const IntMatrix a = maillet_matrix(p, m);
  const Int det = det_bareiss(a);

  if (p.value() == 3) {
    const Int expected = 1 - int_pow(4ul, m);
    report.add("det.p3_closed", det == expected, "det=" + str(det) + " expected=" + str(expected));
  } else {
    report.add("det.mod4", mpz_divisible_ui_p(det.get_mpz_t(), 4) != 0, "det=" + str(det));
  }
  report.add("det.modp", mpz_divisible_ui_p(det.get_mpz_t(), static_cast<unsigned long>(p.value())) != 0,
             "det=" + str(det));
  if (m == 1 && p.value() >= 5) report.add("det.m1_zero", det == 0, "det=" + str(det));

  Int off_sum{0};
  for (std::uint64_t k = 1; k <= p.value() - 2; ++k) off_sum += int_pow(k, m);
  const Int anti = int_pow(p.value() - 1, m);
  const bool hypothesis = anti > off_sum;
  const bool threshold_met = int_pow(p.value() - 2, m + 1) <= int_pow(p.value() - 1, m);
  if (threshold_met)
    report.add("det.threshold", hypothesis,
               "(p-1)^m=" + str(anti) + " sum_{k<=p-2}k^m=" + str(off_sum));
  if (hypothesis) {
    // J A is then strictly diagonally dominant, hence invertible.
    const IntMatrix ja = a.colwise().reverse();
    bool dominant = true;
    std::string witness;
    for (Eigen::Index i = 0; i < ja.rows() && dominant; ++i) {
      Int off{0};
      for (Eigen::Index j = 0; j < ja.cols(); ++j)
        if (j != i) off += abs(ja(i, j));
      if (!(abs(ja(i, i)) > off)) {
        dominant = false;
        witness = "row " + std::to_string(i + 1) + ": |diag|=" + str(abs(ja(i, i))) + " offsum=" + str(off);
      }
    }
    report.add("det.dominance", dominant && det != 0,
               dominant ? "det=" + str(det) : witness);
  }
  return report;
}

VerificationReport verify_structure(const OddPrime& p, unsigned m, const PrimitiveRoot& h) {
  VerificationReport report;
  report.subject.p = p.value();
  report.subject.m = m;
  report.subject.h = h.value();
  const IntMatrix a = maillet_matrix(p, m);
  const Permutation perm = similarity_permutation(h);
  const IntVector row = circulant_row(p, m, h);

  report.checks.push_back(check_circulant_conjugation("struct.circulant", a, perm, row));
  report.checks.push_back(check_normal("struct.normal", a));
  report.checks.push_back(check_shift_polynomial("struct.qpoly", a, power_entries(p, m), h));

  // Q, Q^2, ..., Q^{p-1} = I form a cyclic group with pairwise disjoint supports.
  {
    const Permutation q = shift_generator(h);
    const std::uint64_t n = p.value() - 1;
    bool ok = q.power(n).is_identity();
    std::string witness = ok ? "" : "Q^(p-1) is not the identity";
    std::vector<Permutation> powers;
    Permutation acc = q;
    for (std::uint64_t k = 1; k <= n && ok; ++k) {
      powers.push_back(acc);
      acc = acc * q;
    }
    for (std::size_t x = 0; x < powers.size() && ok; ++x) {
      for (std::size_t y = x + 1; y < powers.size() && ok; ++y) {
        for (std::uint32_t i = 1; i <= n; ++i) {
          if (powers[x](i) == powers[y](i)) {
            ok = false;
            witness = "Q^" + std::to_string(x + 1) + " and Q^" + std::to_string(y + 1) +
                      " share support at row " + std::to_string(i);
            break;
          }
        }
      }
    }
    report.add("struct.qgroup", ok, witness);
  }

  {
    const IntVector inv_row = circulant_row(p, m, h.inverse());
    const IntVector transposed = transposed_circulant_row(row);
    bool ok = true;
    for (Eigen::Index k = 0; k < inv_row.size(); ++k)
      if (inv_row(k) != transposed(k)) ok = false;
    report.add("struct.transpose", ok,
               ok ? "" : "circulant from h^{-1} is not the transposed circulant");
  }

  {
    std::set<std::vector<Int>> rows;
    for (const auto& root : find_primitive_roots(p)) {
      const IntVector r = circulant_row(p, m, root);
      rows.emplace(r.data(), r.data() + r.size());
    }
    const std::uint64_t expected = euler_phi(p.value() - 1);
    report.add("struct.count", rows.size() == expected,
               "distinct circulants=" + std::to_string(rows.size()) + " phi(p-1)=" + std::to_string(expected));
  }
  return report;
}

namespace {

double residual_inf_norm(const ComplexMatrix& a, const Eigenpair& pair) {
  const ComplexVector r = a * pair.nu - pair.lambda * pair.nu;
  return r.lpNorm<Eigen::Infinity>();
}

// Symmetry checks get the fixed tolerance the eigenvector entries support:
// all entries are roots of unity, so 1e-10 is generous.
constexpr double kSymmetryTol = 1e-10;

void spectral_checks(VerificationReport& report, const std::string& prefix, const OddPrime& p,
                     const IntVector& c, const PrimitiveRoot& h, double tol) {
  const std::uint64_t n = p.value() - 1;
  const ComplexMatrix a = to_complex(maillet_matrix(p, c));
  Int max_abs{0};
  for (Eigen::Index k = 0; k < c.size(); ++k) max_abs = std::max(max_abs, Int(abs(c(k))));
  const double scale = static_cast<double>(n) * max_abs.get_d();

  double worst_residual = 0.0;
  unsigned worst_ell = 0;
  double worst_symmetry = 0.0;
  bool pm_one_ok = true;
  for (unsigned ell = 1; ell <= n; ++ell) {
    const Eigenpair pair = eigenpair(p, c, h, ell);
    const double res = residual_inf_norm(a, pair);
    if (res > worst_residual) {
      worst_residual = res;
      worst_ell = ell;
    }
    const double sign = ell % 2 == 0 ? 1.0 : -1.0;
    double sym = 0.0;
    for (Eigen::Index i = 0; i < pair.nu.size(); ++i)
      sym = std::max(sym, std::abs(pair.nu(pair.nu.size() - 1 - i) - sign * pair.nu(i)));
    worst_symmetry = std::max(worst_symmetry, sym);
    if (ell == n / 2) {
      // The +/-1 eigenvector: entries are unit reals, and J fixes it
      // exactly when p = 1 (mod 4).
      double flip = 0.0;
      for (Eigen::Index i = 0; i < pair.nu.size(); ++i) {
        if (std::abs(std::abs(pair.nu(i).real()) - 1.0) > kSymmetryTol ||
            std::abs(pair.nu(i).imag()) > kSymmetryTol)
          pm_one_ok = false;
        flip = std::max(flip, std::abs(pair.nu(pair.nu.size() - 1 - i) - pair.nu(i)));
      }
      const bool j_fixes = flip <= kSymmetryTol;
      if (j_fixes != (p.value() % 4 == 1)) pm_one_ok = false;
    }
  }
  report.add(prefix + ".residual", worst_residual <= tol * scale,
             "max residual " + std::to_string(worst_residual) + " at ell=" + std::to_string(worst_ell) +
                 " (bound " + std::to_string(tol * scale) + ")");
  report.add(prefix + ".symmetry", worst_symmetry <= kSymmetryTol && pm_one_ok,
             "max |J nu - (-1)^ell nu| = " + std::to_string(worst_symmetry));
}

}  // namespace

VerificationReport verify_spectrum(const OddPrime& p, unsigned m, const PrimitiveRoot& h, double tol) {
  VerificationReport report;
  report.subject.p = p.value();
  report.subject.m = m;
  report.subject.h = h.value();
  const IntVector c = power_entries(p, m);
  spectral_checks(report, "spec", p, c, h, tol);

  if (m == 1) {
    const auto zeros = exact_zero_eigenvalues(p, c, h);
    std::set<unsigned> expected;
    for (unsigned ell = 2; ell < p.value() - 1; ell += 2) expected.insert(ell);
    std::ostringstream os;
    os << "zeros at ell in {";
    for (unsigned z : zeros) os << z << ",";
    os << "}";
    report.add("spec.mone", zeros == expected, os.str());
  }

  if (p.value() >= 5) {
    const IntMatrix a1 = maillet_matrix(p, 1);
    const IntMatrix k = kernel_block_vectors(p);
    const IntMatrix prod = a1 * k;
    bool zero = true;
    for (Eigen::Index i = 0; i < prod.rows() && zero; ++i)
      for (Eigen::Index j = 0; j < prod.cols() && zero; ++j)
        if (prod(i, j) != 0) zero = false;
    report.add("spec.kernel", zero, zero ? "" : "A_{p,1} * kernel vectors != 0");
  }

  const Int spectral = det_spectral_exact(p, c, h);
  const Int bareiss = det_bareiss(maillet_matrix(p, m));
  report.add("spec.det", spectral == bareiss, "spectral=" + str(spectral) + " bareiss=" + str(bareiss));
  return report;
}

VerificationReport verify_general(const OddPrime& p, const IntVector& c, const IntVector& c2,
                                  const PrimitiveRoot& h, double tol) {
  VerificationReport report;
  report.subject.p = p.value();
  report.subject.c_digest = entry_digest(c);
  report.subject.c2_digest = entry_digest(c2);
  report.subject.h = h.value();

  const IntMatrix a = maillet_matrix(p, c);
  report.checks.push_back(check_latin("gen.latin", a));
  report.checks.push_back(check_centrosymmetric("gen.centro", a));
  report.checks.push_back(check_constant_diagonal("gen.diag", a, c(0)));
  report.checks.push_back(check_constant_antidiagonal("gen.antidiag", a, c(c.size() - 1)));
  report.checks.push_back(
      check_circulant_conjugation("gen.circulant", a, similarity_permutation(h), circulant_row(p, c, h)));
  report.checks.push_back(check_normal("gen.normal", a));
  report.checks.push_back(check_shift_polynomial("gen.qpoly", a, c, h));

  spectral_checks(report, "gen", p, c, h, tol);

  const Int spectral = det_spectral_exact(p, c, h);
  const Int bareiss = det_bareiss(a);
  report.add("gen.det", spectral == bareiss, "spectral=" + str(spectral) + " bareiss=" + str(bareiss));

  const bool no_unit_root = exact_zero_eigenvalues(p, c, h).empty();
  report.add("gen.invertible", (bareiss != 0) == no_unit_root,
             "det=" + str(bareiss) + (no_unit_root ? ", no root of f_c among the roots of unity"
                                                   : ", f_c vanishes at a root of unity"));

  {
    const IntMatrix a2 = maillet_matrix(p, c2);
    const IntMatrix at = a.transpose();
    const IntMatrix a2t = a2.transpose();
    const IntMatrix* family[4] = {&a, &a2, &at, &a2t};
    bool commute = true;
    std::string witness;
    for (int x = 0; x < 4 && commute; ++x) {
      for (int y = x + 1; y < 4 && commute; ++y) {
        const IntMatrix xy = (*family[x]) * (*family[y]);
        const IntMatrix yx = (*family[y]) * (*family[x]);
        for (Eigen::Index i = 0; i < xy.rows() && commute; ++i)
          for (Eigen::Index j = 0; j < xy.cols() && commute; ++j)
            if (xy(i, j) != yx(i, j)) {
              commute = false;
              witness = "members " + std::to_string(x) + " and " + std::to_string(y) + " do not commute at (" +
                        std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            }
      }
    }
    report.add("gen.commute", commute, witness);
  }
  return report;
}

MailletDeterminant maillet_determinant(const OddPrime& p) {
  MailletDeterminant out;
  if (p.value() == 3) {
    out.value = 1;
    out.nonzero = true;
    out.divisible_by_p_power = true;
    out.quotient = 1;
    return out;
  }
  const auto half = static_cast<Eigen::Index>((p.value() - 1) / 2);
  const IntMatrix b = maillet_matrix(p, 1).topLeftCorner(half, half);
  out.value = det_bareiss(b);
  out.nonzero = out.value != 0;
  const Int power = int_pow(p.value(), static_cast<unsigned long>((p.value() - 3) / 2));
  out.divisible_by_p_power = mpz_divisible_p(out.value.get_mpz_t(), power.get_mpz_t()) != 0;
  if (out.divisible_by_p_power) {
    out.quotient = out.value / power;
    out.quotient_flagged =
        mpz_divisible_ui_p(out.quotient.get_mpz_t(), static_cast<unsigned long>(p.value())) != 0;
  }
  return out;
}

IntVector random_distinct_entries(const OddPrime& p, std::mt19937_64& rng) {
  const auto n = static_cast<Eigen::Index>(p.value() - 1);
  std::uniform_int_distribution<long> dist(-9999, 9999);
  std::set<long> used;
  IntVector c(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    long v = dist(rng);
    while (used.contains(v)) v = dist(rng);
    used.insert(v);
    c(k) = v;
  }
  return c;
}

}  // namespace maillet
