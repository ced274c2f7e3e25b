// Command-line front end: build matrices, compute exact determinants and
// spectra, run the verification suite, and scan the invertibility grid.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <random>
#include <string>

#include "maillet/exact_linalg.hpp"
#include "maillet/matrices.hpp"
#include "maillet/scan.hpp"
#include "maillet/spectral.hpp"
#include "maillet/verify.hpp"
#include "maillet/wavelet.hpp"
#include "maillet/zmod.hpp"

namespace {

using namespace maillet;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

IntVector read_entry_file(const std::string& path, std::uint64_t p) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open entry file: " + path);
  std::vector<Int> entries;
  std::string line;
  while (std::getline(in, line)) {
    // strip whitespace; skip blank lines
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(begin, end - begin + 1);
    Int value;
    if (mpz_set_str(value.get_mpz_t(), token.c_str(), 10) != 0)
      throw std::invalid_argument("entry file: '" + token + "' is not an integer");
    entries.push_back(std::move(value));
  }
  if (entries.size() != p - 1)
    throw std::invalid_argument("entry file must contain exactly p-1 integers, one per line (got " +
                                std::to_string(entries.size()) + ", need " + std::to_string(p - 1) + ")");
  IntVector c(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) c(static_cast<Eigen::Index>(i)) = entries[i];
  return c;
}

PrimitiveRoot resolve_primitive(const OddPrime& p, std::optional<std::uint64_t> override_h) {
  if (override_h) return PrimitiveRoot(p, *override_h);
  return smallest_primitive_root(p);
}

std::uint64_t verifier_seed() {
  if (const char* env = std::getenv("MAILLET_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("MAILLET_SEED must be an unsigned integer");
    }
  }
  return 577215664901532ull;  // fixed default for reproducible reports
}

int run_matrix(std::uint64_t pv, unsigned m, const std::optional<std::string>& c_file,
               const std::string& format) {
  const OddPrime p(pv);
  const IntMatrix a = c_file ? maillet_matrix(p, read_entry_file(*c_file, pv)) : maillet_matrix(p, m);
  if (format == "json") {
    nlohmann::ordered_json out;
    out["p"] = pv;
    if (!c_file) out["m"] = m;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j).get_str());
      rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    std::cout << out.dump(2) << "\n";
  } else {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        if (j) std::cout << ' ';
        std::cout << a(i, j).get_str();
      }
      std::cout << '\n';
    }
  }
  return kExitPass;
}

int run_det(std::uint64_t pv, unsigned m, const std::optional<std::string>& c_file,
            const std::string& method, std::optional<std::uint64_t> h_override) {
  const OddPrime p(pv);
  const IntVector c = c_file ? read_entry_file(*c_file, pv) : power_entries(p, m);
  const IntMatrix a = maillet_matrix(p, c);
  if (method == "bareiss") {
    std::cout << det_bareiss(a).get_str() << "\n";
    return kExitPass;
  }
  if (method == "crt") {
    std::cout << det_modular_crt(a).get_str() << "\n";
    return kExitPass;
  }
  if (method == "spectral") {
    std::cout << det_spectral_exact(p, c, resolve_primitive(p, h_override)).get_str() << "\n";
    return kExitPass;
  }
  const Int bareiss = det_bareiss(a);
  const Int crt = det_modular_crt(a);
  const Int spectral = det_spectral_exact(p, c, resolve_primitive(p, h_override));
  const bool agree = bareiss == crt && crt == spectral;
  std::cout << "bareiss  " << bareiss.get_str() << "\n";
  std::cout << "crt      " << crt.get_str() << "\n";
  std::cout << "spectral " << spectral.get_str() << "\n";
  std::cout << "agree    " << (agree ? "true" : "false") << "\n";
  return agree ? kExitPass : kExitCheckFailure;
}

int run_spectrum(std::uint64_t pv, unsigned m, std::optional<std::uint64_t> h_override, bool as_json) {
  const OddPrime p(pv);
  const PrimitiveRoot h = resolve_primitive(p, h_override);
  const Spectrum s = compute_spectrum(p, m, h);
  if (as_json) {
    nlohmann::ordered_json out;
    out["p"] = s.p;
    out["m"] = m;
    out["h"] = s.h;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : s.entries) {
      entries.push_back({{"ell", e.ell},
                         {"lambda_re", e.lambda.real()},
                         {"lambda_im", e.lambda.imag()},
                         {"exactly_zero", e.exactly_zero},
                         {"symmetry", e.symmetry == SymmetryClass::symmetric ? "symmetric" : "skew"}});
    }
    out["eigenpairs"] = std::move(entries);
    std::cout << out.dump(2) << "\n";
    return kExitPass;
  }
  std::cout << "# p=" << s.p << " m=" << m << " h=" << s.h << "\n";
  std::cout << "ell\tre(lambda)\tim(lambda)\tzero\tclass\n";
  char buf[64];
  for (const auto& e : s.entries) {
    std::snprintf(buf, sizeof buf, "%.12g\t%.12g", e.lambda.real(), e.lambda.imag());
    std::cout << e.ell << '\t' << buf << '\t' << (e.exactly_zero ? "yes" : "no") << '\t'
              << (e.symmetry == SymmetryClass::symmetric ? "symmetric" : "skew") << "\n";
  }
  return kExitPass;
}

int run_verify(std::uint64_t pv, unsigned m, std::optional<std::uint64_t> h_override,
               const std::vector<std::string>& general_files, double tol, bool as_json) {
  const OddPrime p(pv);
  const PrimitiveRoot h = resolve_primitive(p, h_override);

  VerificationReport report;
  report.subject.p = pv;
  report.subject.m = m;
  report.subject.h = h.value();

  report.append(verify_basic(p, m));
  report.append(verify_det_lemma(p, m));
  report.append(verify_structure(p, m, h));
  report.append(verify_spectrum(p, m, h, tol));

  IntVector c, c2;
  if (!general_files.empty()) {
    c = read_entry_file(general_files[0], pv);
    c2 = read_entry_file(general_files[1], pv);
  } else {
    const std::uint64_t seed = verifier_seed();
    report.subject.seed = seed;
    std::mt19937_64 rng(seed);
    c = random_distinct_entries(p, rng);
    c2 = random_distinct_entries(p, rng);
  }
  report.subject.c_digest = entry_digest(c);
  report.subject.c2_digest = entry_digest(c2);
  report.append(verify_general(p, c, c2, h, tol));

  std::cout << (as_json ? to_json_string(report) : to_text(report));
  if (as_json) std::cout << "\n";
  return report.overall() ? kExitPass : kExitCheckFailure;
}

int run_scan(std::uint64_t p_max, unsigned m_min, unsigned m_max, unsigned jobs, const std::string& out_format,
             bool timing) {
  if (m_min < 1 || m_max < m_min || p_max < 3)
    throw std::invalid_argument("scan: need --p-max >= 3 and 1 <= m-min <= m-max");
  ScanOptions options;
  options.p_max = p_max;
  options.m_min = m_min;
  options.m_max = m_max;
  options.jobs = jobs;
  options.record_timing = timing;
  const auto records = scan_grid(options);

  if (out_format == "jsonl") {
    for (const auto& r : records) std::cout << to_jsonl_row(r) << "\n";
  } else {
    std::cout << kScanCsvHeader << "\n";
    for (const auto& r : records) std::cout << to_csv_row(r) << "\n";
  }

  bool all_agree = true;
  std::size_t counterexamples = 0;
  for (const auto& r : records) {
    all_agree = all_agree && r.methods_agree;
    if (r.m >= 2 && r.det_is_zero) ++counterexamples;
  }
  std::cerr << "scan: " << records.size() << " cells, " << counterexamples << " counterexample(s), methods "
            << (all_agree ? "agree" : "DISAGREE") << "\n";
  return (counterexamples == 0 && all_agree) ? kExitPass : kExitCheckFailure;
}

int run_maillet(std::uint64_t pv) {
  const OddPrime p(pv);
  const MailletDeterminant d = maillet_determinant(p);
  std::cout << "value                " << d.value.get_str() << "\n";
  std::cout << "nonzero              " << (d.nonzero ? "true" : "false") << "\n";
  std::cout << "p^((p-3)/2) divides  " << (d.divisible_by_p_power ? "true" : "false") << "\n";
  if (d.divisible_by_p_power) {
    std::cout << "quotient             " << d.quotient.get_str() << "\n";
    if (d.quotient_flagged) std::cout << "note: quotient is divisible by p again\n";
  }
  return (d.nonzero && d.divisible_by_p_power) ? kExitPass : kExitCheckFailure;
}

int run_wavelet(std::uint64_t pv, unsigned m, double tol) {
  const OddPrime p(pv);
  const TauOrderResult r = check_tau_order(p, m, tol);
  // the only non-exact verdicts in the tool; label them as such
  switch (r.status) {
    case TauOrderStatus::holds:
      std::cout << "holds [numeric] (max derivative entry " << r.max_entry << ")\n";
      return kExitPass;
    case TauOrderStatus::indeterminate:
      std::cout << "indeterminate: the matrix is singular, the criterion's hypothesis fails\n";
      return kExitPass;
    case TauOrderStatus::violated:
      std::cout << "violated [numeric] (max derivative entry " << r.max_entry << " <= tol " << tol
                << ")\n";
      return kExitCheckFailure;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for generalized Maillet matrices"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);

  std::uint64_t pv = 0;
  unsigned m_value = 1;
  std::optional<std::string> c_file;
  std::optional<std::uint64_t> h_override;
  double tol = 1e-9;
  bool as_json = false;

  auto add_common = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "print help and exit");
    return sub;
  };

  auto* matrix = add_common(app.add_subcommand("matrix", "print a Maillet matrix"));
  std::string matrix_format = "text";
  matrix->add_option("-p", pv, "odd prime modulus")->required();
  auto* matrix_m = matrix->add_option("-m", m_value, "power applied to the residues");
  auto* matrix_c = matrix->add_option("--c-file", c_file, "entry vector file: one integer per line, p-1 lines");
  matrix_m->excludes(matrix_c);
  matrix->add_option("--format", matrix_format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* det = add_common(app.add_subcommand("det", "exact determinant"));
  std::string det_method = "bareiss";
  det->add_option("-p", pv, "odd prime modulus")->required();
  auto* det_m = det->add_option("-m", m_value, "power applied to the residues");
  auto* det_c = det->add_option("--c-file", c_file, "entry vector file");
  det_m->excludes(det_c);
  det->add_option("--method", det_method, "determinant algorithm")
      ->check(CLI::IsMember({"bareiss", "crt", "spectral", "all"}));
  det->add_option("-h,--primitive", h_override, "primitive root override (spectral method)");

  auto* spectrum = add_common(app.add_subcommand("spectrum", "closed-form eigenpairs"));
  spectrum->add_option("-p", pv, "odd prime modulus")->required();
  spectrum->add_option("-m", m_value, "power applied to the residues");
  spectrum->add_option("-h,--primitive", h_override, "primitive root override");
  spectrum->add_flag("--json", as_json, "emit JSON");

  auto* verify = add_common(app.add_subcommand("verify", "run the verification suite"));
  std::vector<std::string> general_files;
  verify->add_option("-p", pv, "odd prime modulus")->required();
  verify->add_option("-m", m_value, "power applied to the residues");
  verify->add_option("-h,--primitive", h_override, "primitive root override");
  verify->add_option("--general", general_files, "two entry vector files for the general-entry checks")
      ->expected(2);
  verify->add_option("--tol", tol, "eigen-residual tolerance scale");
  verify->add_flag("--json", as_json, "emit JSON report");

  auto* scan = add_common(app.add_subcommand("scan", "scan the (p, m) grid for counterexamples"));
  std::uint64_t p_max = 0;
  unsigned m_min = 1, m_max = 1, jobs = 1;
  std::string out_format = "csv";
  bool timing = false;
  scan->add_option("--p-max", p_max, "largest prime to scan")->required();
  scan->add_option("--m-min", m_min, "smallest power")->required();
  scan->add_option("--m-max", m_max, "largest power")->required();
  scan->add_option("--jobs", jobs, "worker threads");
  scan->add_option("--out", out_format, "row format")->check(CLI::IsMember({"csv", "jsonl"}));
  scan->add_flag("--timing", timing, "fill elapsed_ms with wall-clock times (breaks byte-reproducibility)");

  auto* maillet_cmd = add_common(app.add_subcommand("maillet", "classical Maillet determinant facts"));
  maillet_cmd->add_option("-p", pv, "odd prime modulus")->required();

  auto* wavelet = add_common(app.add_subcommand("wavelet", "order-of-zeros criterion for tau"));
  wavelet->add_option("-p", pv, "odd prime modulus")->required();
  wavelet->add_option("-m", m_value, "power applied to the residues")->required();
  double wavelet_tol = 1e-8;
  wavelet->add_option("--tol", wavelet_tol, "nonzero threshold for the derivative vector");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (matrix->parsed()) return run_matrix(pv, m_value, c_file, matrix_format);
    if (det->parsed()) return run_det(pv, m_value, c_file, det_method, h_override);
    if (spectrum->parsed()) return run_spectrum(pv, m_value, h_override, as_json);
    if (verify->parsed()) return run_verify(pv, m_value, h_override, general_files, tol, as_json);
    if (scan->parsed()) return run_scan(p_max, m_min, m_max, jobs, out_format, timing);
    if (maillet_cmd->parsed()) return run_maillet(pv);
    if (wavelet->parsed()) return run_wavelet(pv, m_value, wavelet_tol);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
