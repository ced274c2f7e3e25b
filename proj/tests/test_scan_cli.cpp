#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "maillet/scan.hpp"

using namespace maillet;

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

CmdResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const std::string base = "/tmp/maillet_cli_test_" + std::to_string(getpid()) + "_" + std::to_string(counter++);
  const std::string out_path = base + ".out";
  const std::string err_path = base + ".err";
  const std::string cmd =
      env_prefix + " " + std::string(MAILLET_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
  const int rc = std::system(cmd.c_str());
  CmdResult result;
  result.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return result;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("scan_grid: m=1 determinants vanish for p >= 5, higher powers do not") {
  ScanOptions options;
  options.p_max = 13;
  options.m_min = 1;
  options.m_max = 3;
  const auto records = scan_grid(options);
  REQUIRE(records.size() == 5 * 3);  // p in {3,5,7,11,13}
  for (const auto& r : records) {
    CHECK(r.methods_agree);
    CHECK(r.mod4_ok);
    CHECK(r.modp_ok);
    CHECK(r.elapsed_ms == 0);  // timing off by default
    if (r.m == 1 && r.p >= 5)
      CHECK(r.det_is_zero);
    else
      CHECK_FALSE(r.det_is_zero);
  }
  CHECK_FALSE(has_counterexample(records));
  // ordering: sorted by p then m
  for (std::size_t i = 1; i < records.size(); ++i) {
    const bool ordered = records[i - 1].p < records[i].p ||
                         (records[i - 1].p == records[i].p && records[i - 1].m < records[i].m);
    CHECK(ordered);
  }
}

TEST_CASE("scan_grid: identical records for any job count") {
  ScanOptions options;
  options.p_max = 17;
  options.m_min = 1;
  options.m_max = 2;
  const auto one = scan_grid(options);
  options.jobs = 4;
  const auto four = scan_grid(options);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(to_csv_row(one[i]) == to_csv_row(four[i]));
    CHECK(to_jsonl_row(one[i]) == to_jsonl_row(four[i]));
  }
}

TEST_CASE("scan rows: pinned CSV header and row shape") {
  CHECK(std::string(kScanCsvHeader) ==
        "p,m,det_is_zero,det_digits,mod4_ok,modp_ok,methods_agree,primitive_used,elapsed_ms");
  const ScanRecord r = scan_cell(5, 2, false);
  CHECK(to_csv_row(r) == "5,2,false,5,true,true,true,2,0");  // det 30000 has 5 digits
  const auto j = nlohmann::json::parse(to_jsonl_row(r));
  CHECK(j["p"] == 5);
  CHECK(j["det_digits"] == 5);
  CHECK(j["primitive_used"] == 2);
}

TEST_CASE("cli matrix: text output matches the small displays") {
  const auto r3 = run_cli("matrix -p 3 -m 1");
  CHECK(r3.exit_code == 0);
  CHECK(r3.out == "1 2\n2 1\n");

  const auto r5 = run_cli("matrix -p 5 -m 1");
  CHECK(r5.exit_code == 0);
  CHECK(r5.out == "1 2 3 4\n3 1 4 2\n2 4 1 3\n4 3 2 1\n");

  const auto big = run_cli("matrix -p 3 -m 70 --format json");
  CHECK(big.exit_code == 0);
  const auto parsed = nlohmann::json::parse(big.out);
  CHECK(parsed["rows"][0][1] == "1180591620717411303424");  // 2^70, exact
}

TEST_CASE("cli matrix: non-prime p exits 2 with a usage message") {
  const auto r = run_cli("matrix -p 4 -m 1");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("p must be an odd prime") != std::string::npos);
  CHECK(run_cli("matrix -p 9 -m 1").exit_code == 2);
}

TEST_CASE("cli det: single-method and all-method outputs") {
  CHECK(run_cli("det -p 7 -m 1").out == "0\n");
  CHECK(run_cli("det -p 5 -m 2").out == "30000\n");
  CHECK(run_cli("det -p 5 -m 2 --method crt").out == "30000\n");
  CHECK(run_cli("det -p 5 -m 2 --method spectral").out == "30000\n");

  const auto all = run_cli("det -p 3 -m 5 --method all");
  CHECK(all.exit_code == 0);
  const auto lines = lines_of(all.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "bareiss  -1023");
  CHECK(lines[1] == "crt      -1023");
  CHECK(lines[2] == "spectral -1023");
  CHECK(lines[3] == "agree    true");
}

TEST_CASE("cli spectrum: zero flags and symmetry classes") {
  const auto r = run_cli("spectrum -p 5 -m 1 --json");
  REQUIRE(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.out);
  REQUIRE(parsed["eigenpairs"].size() == 4);
  const auto& pairs = parsed["eigenpairs"];
  CHECK(pairs[1]["ell"] == 2);
  CHECK(pairs[1]["exactly_zero"] == true);
  CHECK(pairs[3]["exactly_zero"] == false);
  CHECK(std::abs(pairs[3]["lambda_re"].get<double>() - 10.0) < 1e-9);
  CHECK(pairs[0]["symmetry"] == "skew");
  CHECK(pairs[1]["symmetry"] == "symmetric");
  CHECK(pairs[2]["symmetry"] == "skew");

  const auto text = run_cli("spectrum -p 5 -m 1");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("yes") != std::string::npos);
}

TEST_CASE("cli verify: pass, JSON shape, and non-prime rejection") {
  CHECK(run_cli("verify -p 13 -m 1").exit_code == 0);
  CHECK(run_cli("verify -p 7 -m 2").exit_code == 0);
  CHECK(run_cli("verify -p 9 -m 1").exit_code == 2);

  const auto r = run_cli("verify -p 7 -m 2 --json");
  REQUIRE(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed["overall"] == true);
  CHECK(parsed["subject"]["p"] == 7);
  CHECK(parsed["subject"].contains("seed"));
  bool saw_mone = false;
  for (const auto& check : parsed["checks"])
    if (check["id"] == "spec.mone") saw_mone = true;
  CHECK_FALSE(saw_mone);  // m = 2
}

TEST_CASE("cli verify: seed controls the random vectors and is recorded") {
  const auto a = run_cli("verify -p 7 -m 1 --json", "MAILLET_SEED=12345");
  const auto b = run_cli("verify -p 7 -m 1 --json", "MAILLET_SEED=12345");
  const auto c = run_cli("verify -p 7 -m 1 --json", "MAILLET_SEED=999");
  CHECK(a.out == b.out);
  const auto pa = nlohmann::json::parse(a.out);
  const auto pc = nlohmann::json::parse(c.out);
  CHECK(pa["subject"]["seed"] == 12345);
  CHECK(pc["subject"]["seed"] == 999);
  CHECK(pa["subject"]["c_digest"] != pc["subject"]["c_digest"]);
  CHECK(pc["overall"] == true);
}

TEST_CASE("cli verify: a failing suite exits 1") {
  const std::string path1 = "/tmp/maillet_cli_bad_c1.txt";
  const std::string path2 = "/tmp/maillet_cli_bad_c2.txt";
  std::ofstream(path1) << "1\n1\n2\n3\n";  // repeated entries break gen.latin
  std::ofstream(path2) << "4\n5\n6\n7\n";
  const auto r = run_cli("verify -p 5 -m 1 --general " + path1 + " " + path2);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("FAIL gen.latin") != std::string::npos);
  CHECK(r.out.find("overall: FAIL") != std::string::npos);
  std::remove(path1.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("cli det: primitive override keeps the spectral method in agreement") {
  const auto r = run_cli("det -p 7 -m 2 -h 5 --method all");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("agree    true") != std::string::npos);
  CHECK(run_cli("det -p 7 -m 2 -h 2 --method spectral").exit_code == 2);  // 2 is not primitive mod 7
}

TEST_CASE("cli verify: explicit entry-vector files") {
  const std::string path1 = "/tmp/maillet_cli_c1.txt";
  const std::string path2 = "/tmp/maillet_cli_c2.txt";
  std::ofstream(path1) << "3\n-7\n22\n5\n11\n-1\n";
  std::ofstream(path2) << "1\n8\n27\n64\n125\n216\n";
  const auto r = run_cli("verify -p 7 -m 1 --general " + path1 + " " + path2 + " --json");
  CHECK(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.out);
  CHECK_FALSE(parsed["subject"].contains("seed"));  // no randomness involved
  std::remove(path1.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("cli maillet: the p=5 facts") {
  const auto r = run_cli("maillet -p 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("value                -5\n") != std::string::npos);
  CHECK(r.out.find("nonzero              true") != std::string::npos);
  CHECK(r.out.find("divides  true") != std::string::npos);
  CHECK(r.out.find("quotient             -1") != std::string::npos);
}

TEST_CASE("cli wavelet: holds vs indeterminate") {
  const auto holds = run_cli("wavelet -p 3 -m 2");
  CHECK(holds.exit_code == 0);
  CHECK(holds.out.find("holds") == 0);
  const auto indeterminate = run_cli("wavelet -p 5 -m 1");
  CHECK(indeterminate.exit_code == 0);
  CHECK(indeterminate.out.find("indeterminate") == 0);
}

TEST_CASE("cli scan: csv stream, summary on stderr, exit codes") {
  const auto r = run_cli("scan --p-max 13 --m-min 1 --m-max 3");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1 + 15);
  CHECK(lines[0] == std::string(kScanCsvHeader));
  CHECK(r.err.find("0 counterexample(s)") != std::string::npos);
  // the m=1 rows for p >= 5 are the known singular family
  CHECK(lines[1] == "3,1,false,1,true,true,true,2,0");
  CHECK(lines[4].find("5,1,true") == 0);

  CHECK(run_cli("scan --p-max 13 --m-min 0 --m-max 2").exit_code == 2);
  CHECK(run_cli("scan --p-max 2 --m-min 1 --m-max 2").exit_code == 2);
  CHECK(run_cli("scan --p-max 13 --m-min 3 --m-max 2").exit_code == 2);
}

TEST_CASE("cli scan: byte-identical output across job counts; jsonl rows parse") {
  const auto one = run_cli("scan --p-max 17 --m-min 1 --m-max 2 --jobs 1");
  const auto four = run_cli("scan --p-max 17 --m-min 1 --m-max 2 --jobs 4");
  CHECK(one.exit_code == 0);
  CHECK(four.exit_code == 0);
  CHECK(one.out == four.out);

  const auto jsonl = run_cli("scan --p-max 13 --m-min 2 --m-max 2 --out jsonl --jobs 3");
  CHECK(jsonl.exit_code == 0);
  for (const auto& line : lines_of(jsonl.out)) {
    const auto row = nlohmann::json::parse(line);
    CHECK(row["methods_agree"] == true);
    CHECK(row["det_is_zero"] == false);
  }
}

TEST_CASE("cli scan: --timing keeps the schema and is the only source of nonzero elapsed_ms") {
  const auto timed = run_cli("scan --p-max 7 --m-min 1 --m-max 2 --timing");
  CHECK(timed.exit_code == 0);
  const auto lines = lines_of(timed.out);
  REQUIRE(lines.size() == 1 + 6);
  CHECK(lines[0] == std::string(kScanCsvHeader));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    // elapsed_ms is the last field and must parse as a nonnegative integer
    const auto pos = lines[i].rfind(',');
    REQUIRE(pos != std::string::npos);
    const std::string elapsed = lines[i].substr(pos + 1);
    CHECK(!elapsed.empty());
    CHECK(elapsed.find_first_not_of("0123456789") == std::string::npos);
  }
}

TEST_CASE("cli c-file handling: matrix round trip and malformed input") {
  const std::string path = "/tmp/maillet_cli_cfile.txt";
  std::ofstream(path) << "10\n20\n30\n40\n";
  const auto r = run_cli("matrix -p 5 --c-file " + path);
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "10 20 30 40");
  CHECK(lines[1] == "30 10 40 20");

  const auto det = run_cli("det -p 5 --c-file " + path + " --method all");
  CHECK(det.exit_code == 0);
  CHECK(det.out.find("agree    true") != std::string::npos);

  std::ofstream(path) << "10\n20\n30\n";  // wrong count
  CHECK(run_cli("matrix -p 5 --c-file " + path).exit_code == 2);
  std::ofstream(path) << "10\nnot-a-number\n30\n40\n";
  CHECK(run_cli("matrix -p 5 --c-file " + path).exit_code == 2);
  CHECK(run_cli("matrix -p 5 --c-file /tmp/does_not_exist_maillet.txt").exit_code == 2);
  std::remove(path.c_str());
}

TEST_CASE("cli: unknown subcommand and missing arguments exit 2") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("matrix").exit_code == 2);
  CHECK(run_cli("det").exit_code == 2);
}
