#include "maillet/scan.hpp"

#include <atomic>
#include <chrono>
#include <nlohmann/json.hpp>
#include <thread>

#include "maillet/exact_linalg.hpp"
#include "maillet/matrices.hpp"
#include "maillet/spectral.hpp"
#include "maillet/zmod.hpp"

namespace maillet {

const char* const kScanCsvHeader = "p,m,det_is_zero,det_digits,mod4_ok,modp_ok,methods_agree,primitive_used,elapsed_ms";

ScanRecord scan_cell(std::uint64_t pv, unsigned m, bool record_timing) {
  const auto start = std::chrono::steady_clock::now();
  const OddPrime p(pv);
  const PrimitiveRoot h = smallest_primitive_root(p);
  const IntMatrix a = maillet_matrix(p, m);

  const Int bareiss = det_bareiss(a);
  const Int crt = det_modular_crt(a);
  const Int spectral = det_spectral_exact(p, power_entries(p, m), h);

  ScanRecord r;
  r.p = pv;
  r.m = m;
  r.methods_agree = bareiss == crt && crt == spectral;
  r.det_is_zero = bareiss == 0;
  r.det_digits = decimal_digit_count(bareiss);
  r.mod4_ok = pv == 3 || mpz_divisible_ui_p(bareiss.get_mpz_t(), 4) != 0;
  r.modp_ok = mpz_divisible_ui_p(bareiss.get_mpz_t(), static_cast<unsigned long>(pv)) != 0;
  r.primitive_used = h.value();
  if (record_timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
  return r;
}

std::vector<ScanRecord> scan_grid(const ScanOptions& options) {
  std::vector<std::pair<std::uint64_t, unsigned>> cells;
  for (std::uint64_t p = 3; p <= options.p_max; p += 2) {
    if (!is_prime_u64(p)) continue;
    for (unsigned m = options.m_min; m <= options.m_max; ++m) cells.emplace_back(p, m);
  }

  std::vector<ScanRecord> records(cells.size());
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      records[i] = scan_cell(cells[i].first, cells[i].second, options.record_timing);
    return records;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      records[i] = scan_cell(cells[i].first, cells[i].second, options.record_timing);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return records;
}

std::string to_csv_row(const ScanRecord& r) {
  std::string row = std::to_string(r.p) + "," + std::to_string(r.m) + ",";
  row += r.det_is_zero ? "true," : "false,";
  row += std::to_string(r.det_digits) + ",";
  row += r.mod4_ok ? "true," : "false,";
  row += r.modp_ok ? "true," : "false,";
  row += r.methods_agree ? "true," : "false,";
  row += std::to_string(r.primitive_used) + "," + std::to_string(r.elapsed_ms);
  return row;
}

std::string to_jsonl_row(const ScanRecord& r) {
  nlohmann::ordered_json j;
  j["p"] = r.p;
  j["m"] = r.m;
  j["det_is_zero"] = r.det_is_zero;
  j["det_digits"] = r.det_digits;
  j["mod4_ok"] = r.mod4_ok;
  j["modp_ok"] = r.modp_ok;
  j["methods_agree"] = r.methods_agree;
  j["primitive_used"] = r.primitive_used;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

bool has_counterexample(const std::vector<ScanRecord>& records) {
  for (const auto& r : records)
    if (r.m >= 2 && r.det_is_zero) return true;
  return false;
}

}  // namespace maillet
