#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace maillet {

/// One cell of the invertibility scan over the (p, m) grid. Valid records
/// have methods_agree true; det_is_zero with m >= 2 marks a counterexample
/// to the conjecture that those matrices are invertible.
struct ScanRecord {
  std::uint64_t p = 0;
  unsigned m = 0;
  bool det_is_zero = false;
  std::size_t det_digits = 0;  // decimal digits of |det|
  bool mod4_ok = false;        // det divisible by 4 (vacuously true for p = 3)
  bool modp_ok = false;
  bool methods_agree = false;  // Bareiss == CRT == spectral
  std::uint64_t primitive_used = 0;
  std::int64_t elapsed_ms = 0;  // 0 unless timing was requested; see ScanOptions
};

struct ScanOptions {
  std::uint64_t p_max = 0;
  unsigned m_min = 1;
  unsigned m_max = 1;
  unsigned jobs = 1;
  /// Off by default so scan output is byte-identical across runs and job
  /// counts; when on, elapsed_ms carries wall-clock cell times.
  bool record_timing = false;
};

/// All records for odd primes p <= p_max and m in [m_min, m_max], in
/// (p, m) order regardless of job count.
std::vector<ScanRecord> scan_grid(const ScanOptions& options);

ScanRecord scan_cell(std::uint64_t p, unsigned m, bool record_timing);

extern const char* const kScanCsvHeader;
std::string to_csv_row(const ScanRecord& r);
std::string to_jsonl_row(const ScanRecord& r);

/// True if any record is a counterexample (det zero with m >= 2).
bool has_counterexample(const std::vector<ScanRecord>& records);

}  // namespace maillet
