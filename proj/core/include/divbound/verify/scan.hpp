#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace divbound {

struct ScanViolation {
  std::uint64_t n;
  double rho;
};

/// rho(n) for every n in [n_lo, n_hi].
struct ScanReport {
  std::uint64_t n_lo = 0;
  std::uint64_t n_hi = 0;
  double max_rho = 0.0;
  std::uint64_t argmax_n = 0;
  std::uint64_t count_checked = 0;
  std::uint64_t escalations = 0;
  std::vector<ScanViolation> violations;  // rho(n) >= 2 - margin
};

struct ScanSummary {
  ScanReport total;
  std::vector<ScanReport> segments;  // ascending, contiguous
};

inline constexpr std::uint64_t kScanMinN = 17;
inline constexpr std::uint64_t kScanDefaultCeiling = 100000000;   // 10^8
inline constexpr std::uint64_t kScanFullCeiling = 1000000000;    // 10^9
inline constexpr std::uint64_t kScanHardCeiling = 1000000000000;  // 10^12
inline constexpr std::uint64_t kScanDefaultSegment = 1 << 20;

// One segment; `base_primes` must contain every prime <= sqrt(n_hi).
ScanReport scan_segment(std::uint64_t n_lo, std::uint64_t n_hi,
                        std::span<const std::uint64_t> base_primes);

// Sieves [n_lo, n_hi] segment by segment (exact tau and omega from a
// segmented prime-power sieve) and evaluates rho everywhere. Requires
// 17 <= n_lo <= n_hi <= 10^12, std::invalid_argument otherwise.
ScanSummary scan_range(std::uint64_t n_lo, std::uint64_t n_hi, unsigned workers = 0,
                       std::uint64_t segment_size = kScanDefaultSegment);

}  // namespace divbound
