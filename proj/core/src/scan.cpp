#include "divbound/verify/scan.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "divbound/parallel.hpp"
#include "divbound/precision.hpp"
#include "divbound/primes.hpp"
#include "divbound/rho.hpp"

namespace divbound {
namespace {

constexpr std::size_t kLogTableSize = 1 << 14;

const std::array<double, kLogTableSize>& log_table() {
  static const auto table = [] {
    std::array<double, kLogTableSize> t{};
    for (std::size_t i = 1; i < kLogTableSize; ++i) t[i] = std::log(static_cast<double>(i));
    return t;
  }();
  return table;
}

double log_small(std::uint32_t v) {
  return v < kLogTableSize ? log_table()[v] : std::log(static_cast<double>(v));
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

ScanReport scan_segment(std::uint64_t n_lo, std::uint64_t n_hi,
                        std::span<const std::uint64_t> base_primes) {
  if (n_lo < kScanMinN || n_lo > n_hi) {
    throw std::invalid_argument("scan_segment: need 17 <= n_lo <= n_hi");
  }
  const std::size_t len = n_hi - n_lo + 1;
  std::vector<std::uint32_t> tau(len, 1);
  std::vector<std::uint8_t> omega_count(len, 0);
  std::vector<std::uint64_t> smooth_part(len, 1);

  for (std::uint64_t p : base_primes) {
    if (p * p > n_hi) break;
    std::uint64_t first = (n_lo + p - 1) / p * p;
    for (std::uint64_t m = first; m <= n_hi; m += p) {
      std::size_t i = m - n_lo;
      tau[i] *= 2;
      ++omega_count[i];
      smooth_part[i] *= p;
    }
    // Each further power p^j dividing n turns the factor j into j + 1.
    std::uint64_t power = p;
    for (std::uint32_t j = 2; power <= n_hi / p; ++j) {
      power *= p;
      first = (n_lo + power - 1) / power * power;
      for (std::uint64_t m = first; m <= n_hi; m += power) {
        std::size_t i = m - n_lo;
        tau[i] = tau[i] / j * (j + 1);
        smooth_part[i] *= p;
      }
    }
  }

  ScanReport report;
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  report.max_rho = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint64_t n = n_lo + i;
    if (smooth_part[i] != n) {
      // Exactly one prime factor above sqrt(n_hi) remains.
      tau[i] *= 2;
      ++omega_count[i];
    }
    const double n_log = std::log(static_cast<double>(n));
    const double w = omega_count[i];
    double r = rho_value(n_log, w, log_small(tau[i]));
    if (std::abs(r - 2.0) < kEscalationBand) {
      HighReal precise = rho_value(boost::multiprecision::log(HighReal(n)), HighReal(omega_count[i]),
                                   boost::multiprecision::log(HighReal(tau[i])));
      r = static_cast<double>(precise);
      ++report.escalations;
    }
    ++report.count_checked;
    if (r > report.max_rho) {
      report.max_rho = r;
      report.argmax_n = n;
    }
    if (r >= 2.0 - kNumericMargin) report.violations.push_back({n, r});
  }
  return report;
}

ScanSummary scan_range(std::uint64_t n_lo, std::uint64_t n_hi, unsigned workers,
                       std::uint64_t segment_size) {
  if (n_lo < kScanMinN) throw std::invalid_argument("scan_range: n_lo must be >= 17");
  if (n_lo > n_hi) throw std::invalid_argument("scan_range: n_lo must be <= n_hi");
  if (n_hi > kScanHardCeiling) {
    throw std::invalid_argument("scan_range: n_hi must be <= " + std::to_string(kScanHardCeiling));
  }
  if (segment_size == 0) throw std::invalid_argument("scan_range: segment size must be >= 1");

  const std::vector<std::uint64_t> base = sieve_primes_upto(isqrt(n_hi));
  const std::uint64_t segments = (n_hi - n_lo) / segment_size + 1;

  ScanSummary summary;
  summary.segments.resize(segments);
  parallel_for(segments, workers, [&](std::size_t s) {
    std::uint64_t lo = n_lo + s * segment_size;
    std::uint64_t hi = std::min(n_hi, lo + segment_size - 1);
    summary.segments[s] = scan_segment(lo, hi, base);
  });

  ScanReport& total = summary.total;
  total.n_lo = n_lo;
  total.n_hi = n_hi;
  total.max_rho = -std::numeric_limits<double>::infinity();
  for (const auto& seg : summary.segments) {
    total.count_checked += seg.count_checked;
    total.escalations += seg.escalations;
    if (seg.max_rho > total.max_rho) {
      total.max_rho = seg.max_rho;
      total.argmax_n = seg.argmax_n;
    }
    total.violations.insert(total.violations.end(), seg.violations.begin(), seg.violations.end());
  }
  return summary;
}

}  // namespace divbound
