#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "divbound/arith.hpp"
#include "divbound/primes.hpp"
#include "divbound/verify/grid.hpp"

namespace divbound {

struct GridParams {
  double delta;
  double m1;
  double threshold;
};

// 44 <= k <= 10999: grid over [log k, 1.8 log k].
inline constexpr GridParams kMidParams{0.002, 215.0, 2.0};
inline constexpr std::size_t kMidFirstK = 44;
inline constexpr std::size_t kMidLastK = 10999;

// 1 <= k <= 43, k != 2: grid over [loglog max(10^9, n_k), 9.36].
inline constexpr GridParams kSmallParams{0.00004, 165.0, 2.0};
inline constexpr std::size_t kSmallLastK = 43;
inline constexpr double kSmallUpperX = 9.36;

// k = 2: grid over [4, 9.36] plus exhaustion of 2^a 3^b below x = 4.
inline constexpr double kK2LowerX = 4.0;
inline constexpr std::uint32_t kK2MaxA = 77;
inline constexpr std::uint32_t kK2MaxB = 49;

// k >= 11000 is handled analytically for x >= 11.66.
inline constexpr std::size_t kLargeFirstK = 11000;
inline constexpr double kLargeMinX = 11.66;

// `params` overrides delta / m1 / threshold; the defaults are the certified values.
GridCertificate verify_case_mid(const PrimeTable& table, std::size_t k, bool escalate = true,
                                const GridParams& params = kMidParams);
GridCertificate verify_case_small(const PrimeTable& table, std::size_t k, bool escalate = true,
                                  const GridParams& params = kSmallParams);

// Certificates for every k in [k_lo, k_hi], ordered by k regardless of the
// worker count.
std::vector<GridCertificate> verify_mid_range(const PrimeTable& table, std::size_t k_lo,
                                              std::size_t k_hi, unsigned workers,
                                              bool escalate = true,
                                              const GridParams& params = kMidParams);
// k in [k_lo, k_hi] minus {2}.
std::vector<GridCertificate> verify_small_range(const PrimeTable& table, std::size_t k_lo,
                                                std::size_t k_hi, unsigned workers,
                                                bool escalate = true,
                                                const GridParams& params = kSmallParams);

struct K2Result {
  GridCertificate grid;
  Factorization champion;
  double champion_rho = 0.0;
  Factorization runner_up;
  double runner_up_rho = 0.0;
  std::uint64_t candidates = 0;    // 2^a 3^b with n > 10^9 and loglog n <= 4
  std::size_t at_least_two = 0;    // candidates with rho >= 2 - margin
  std::size_t maximizer_count = 0;
  bool pass = false;               // grid passes and 2^26 3^16 is the unique maximizer
};

K2Result verify_k2(const PrimeTable& table, bool escalate = true);

enum class LargeRegime : std::uint8_t {
  kDirect,            // x < log k: the omega >= 74 bound applies directly
  kExcludedByKappa,   // theta > 1.39, impossible by the omega bound
  kSmallT,            // t < 1
  kParabola,          // 1 <= t <= x/2
  kLargeT,            // t > x/2
};
inline constexpr std::size_t kLargeRegimeCount = 5;
std::string to_string(LargeRegime regime);

struct LargeSample {
  std::size_t k;
  double x;
};

struct LargeCaseOutcome {
  std::size_t k = 0;
  double x = 0.0;
  double t = 0.0;  // x - log x - log k = log(1/theta)
  LargeRegime regime = LargeRegime::kDirect;
  bool holds = false;
  std::string detail;
};

struct LargeCaseReport {
  std::uint64_t samples = 0;
  std::array<std::uint64_t, kLargeRegimeCount> per_regime{};
  std::vector<LargeCaseOutcome> failures;
  bool pass = false;
};

// The three analytic predicates (and the parabola endpoints t = 1, t = x/2)
// for the k >= 11000 case. Samples need x >= 11.66, else std::invalid_argument.
LargeCaseOutcome check_large_sample(const LargeSample& sample);
LargeCaseReport check_case_large(std::span<const LargeSample> samples);

// k uniform in [11000, 10^6], x uniform in [11.66, 3 log k].
std::vector<LargeSample> random_large_samples(std::size_t count, std::uint64_t seed);

struct LargeEndpointAudit {
  double loglog_n_11000 = 0.0;
  bool above_min_x = false;        // loglog n_11000 > 11.66
  double mid_margin_at_18 = 0.0;   // mid_case_margin(11000, 1.8 log 11000)
  bool parabola_at_boundary = false;  // t = 1 and t = x/2 at x = 11.66
  bool small_t_at_boundary = false;   // (log x + 1)/(1.25 (x - log x - 1)) < 2 log x / x at x = 11.66
  bool pass = false;
};
LargeEndpointAudit large_case_endpoints(const PrimeTable& table);

/// Sampled audit of an analytic tail: every grid point must satisfy the
/// predicate.
struct TailAudit {
  std::string name;
  std::size_t k_lo = 0;
  std::size_t k_hi = 0;
  double x_lo = 0.0;
  double x_hi = 0.0;
  std::uint64_t points = 0;
  double worst = 0.0;  // largest bound (small tail) / smallest margin (mid tail)
  bool pass = false;
};

// small_case_bound(k, x) < 2 for k in [1, 43], x in [9.36, x_max].
TailAudit audit_small_tail(const PrimeTable& table, double x_max = 60.0, double step = 0.01);
// mid_case_margin(k, 1.8 log k) > 0 and its z-slope > 0 on z in [1.8, z_max]
// for k in [44, 10999].
TailAudit audit_mid_tail(double z_max = 10.0, double step = 0.01);

}  // namespace divbound
