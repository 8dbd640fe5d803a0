#include "divbound/verify/cases.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <random>
#include <stdexcept>

#include "divbound/parallel.hpp"
#include "divbound/rho.hpp"
#include "divbound/verify/hk.hpp"

namespace divbound {
namespace {

constexpr double kLog1e9 = 20.723265836946411;  // 9 log 10
constexpr double kKappaCap = 1.39;

GridCertificate certify_hk(const PrimeTable& table, std::size_t k, double alpha, double beta,
                           const GridParams& params, bool escalate) {
  const double L = table.log_primorial(k);
  const double S = table.loglog_sum(k);
  auto h = [&](double x) { return hk_formula<double>(k, x, L, S); };
  GridCertificate cert;
  if (escalate) {
    // PreciseHk costs O(k) in 113-bit logs, so it is only built if needed.
    cert = grid_verify(h, alpha, beta, params.delta, params.m1, params.threshold);
    if (cert.diagnostic.empty() && std::abs(cert.slack) < kEscalationBand) {
      PreciseHk precise(table, k);
      cert = grid_verify_escalating(h, precise, alpha, beta, params.delta, params.m1,
                                    params.threshold);
    }
  } else {
    cert = grid_verify(h, alpha, beta, params.delta, params.m1, params.threshold);
  }
  cert.k = k;
  return cert;
}

bool parabola_holds(double x, double t) {
  double lx = std::log(x);
  double denominator = t * (x - lx - t);
  if (!(denominator > 0.0)) return false;
  return (lx + t) / denominator < 2.0 * lx / x;
}

}  // namespace

GridCertificate verify_case_mid(const PrimeTable& table, std::size_t k, bool escalate,
                                const GridParams& params) {
  if (k < kMidFirstK || k > kMidLastK) {
    throw std::invalid_argument("verify_case_mid: k must lie in [44, 10999]");
  }
  table.require(k);
  double lk = std::log(static_cast<double>(k));
  return certify_hk(table, k, lk, 1.8 * lk, params, escalate);
}

GridCertificate verify_case_small(const PrimeTable& table, std::size_t k, bool escalate,
                                  const GridParams& params) {
  if (k == 0 || k > kSmallLastK) throw std::invalid_argument("verify_case_small: k must lie in [1, 43]");
  if (k == 2) throw std::invalid_argument("verify_case_small: k = 2 is handled by verify_k2");
  table.require(k);
  double alpha = std::log(std::max(kLog1e9, table.log_primorial(k)));
  return certify_hk(table, k, alpha, kSmallUpperX, params, escalate);
}

std::vector<GridCertificate> verify_mid_range(const PrimeTable& table, std::size_t k_lo,
                                              std::size_t k_hi, unsigned workers, bool escalate,
                                              const GridParams& params) {
  if (k_lo > k_hi) throw std::invalid_argument("verify_mid_range: empty k range");
  if (k_lo < kMidFirstK || k_hi > kMidLastK) {
    throw std::invalid_argument("verify_mid_range: k must lie in [44, 10999]");
  }
  table.require(k_hi);
  std::vector<GridCertificate> out(k_hi - k_lo + 1);
  parallel_for(out.size(), workers,
               [&](std::size_t i) { out[i] = verify_case_mid(table, k_lo + i, escalate, params); });
  return out;
}

std::vector<GridCertificate> verify_small_range(const PrimeTable& table, std::size_t k_lo,
                                                std::size_t k_hi, unsigned workers, bool escalate,
                                                const GridParams& params) {
  if (k_lo == 0 || k_lo > k_hi || k_hi > kSmallLastK) {
    throw std::invalid_argument("verify_small_range: k must lie in [1, 43]");
  }
  table.require(k_hi);
  std::vector<std::size_t> ks;
  for (std::size_t k = k_lo; k <= k_hi; ++k) {
    if (k != 2) ks.push_back(k);
  }
  std::vector<GridCertificate> out(ks.size());
  parallel_for(out.size(), workers,
               [&](std::size_t i) { out[i] = verify_case_small(table, ks[i], escalate, params); });
  return out;
}

K2Result verify_k2(const PrimeTable& table, bool escalate) {
  table.require(2);
  K2Result result;
  result.grid = certify_hk(table, 2, kK2LowerX, kSmallUpperX, kSmallParams, escalate);

  const double max_log = std::exp(kK2LowerX);
  const Factorization expected =
      Factorization::from_pairs({{2, 26}, {3, 16}}, Factorization::PrimeCheck::kTrusted);
  std::vector<std::pair<double, Factorization>> ranked;
  for (std::uint32_t a = 1; a <= kK2MaxA; ++a) {
    for (std::uint32_t b = 1; b <= kK2MaxB; ++b) {
      Factorization n = Factorization::from_pairs({{2, a}, {3, b}}, Factorization::PrimeCheck::kTrusted);
      auto exact = n.value_exact();
      if (exact && *exact <= 1000000000ULL) continue;
      if (n.value_log() > max_log) continue;
      RhoReport r = rho(n, escalate);
      if (r.exceeds_two) ++result.at_least_two;
      ranked.emplace_back(r.rho, std::move(n));
    }
  }
  result.candidates = ranked.size();
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& lhs, const auto& rhs) { return lhs.first > rhs.first; });
  if (!ranked.empty()) {
    result.champion = ranked[0].second;
    result.champion_rho = ranked[0].first;
    for (const auto& entry : ranked) {
      if (entry.first == result.champion_rho) ++result.maximizer_count;
    }
  }
  if (ranked.size() > 1) {
    result.runner_up = ranked[1].second;
    result.runner_up_rho = ranked[1].first;
  }
  result.pass = result.grid.pass && result.champion == expected && result.maximizer_count == 1 &&
                result.runner_up_rho < result.champion_rho;
  return result;
}

std::string to_string(LargeRegime regime) {
  switch (regime) {
    case LargeRegime::kDirect: return "direct";
    case LargeRegime::kExcludedByKappa: return "excluded_by_kappa";
    case LargeRegime::kSmallT: return "small_t";
    case LargeRegime::kParabola: return "parabola";
    case LargeRegime::kLargeT: return "large_t";
  }
  return "unknown";
}

LargeCaseOutcome check_large_sample(const LargeSample& sample) {
  if (sample.k < kLargeFirstK) throw std::invalid_argument("check_case_large: k must be >= 11000");
  if (!(sample.x >= kLargeMinX)) throw std::invalid_argument("check_case_large: x must be >= 11.66");
  const double x = sample.x;
  const double lx = std::log(x);
  const double lk = std::log(static_cast<double>(sample.k));
  const double rhs = 2.0 * lx / x;

  LargeCaseOutcome out;
  out.k = sample.k;
  out.x = x;
  out.t = x - lx - lk;
  const double t = out.t;

  if (x < lk) {
    out.regime = LargeRegime::kDirect;
    out.holds = true;
  } else if (t < -std::log(kKappaCap)) {
    out.regime = LargeRegime::kExcludedByKappa;
    out.holds = true;
  } else if (t < 1.0) {
    out.regime = LargeRegime::kSmallT;
    const double th = std::exp(-t);
    const double spread = (th + 1.0) * std::log(1.0 + 1.0 / th);
    const bool spread_ok = spread >= 1.25;
    const bool actual_ok = (x - lk) / (spread * lk) < rhs;
    const bool bound_ok = (lx + 1.0) / (1.25 * (x - lx - 1.0)) < rhs;
    out.holds = spread_ok && actual_ok && bound_ok;
    if (!out.holds) {
      out.detail = std::string("spread>=1.25:") + (spread_ok ? "ok" : "FAIL") +
                   " actual:" + (actual_ok ? "ok" : "FAIL") + " bound:" + (bound_ok ? "ok" : "FAIL");
    }
  } else if (t <= x / 2.0) {
    out.regime = LargeRegime::kParabola;
    const bool at_t = parabola_holds(x, t);
    const bool at_one = parabola_holds(x, 1.0);
    const bool at_half = parabola_holds(x, x / 2.0);
    out.holds = at_t && at_one && at_half;
    if (!out.holds) {
      out.detail = std::string("t:") + (at_t ? "ok" : "FAIL") + " t=1:" + (at_one ? "ok" : "FAIL") +
                   " t=x/2:" + (at_half ? "ok" : "FAIL");
    }
  } else {
    out.regime = LargeRegime::kLargeT;
    out.holds = (x - lx - lk) * (1.0 + rhs) > x - lk;
    if (!out.holds) out.detail = "(x - log x - log k)(1 + 2 log x/x) <= x - log k";
  }
  return out;
}

LargeCaseReport check_case_large(std::span<const LargeSample> samples) {
  LargeCaseReport report;
  for (const auto& sample : samples) {
    LargeCaseOutcome outcome = check_large_sample(sample);
    ++report.samples;
    ++report.per_regime[static_cast<std::size_t>(outcome.regime)];
    if (!outcome.holds) report.failures.push_back(std::move(outcome));
  }
  report.pass = report.failures.empty();
  return report;
}

std::vector<LargeSample> random_large_samples(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> k_dist(kLargeFirstK, 1000000);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<LargeSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t k = k_dist(rng);
    double hi = 3.0 * std::log(static_cast<double>(k));
    out.push_back({k, kLargeMinX + unit(rng) * (hi - kLargeMinX)});
  }
  return out;
}

LargeEndpointAudit large_case_endpoints(const PrimeTable& table) {
  table.require(kLargeFirstK);
  LargeEndpointAudit audit;
  audit.loglog_n_11000 = std::log(table.log_primorial(kLargeFirstK));
  audit.above_min_x = audit.loglog_n_11000 > kLargeMinX;
  audit.mid_margin_at_18 =
      mid_case_margin(kLargeFirstK, 1.8 * std::log(static_cast<double>(kLargeFirstK)));
  const double x = kLargeMinX;
  const double lx = std::log(x);
  audit.parabola_at_boundary = parabola_holds(x, 1.0) && parabola_holds(x, x / 2.0);
  audit.small_t_at_boundary = (lx + 1.0) / (1.25 * (x - lx - 1.0)) < 2.0 * lx / x;
  audit.pass = audit.above_min_x && audit.mid_margin_at_18 > 0.0 && audit.parabola_at_boundary &&
               audit.small_t_at_boundary;
  return audit;
}

TailAudit audit_small_tail(const PrimeTable& table, double x_max, double step) {
  table.require(kSmallLastK);
  TailAudit audit{"small_k_tail", 1, kSmallLastK, kSmallUpperX, x_max, 0, 0.0, true};
  audit.worst = -std::numeric_limits<double>::infinity();
  const std::uint64_t count = grid_point_count(kSmallUpperX, x_max, step);
  for (std::size_t k = 1; k <= kSmallLastK; ++k) {
    for (std::uint64_t i = 0; i < count; ++i) {
      double x = grid_point(kSmallUpperX, x_max, step, i, count);
      double bound = small_case_bound(table, k, x);
      ++audit.points;
      audit.worst = std::max(audit.worst, bound);
      if (!(bound < 2.0 - kNumericMargin)) audit.pass = false;
    }
  }
  return audit;
}

TailAudit audit_mid_tail(double z_max, double step) {
  TailAudit audit{"mid_k_tail", kMidFirstK, kMidLastK, 1.8, z_max, 0, 0.0, true};
  audit.worst = std::numeric_limits<double>::infinity();
  const std::uint64_t count = grid_point_count(1.8, z_max, step);
  for (std::size_t k = kMidFirstK; k <= kMidLastK; ++k) {
    double lk = std::log(static_cast<double>(k));
    double margin = mid_case_margin(k, 1.8 * lk);
    ++audit.points;
    audit.worst = std::min(audit.worst, margin);
    if (!(margin > kNumericMargin)) audit.pass = false;
    for (std::uint64_t i = 0; i < count; ++i) {
      double z = grid_point(1.8, z_max, step, i, count);
      ++audit.points;
      if (!(mid_case_margin_slope(k, z) > 0.0)) audit.pass = false;
    }
  }
  return audit;
}

}  // namespace divbound
