#include "divbound/verify/lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "divbound/arith.hpp"
#include "divbound/verify/bounds.hpp"

namespace divbound {
namespace {

constexpr std::size_t kMaxExamples = 5;

class CheckBuilder {
 public:
  CheckBuilder(std::string name, std::string range) {
    check_.name = std::move(name);
    check_.range = std::move(range);
    check_.worst_margin = std::numeric_limits<double>::infinity();
  }

  // margin > 0 means the inequality holds.
  void record(double margin, const std::function<std::string()>& describe) {
    ++check_.checked;
    check_.worst_margin = std::min(check_.worst_margin, margin);
    if (!(margin > 0.0)) {
      ++check_.violations;
      if (check_.examples.size() < kMaxExamples) check_.examples.push_back(describe());
    }
  }

  LemmaCheck finish() && { return std::move(check_); }

 private:
  LemmaCheck check_;
};

std::string k_label(std::size_t k) { return "k=" + std::to_string(k); }

}  // namespace

bool LemmaReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const LemmaCheck& c) { return c.violations == 0 && c.checked > 0; });
}

double lemma3_function(std::size_t k, double c, double x) {
  return std::log1p(std::exp(x) / (static_cast<double>(k) * x)) * (1.0 + c * std::log(x) / x);
}

LemmaReport lemma_suite(const PrimeTable& table, const LemmaOptions& options) {
  const std::size_t k_max = options.k_max;
  if (k_max < 44) throw std::invalid_argument("lemma_suite: k_max must be >= 44");
  table.require(k_max);
  LemmaReport report;
  const std::string upto = ", k_max=" + std::to_string(k_max);

  auto L = [&](std::size_t k) { return table.log_primorial(k); };
  auto S = [&](std::size_t k) { return table.loglog_sum(k); };
  auto ln = [](double v) { return std::log(v); };

  {
    CheckBuilder c("sum_loglog_lower", "S(k) >= k loglog k for k >= 44" + upto);
    for (std::size_t k = 44; k <= k_max; ++k) {
      double kd = static_cast<double>(k);
      c.record(S(k) - kd * ln(ln(kd)), [&] { return k_label(k); });
    }
    report.checks.push_back(std::move(c).finish());
  }
  {
    CheckBuilder c("log_primorial_upper", "L(k) <= 2k log k for k >= 2" + upto);
    for (std::size_t k = 2; k <= k_max; ++k) {
      double kd = static_cast<double>(k);
      c.record(2.0 * kd * ln(kd) - L(k), [&] { return k_label(k); });
    }
    report.checks.push_back(std::move(c).finish());
  }
  {
    CheckBuilder c("loglog_primorial_lower", "log L(k) >= log k for k >= 3" + upto);
    for (std::size_t k = 3; k <= k_max; ++k) {
      c.record(ln(L(k)) - ln(static_cast<double>(k)), [&] { return k_label(k); });
    }
    report.checks.push_back(std::move(c).finish());
  }
  {
    CheckBuilder c("log_primorial_vs_loglog", "L(k) <= k log L(k) for k >= 3" + upto);
    for (std::size_t k = 3; k <= k_max; ++k) {
      c.record(static_cast<double>(k) * ln(L(k)) - L(k), [&] { return k_label(k); });
    }
    report.checks.push_back(std::move(c).finish());
  }
  {
    CheckBuilder c("log_primorial_lower", "L(k) >= k(log k + loglog k - 5/4) for k >= 2" + upto);
    for (std::size_t k = 2; k <= k_max; ++k) {
      double kd = static_cast<double>(k);
      c.record(L(k) - kd * (ln(kd) + ln(ln(kd)) - 1.25), [&] { return k_label(k); });
    }
    report.checks.push_back(std::move(c).finish());
  }
  {
    CheckBuilder c("monotone_log_ratio",
                   "log(1+e^x/(kx))(1+c log x/x) strictly increasing, x in [1,30] step 1e-3, "
                   "k in {1,2,5,10}, c in {0.5,1,2}");
    for (std::size_t k : {1, 2, 5, 10}) {
      for (double cc : {0.5, 1.0, 2.0}) {
        double previous = lemma3_function(k, cc, 1.0);
        for (int i = 1; i <= 29000; ++i) {
          double x = 1.0 + i * 1e-3;
          double value = lemma3_function(k, cc, x);
          c.record(value - previous, [&] {
            std::ostringstream os;
            os << k_label(k) << " c=" << cc << " x=" << x;
            return os.str();
          });
          previous = value;
        }
      }
    }
    report.checks.push_back(std::move(c).finish());
  }

  std::mt19937_64 rng(options.seed);
  {
    CheckBuilder c("ramanujan_product_bound",
                   std::to_string(options.ramanujan_samples) + " random n in [2, " +
                       std::to_string(options.ramanujan_max_n) + "]; equality allowed for prime powers");
    std::uniform_int_distribution<std::uint64_t> dist(2, options.ramanujan_max_n);
    for (std::size_t i = 0; i < options.ramanujan_samples; ++i) {
      std::uint64_t n = dist(rng);
      Factorization f = factorize(n);
      double gap = ramanujan_log_bound(f) - log_tau(f);
      // omega = 1 is the equality case: accept rounding-level gaps only.
      double margin = omega(f) == 1 ? 1e-12 - std::abs(gap) : gap;
      c.record(margin, [&] { return "n=" + std::to_string(n); });
    }
    report.checks.push_back(std::move(c).finish());
  }
  {
    CheckBuilder c("wigert_style_bound", std::to_string(options.wigert_samples) +
                                             " random primary n with omega in [74, 200]");
    table.require(200);
    std::uniform_int_distribution<std::size_t> omega_dist(74, 200);
    std::uniform_int_distribution<std::uint32_t> top_dist(1, 12);
    for (std::size_t i = 0; i < options.wigert_samples; ++i) {
      std::size_t k = omega_dist(rng);
      std::uint32_t top = top_dist(rng);
      std::uniform_int_distribution<std::uint32_t> exp_dist(1, top);
      std::vector<std::uint32_t> exponents(k);
      for (auto& e : exponents) e = exp_dist(rng);
      std::sort(exponents.begin(), exponents.end(), std::greater<>());
      Factorization f = Factorization::from_exponents(table, exponents);
      c.record(wigert_style_log_bound(f) - log_tau(f), [&] { return f.to_string(); });
    }
    report.checks.push_back(std::move(c).finish());
  }
  return report;
}

}  // namespace divbound
