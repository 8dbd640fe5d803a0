#include "divbound/rho.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace divbound {
namespace {

// log 16 and log 3, with a little room for rounding in value_log.
constexpr double kLog16 = 2.772588722239781;
constexpr double kLog3 = 1.0986122886681098;
constexpr double kLog17 = 2.833213344056216;
constexpr double kLogTolerance = 1e-12;

bool at_least(const Factorization& f, std::uint64_t bound, double log_bound) {
  if (auto exact = f.value_exact()) return *exact >= bound;
  return f.value_log() >= log_bound - kLogTolerance;
}

}  // namespace

double theta(const Factorization& f) {
  if (!at_least(f, 3, kLog3)) throw std::domain_error("theta: requires n >= 3");
  return theta_value(f.value_log(), static_cast<double>(omega(f)));
}

RhoReport rho(const Factorization& f, bool escalate) {
  if (!at_least(f, 16, kLog16)) {
    throw std::domain_error("rho: requires n >= 16 (logloglog n must be positive)");
  }
  // Only n = 1 has omega = 0 and it is excluded above; kept for clarity of the contract.
  if (omega(f) == 0) throw std::domain_error("rho: requires omega(n) >= 1");

  RhoReport report = rho_from_triple(f.value_log(), omega(f), log_tau(f));
  report.n = f.to_string();
  report.in_theorem_range = at_least(f, 17, kLog17);
  if (escalate && std::abs(report.rho - 2.0) < kEscalationBand) {
    HighReal precise = rho_value(f.value_log_hp(), HighReal(omega(f)), log_tau_hp(f));
    report.rho = static_cast<double>(precise);
    report.exceeds_two = precise >= 2 - HighReal(kNumericMargin);
    report.escalated = true;
  }
  return report;
}

RhoReport rho_from_triple(double n_log, std::size_t omega_count, double tau_log) {
  if (omega_count == 0) throw std::domain_error("rho: requires omega(n) >= 1");
  if (!(n_log >= kLog16 - kLogTolerance)) throw std::domain_error("rho: requires n >= 16");
  RhoReport report;
  report.n_log = n_log;
  report.omega = omega_count;
  report.tau_log = tau_log;
  auto w = static_cast<double>(omega_count);
  report.theta = theta_value(n_log, w);
  report.rho = rho_value(n_log, w, tau_log);
  report.exceeds_two = report.rho >= 2.0 - kNumericMargin;
  report.in_theorem_range = n_log >= kLog17 - kLogTolerance;
  return report;
}

KappaResult kappa_search(const PrimeTable& table, std::size_t k_max) {
  if (k_max == 0) throw std::invalid_argument("kappa_search: k_max must be >= 1");
  if (k_max > table.size()) {
    throw std::out_of_range("kappa_search: prime table has only " + std::to_string(table.size()) +
                            " primes");
  }
  KappaResult best{0, -std::numeric_limits<double>::infinity()};
  for (std::size_t k = 1; k <= k_max; ++k) {
    double L = table.log_primorial(k);
    double g = static_cast<double>(k) * std::log(L) / L;
    if (g > best.kappa) best = {k, g};
  }
  return best;
}

Factorization extremal_m(const PrimeTable& table, std::size_t k, double z_log) {
  if (k == 0) throw std::invalid_argument("extremal_m: k must be >= 1");
  table.require(k);
  double numerator = z_log + table.log_primorial(k);
  std::vector<std::uint32_t> exponents(k);
  for (std::size_t j = 1; j <= k; ++j) {
    double target = numerator / (static_cast<double>(k) * std::log(static_cast<double>(table.nth_prime(j))));
    long rounded = std::lround(target);
    if (rounded < 2) {
      throw std::invalid_argument("extremal_m: z_log too small, exponent of p_" + std::to_string(j) +
                                  " would be < 1");
    }
    exponents[j - 1] = static_cast<std::uint32_t>(rounded - 1);
  }
  return Factorization::from_exponents(table, exponents);
}

}  // namespace divbound
