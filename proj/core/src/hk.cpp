#include "divbound/verify/hk.hpp"

#include <stdexcept>

namespace divbound {

double hk(const PrimeTable& table, std::size_t k, double x) {
  if (k == 0) throw std::invalid_argument("h_k: k must be >= 1");
  if (!(x > 1.0)) throw std::domain_error("h_k: x must be > 1");
  return hk_formula<double>(k, x, table.log_primorial(k), table.loglog_sum(k));
}

PreciseHk::PreciseHk(const PrimeTable& table, std::size_t k)
    : k_(k), log_primorial_(table.log_primorial_hp(k)), loglog_sum_(table.loglog_sum_hp(k)) {
  if (k == 0) throw std::invalid_argument("h_k: k must be >= 1");
}

HighReal PreciseHk::operator()(const HighReal& x) const {
  if (!(x > 1)) throw std::domain_error("h_k: x must be > 1");
  return hk_formula<HighReal>(k_, x, log_primorial_, loglog_sum_);
}

double hk_numerator(const PrimeTable& table, std::size_t k, double x) {
  if (k == 0) throw std::invalid_argument("h_k: k must be >= 1");
  auto kd = static_cast<double>(k);
  return std::log(std::exp(x) + table.log_primorial(k)) - std::log(kd) - table.loglog_sum(k) / kd;
}

double hk_derivative_bound(std::size_t k) {
  if (k < 3) throw std::domain_error("hk_derivative_bound: requires k >= 3");
  double lk = std::log(static_cast<double>(k));
  double llk = std::log(lk);
  return (400.0 / 81.0) * lk * lk / llk + (130.0 / 27.0) * lk / llk;
}

double small_case_bound(const PrimeTable& table, std::size_t k, double x) {
  if (k == 0) throw std::invalid_argument("small_case_bound: k must be >= 1");
  auto kd = static_cast<double>(k);
  double lx = std::log(x);
  double numerator = x * std::log(2.0 * x) - x / kd * table.loglog_sum(k);
  double denominator = (x - lx - std::log(kd)) * lx;
  return numerator / denominator;
}

double mid_case_margin(std::size_t k, double x) {
  double lk = std::log(static_cast<double>(k));
  double lx = std::log(x);
  return x * lx + x * std::log(lk) - 2.0 * lx * (lx + lk);
}

double mid_case_margin_slope(std::size_t k, double z) {
  double lk = std::log(static_cast<double>(k));
  double x = z * lk;
  double lx = std::log(x);
  return lk * (lx + 1.0 + std::log(lk) - 2.0 * (2.0 * lx + lk) / x);
}

}  // namespace divbound
