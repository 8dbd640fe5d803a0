#include "divbound/verify/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace divbound {

double ramanujan_log_bound(const Factorization& f) {
  if (omega(f) == 0) throw std::domain_error("ramanujan_bound: requires n >= 2");
  // log(n gamma(n)) = sum (a_p + 1) log p
  CompensatedSum<double> scaled;
  for (const auto& [p, e] : f.pairs()) scaled.add((e + 1.0) * std::log(static_cast<double>(p)));
  const double numerator = scaled.value() / static_cast<double>(omega(f));
  CompensatedSum<double> sum;
  for (const auto& pp : f.pairs()) sum.add(std::log(numerator / std::log(static_cast<double>(pp.prime))));
  return sum.value();
}

double ramanujan_bound(const Factorization& f) { return std::exp(ramanujan_log_bound(f)); }

double wigert_style_log_bound(const Factorization& f) {
  const std::size_t k = omega(f);
  if (k < kWigertMinOmega) throw std::domain_error("wigert_style_bound: requires omega(n) >= 74");
  const auto kd = static_cast<double>(k);
  return kd * std::log1p(f.value_log() / (kd * std::log(kd)));
}

}  // namespace divbound
