#pragma once

#include <cmath>
#include <cstddef>

#include "divbound/precision.hpp"
#include "divbound/primes.hpp"

namespace divbound {

// Upper bound for rho(n) over integers with omega(n) = k and loglog n = x,
// obtained by inserting the Ramanujan product bound into rho:
//   h_k(x) = ( (log(e^x + L(k)) - log k - S(k)/k) / log(1 + e^x/(k x)) - 1 ) * x / log x.
template <class Real>
Real hk_formula(std::size_t k, const Real& x, const Real& log_primorial, const Real& loglog_sum) {
  using std::exp;
  using std::log;
  using boost::multiprecision::exp;
  using boost::multiprecision::log;
  Real kr = static_cast<Real>(k);
  Real ex = exp(x);
  Real w = log(ex + log_primorial) - log(kr) - loglog_sum / kr;
  return (w / log(1 + ex / (kr * x)) - 1) * x / log(x);
}

// x <= 1 -> std::domain_error (log x must be positive).
double hk(const PrimeTable& table, std::size_t k, double x);

// h_k evaluated entirely in 113-bit arithmetic.
class PreciseHk {
 public:
  PreciseHk(const PrimeTable& table, std::size_t k);
  HighReal operator()(const HighReal& x) const;

 private:
  std::size_t k_;
  HighReal log_primorial_;
  HighReal loglog_sum_;
};

// W = log(e^x + L(k)) - log k - S(k)/k, the numerator of h_k.
double hk_numerator(const PrimeTable& table, std::size_t k, double x);

// (400/81) log^2 k / loglog k + (130/27) log k / loglog k. Requires k >= 3.
double hk_derivative_bound(std::size_t k);

// (x log 2x - (x/k) S(k)) / ((x - log x - log k) log x): the bound on rho
// used for small k once e^x dominates L(k).
double small_case_bound(const PrimeTable& table, std::size_t k, double x);

// x log x + x loglog k - 2 log x (log x + log k); positive means rho < 2 in
// the mid range once x >= 1.8 log k.
double mid_case_margin(std::size_t k, double x);

// d/dz of mid_case_margin(k, z log k).
double mid_case_margin_slope(std::size_t k, double z);

}  // namespace divbound
