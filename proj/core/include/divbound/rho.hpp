#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include "divbound/arith.hpp"
#include "divbound/precision.hpp"
#include "divbound/primes.hpp"

namespace divbound {

/// One evaluated integer.
struct RhoReport {
  std::string n;  // factored form, empty when built from a bare triple
  double n_log = 0.0;
  std::size_t omega = 0;
  double tau_log = 0.0;
  double theta = 0.0;
  double rho = 0.0;
  bool exceeds_two = false;       // rho >= 2 - kNumericMargin
  bool in_theorem_range = false;  // n >= 17
  bool escalated = false;         // rho was recomputed in HighReal
};

// theta(n) = omega(n) loglog n / log n, as a function of (log n, omega).
template <class Real>
Real theta_value(const Real& n_log, const Real& omega) {
  using std::log;
  using boost::multiprecision::log;
  return omega * log(n_log) / n_log;
}

// rho(n) = ( log tau / (omega log(1 + 1/theta)) - 1 ) * loglog n / logloglog n.
template <class Real>
Real rho_value(const Real& n_log, const Real& omega, const Real& tau_log) {
  using std::log;
  using boost::multiprecision::log;
  Real x = log(n_log);
  Real th = omega * x / n_log;
  return (tau_log / (omega * log(1 + 1 / th)) - 1) * x / log(x);
}

// Requires n >= 3; std::domain_error otherwise.
double theta(const Factorization& f);

// Requires n >= 16 and omega >= 1; std::domain_error otherwise. Values
// within kEscalationBand of 2 are recomputed in 113-bit arithmetic unless
// `escalate` is false.
RhoReport rho(const Factorization& f, bool escalate = true);

// Same evaluation from a pre-computed (log n, omega, log tau) triple.
RhoReport rho_from_triple(double n_log, std::size_t omega, double tau_log);

struct KappaResult {
  std::size_t k = 0;
  double kappa = 0.0;
};

// Maximises g(k) = k log L(k) / L(k) (theta of the primorial n_k, the
// smallest integer with omega = k) over 1 <= k <= k_max.
KappaResult kappa_search(const PrimeTable& table, std::size_t k_max);

// Primary integer p_1^a_1 ... p_k^a_k with a_j + 1 the nearest integer to
// (z_log + L(k)) / (k log p_j). std::invalid_argument if some a_j < 1.
Factorization extremal_m(const PrimeTable& table, std::size_t k, double z_log);

}  // namespace divbound
