#pragma once

#include "divbound/arith.hpp"

namespace divbound {

// Ramanujan's product bound: tau(n) <= prod_{p | n} log(n gamma(n)) / (omega(n) log p).
// Equality exactly for prime powers. n = 1 -> std::domain_error.
double ramanujan_bound(const Factorization& f);
double ramanujan_log_bound(const Factorization& f);

// log of (1 + log n / (k log k))^k with k = omega(n); a strict upper bound
// for log tau(n) once k >= 74 (std::domain_error below that).
double wigert_style_log_bound(const Factorization& f);

inline constexpr std::size_t kWigertMinOmega = 74;

}  // namespace divbound
