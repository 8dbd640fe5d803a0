#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "divbound/precision.hpp"
#include "divbound/primes.hpp"

namespace divbound {

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;

  friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// An integer n >= 1 held as its prime factorization. log n is always
/// available; the exact value only when it fits in 64 bits (witness integers
/// and 2^77 3^49 do not).
class Factorization {
 public:
  enum class PrimeCheck { kVerify, kTrusted };

  // n = 1.
  Factorization() = default;

  // Requires strictly increasing primes and exponents >= 1. With kVerify
  // every base is also checked for primality. Throws std::invalid_argument.
  static Factorization from_pairs(std::vector<PrimePower> pairs,
                                  PrimeCheck check = PrimeCheck::kVerify);

  // Primary integer p_1^e_1 ... p_k^e_k over the table's first primes.
  static Factorization from_exponents(const PrimeTable& table,
                                      std::span<const std::uint32_t> exponents);

  std::span<const PrimePower> pairs() const noexcept { return pairs_; }
  double value_log() const noexcept { return value_log_; }
  std::optional<std::uint64_t> value_exact() const noexcept { return value_exact_; }
  HighReal value_log_hp() const;

  // "2^26*3^16"; "1" for the empty product.
  std::string to_string() const;

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.pairs_ == b.pairs_;
  }

 private:
  explicit Factorization(std::vector<PrimePower> pairs);

  std::vector<PrimePower> pairs_;
  double value_log_ = 0.0;
  std::optional<std::uint64_t> value_exact_ = 1;
};

// Trial division by small primes, then deterministic Miller-Rabin and
// Brent's Pollard rho. n = 0 -> std::invalid_argument.
Factorization factorize(std::uint64_t n);

// Parses "p1^a1*p2^a2*..." (bases need not be prime; they are factored and
// merged). Throws std::invalid_argument on malformed input.
Factorization parse_factored(std::string_view expression);

// Number of divisors. Throws std::overflow_error beyond 64 bits; log_tau
// has no such limit.
std::uint64_t tau(const Factorization& f);
double log_tau(const Factorization& f);
HighReal log_tau_hp(const Factorization& f);

std::size_t omega(const Factorization& f);
Factorization radical(const Factorization& f);

// True iff f = p_1^a_1 ... p_k^a_k with a_1 >= ... >= a_k; 1 is primary.
bool is_primary(const Factorization& f);

// Depth-first enumeration of every primary integer with log n <= log_limit
// (resp. n <= limit), each exactly once, in a deterministic order. When
// `leading_exponent` is set only integers with that exponent on 2 are
// produced (1 itself belongs to no partition and is produced only when no
// filter is given), which lets callers split the work by top-level branch.
// Throws std::out_of_range if the table is too short for the limit.
void for_each_primary(double log_limit, const PrimeTable& table,
                      const std::function<void(const Factorization&)>& visit,
                      std::optional<std::uint32_t> leading_exponent = std::nullopt);
std::vector<Factorization> enumerate_primary(std::uint64_t limit, const PrimeTable& table);
std::vector<Factorization> enumerate_primary_log(double log_limit, const PrimeTable& table);

}  // namespace divbound
