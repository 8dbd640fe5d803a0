#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "divbound/precision.hpp"

namespace divbound {

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

// All primes p <= limit in ascending order (segmented Eratosthenes).
std::vector<std::uint64_t> sieve_primes_upto(std::uint64_t limit);

/// The first K primes together with the prefix sums
///   L(k) = sum_{j<=k} log p_j   (log of the primorial n_k)
///   S(k) = sum_{j<=k} log log p_j
/// Both are accumulated with compensated summation. Indices are 1-based and
/// L(0) = S(0) = 0. Immutable after construction, so one table can be shared
/// by any number of worker threads.
class PrimeTable {
 public:
  static constexpr std::size_t kDefaultCount = 12000;
  static constexpr std::size_t kMaxCount = 1000000;

  // Throws std::invalid_argument for count == 0 or count > kMaxCount.
  static PrimeTable build(std::size_t count);

  // Binary cache: "DVBPRIME", u32 version, u32 reserved, u64 count, then
  // count u64 primes, count f64 L(k), count f64 S(k); all little-endian.
  static PrimeTable load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  // Uses the cache when it holds at least `count` primes, otherwise sieves
  // and (re)writes it. An empty path skips the cache entirely.
  static PrimeTable load_or_build(std::size_t count,
                                  const std::filesystem::path& cache);

  std::size_t size() const noexcept { return primes_.size(); }
  std::span<const std::uint64_t> primes() const noexcept { return primes_; }

  // The k-th prime, k in [1, size()]; std::out_of_range otherwise.
  std::uint64_t nth_prime(std::size_t k) const;

  double log_primorial(std::size_t k) const;
  double loglog_sum(std::size_t k) const;

  // L(k) and S(k) recomputed in 113-bit arithmetic (O(k), used only on the
  // precision-escalation path).
  HighReal log_primorial_hp(std::size_t k) const;
  HighReal loglog_sum_hp(std::size_t k) const;

  // Throws std::out_of_range unless 0 <= k <= size().
  void require(std::size_t k) const;

 private:
  PrimeTable(std::vector<std::uint64_t> primes,
             std::vector<double> log_primorial,
             std::vector<double> loglog_sum);

  std::vector<std::uint64_t> primes_;
  std::vector<double> log_primorial_;  // size K+1, entry 0 is 0
  std::vector<double> loglog_sum_;     // size K+1, entry 0 is 0
};

}  // namespace divbound
