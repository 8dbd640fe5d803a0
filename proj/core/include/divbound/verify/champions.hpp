#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "divbound/primes.hpp"
#include "divbound/rho.hpp"

namespace divbound {

struct ChampionResult {
  std::vector<RhoReport> top;       // descending rho
  std::uint64_t evaluated = 0;      // primary n >= 17 with log n <= limit_log
  std::uint64_t at_least_two = 0;   // rho >= 2 - margin
};

// Evaluates rho on every primary integer 17 <= n <= e^limit_log and keeps the
// `top_count` largest. Requires limit_log >= log 10^9. Work is split by the
// exponent of 2 and merged deterministically.
ChampionResult champion_search(const PrimeTable& table, double limit_log,
                               std::size_t top_count = 20, unsigned workers = 0);

}  // namespace divbound
