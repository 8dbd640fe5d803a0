#include "divbound/verify/champions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "divbound/arith.hpp"
#include "divbound/parallel.hpp"

namespace divbound {
namespace {

constexpr double kLog1e9 = 20.723265836946411;
constexpr double kLog17 = 2.833213344056216;

bool rank_before(const RhoReport& a, const RhoReport& b) {
  if (a.rho != b.rho) return a.rho > b.rho;
  return a.n_log < b.n_log;
}

}  // namespace

ChampionResult champion_search(const PrimeTable& table, double limit_log, std::size_t top_count,
                               unsigned workers) {
  if (!(limit_log >= kLog1e9 - 1e-12)) {
    throw std::invalid_argument("champion_search: limit_log must be >= log 10^9");
  }
  // Exponent of 2 ranges over 1 .. floor(limit_log / log 2).
  const auto max_leading = static_cast<std::uint32_t>(std::floor(limit_log / std::log(2.0)));
  std::vector<ChampionResult> partial(max_leading);
  parallel_for(partial.size(), workers, [&](std::size_t i) {
    ChampionResult& part = partial[i];
    for_each_primary(
        limit_log, table,
        [&](const Factorization& f) {
          if (f.value_log() < kLog17 - 1e-12) return;
          if (auto exact = f.value_exact(); exact && *exact < 17) return;
          RhoReport r = rho(f);
          ++part.evaluated;
          if (r.exceeds_two) ++part.at_least_two;
          part.top.push_back(std::move(r));
          if (part.top.size() > 4 * top_count + 64) {
            std::partial_sort(part.top.begin(), part.top.begin() + top_count, part.top.end(), rank_before);
            part.top.resize(top_count);
          }
        },
        static_cast<std::uint32_t>(i + 1));
  });

  ChampionResult result;
  for (auto& part : partial) {
    result.evaluated += part.evaluated;
    result.at_least_two += part.at_least_two;
    result.top.insert(result.top.end(), std::make_move_iterator(part.top.begin()),
                      std::make_move_iterator(part.top.end()));
  }
  std::sort(result.top.begin(), result.top.end(), rank_before);
  if (result.top.size() > top_count) result.top.resize(top_count);
  return result;
}

}  // namespace divbound
