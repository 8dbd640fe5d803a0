#include "divbound/arith.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace divbound {
namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

// Brent's cycle-finding variant with batched gcds. Deterministic: the
// polynomial constant walks 1, 2, 3, ... until a proper factor appears.
std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto step = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
    constexpr std::uint64_t kBatch = 128;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      // Batch overshot; replay one step at a time.
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void collect_factors(std::uint64_t n, std::map<std::uint64_t, std::uint32_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = pollard_brent(n);
  collect_factors(d, out);
  collect_factors(n / d, out);
}

std::optional<std::uint64_t> checked_pow_product(std::span<const PrimePower> pairs) {
  u128 value = 1;
  constexpr u128 kMax = std::numeric_limits<std::uint64_t>::max();
  for (const auto& [p, e] : pairs) {
    for (std::uint32_t i = 0; i < e; ++i) {
      value *= p;
      if (value > kMax) return std::nullopt;
    }
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> pairs) : pairs_(std::move(pairs)) {
  CompensatedSum<double> sum;
  for (const auto& [p, e] : pairs_) sum.add(e * std::log(static_cast<double>(p)));
  value_log_ = sum.value();
  value_exact_ = checked_pow_product(pairs_);
}

Factorization Factorization::from_pairs(std::vector<PrimePower> pairs, PrimeCheck check) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].exponent == 0) throw std::invalid_argument("Factorization: exponent must be >= 1");
    if (i > 0 && pairs[i].prime <= pairs[i - 1].prime) {
      throw std::invalid_argument("Factorization: primes must be strictly increasing");
    }
    if (check == PrimeCheck::kVerify && !is_prime_u64(pairs[i].prime)) {
      throw std::invalid_argument("Factorization: " + std::to_string(pairs[i].prime) +
                                  " is not prime");
    }
  }
  return Factorization(std::move(pairs));
}

Factorization Factorization::from_exponents(const PrimeTable& table,
                                            std::span<const std::uint32_t> exponents) {
  table.require(exponents.size());
  std::vector<PrimePower> pairs;
  pairs.reserve(exponents.size());
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j] == 0) throw std::invalid_argument("Factorization: exponent must be >= 1");
    pairs.push_back({table.nth_prime(j + 1), exponents[j]});
  }
  return Factorization(std::move(pairs));
}

HighReal Factorization::value_log_hp() const {
  HighReal sum = 0;
  for (const auto& [p, e] : pairs_) sum += HighReal(e) * boost::multiprecision::log(HighReal(p));
  return sum;
}

std::string Factorization::to_string() const {
  if (pairs_.empty()) return "1";
  std::string out;
  for (const auto& [p, e] : pairs_) {
    if (!out.empty()) out += '*';
    out += std::to_string(p);
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  std::map<std::uint64_t, std::uint32_t> found;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++found[p];
      n /= p;
    }
  }
  collect_factors(n, found);
  std::vector<PrimePower> pairs;
  pairs.reserve(found.size());
  for (const auto& [p, e] : found) pairs.push_back({p, e});
  return Factorization::from_pairs(std::move(pairs), Factorization::PrimeCheck::kTrusted);
}

Factorization parse_factored(std::string_view expression) {
  auto fail = [&](const std::string& why) -> std::invalid_argument {
    return std::invalid_argument("cannot parse '" + std::string(expression) + "': " + why);
  };
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_uint = [&](std::string_view s, auto& value) {
    s = trim(s);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw fail("bad number '" + std::string(s) + "'");
    }
  };

  if (trim(expression).empty()) throw fail("empty expression");
  std::map<std::uint64_t, std::uint64_t> merged;
  std::size_t start = 0;
  while (start <= expression.size()) {
    std::size_t star = expression.find('*', start);
    std::string_view term = expression.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start);
    std::size_t caret = term.find('^');
    std::uint64_t base = 0;
    std::uint32_t exponent = 1;
    parse_uint(term.substr(0, caret), base);
    if (caret != std::string_view::npos) parse_uint(term.substr(caret + 1), exponent);
    if (base == 0) throw fail("base 0");
    if (exponent == 0 && base != 1) throw fail("exponent 0");
    const Factorization base_factors = factorize(base);
    for (const auto& [p, e] : base_factors.pairs()) {
      merged[p] += static_cast<std::uint64_t>(e) * exponent;
      if (merged[p] > std::numeric_limits<std::uint32_t>::max()) throw fail("exponent overflow");
    }
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  std::vector<PrimePower> pairs;
  for (const auto& [p, e] : merged) pairs.push_back({p, static_cast<std::uint32_t>(e)});
  return Factorization::from_pairs(std::move(pairs), Factorization::PrimeCheck::kTrusted);
}

std::uint64_t tau(const Factorization& f) {
  std::uint64_t result = 1;
  for (const auto& pp : f.pairs()) {
    if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(pp.exponent) + 1, &result)) {
      throw std::overflow_error("tau: value exceeds 64 bits; use log_tau");
    }
  }
  return result;
}

double log_tau(const Factorization& f) {
  CompensatedSum<double> sum;
  for (const auto& pp : f.pairs()) sum.add(std::log(static_cast<double>(pp.exponent) + 1.0));
  return sum.value();
}

HighReal log_tau_hp(const Factorization& f) {
  HighReal sum = 0;
  for (const auto& pp : f.pairs()) sum += boost::multiprecision::log(HighReal(pp.exponent) + 1);
  return sum;
}

std::size_t omega(const Factorization& f) { return f.pairs().size(); }

Factorization radical(const Factorization& f) {
  std::vector<PrimePower> pairs;
  pairs.reserve(f.pairs().size());
  for (const auto& pp : f.pairs()) pairs.push_back({pp.prime, 1});
  return Factorization::from_pairs(std::move(pairs), Factorization::PrimeCheck::kTrusted);
}

bool is_primary(const Factorization& f) {
  // Primes must be 2, 3, 5, ... with no gaps: p_j is the j-th prime iff it
  // is the next prime after p_{j-1}.
  std::uint64_t expected = 2;
  std::uint32_t previous = std::numeric_limits<std::uint32_t>::max();
  for (const auto& [p, e] : f.pairs()) {
    if (p != expected || e > previous) return false;
    previous = e;
    expected = p + 1;
    while (!is_prime_u64(expected)) ++expected;
  }
  return true;
}

namespace {

struct PrimaryBound {
  double log_limit;
  std::optional<std::uint64_t> exact_limit;
};

class PrimaryWalker {
 public:
  PrimaryWalker(const PrimeTable& table, PrimaryBound bound,
                const std::function<void(const Factorization&)>& visit)
      : table_(table), bound_(bound), visit_(visit) {}

  void walk(std::optional<std::uint32_t> leading_exponent) {
    // The deepest level needs one prime beyond the last one that can fit.
    std::size_t needed = 1;
    while (needed <= table_.size() && table_.log_primorial(needed) <= bound_.log_limit + kSlack) ++needed;
    if (needed > table_.size()) {
      throw std::out_of_range("enumerate_primary: prime table too small for limit");
    }
    if (!leading_exponent) emit();
    descend(0, std::numeric_limits<std::uint32_t>::max(), 0.0, 1, leading_exponent);
  }

 private:
  static constexpr double kSlack = 1e-9;

  void emit() {
    Factorization f = Factorization::from_exponents(table_, exponents_);
    if (bound_.exact_limit) {
      if (f.value_exact() && *f.value_exact() <= *bound_.exact_limit) visit_(f);
    } else if (f.value_log() <= bound_.log_limit) {
      visit_(f);
    }
  }

  void descend(std::size_t depth, std::uint32_t max_exponent, double log_value, u128 exact,
               std::optional<std::uint32_t> only_exponent) {
    if (depth >= table_.size()) return;
    std::uint64_t p = table_.nth_prime(depth + 1);
    double lp = std::log(static_cast<double>(p));
    u128 value = exact;
    for (std::uint32_t e = 1; e <= max_exponent; ++e) {
      double next_log = log_value + e * lp;
      if (next_log > bound_.log_limit + kSlack) break;
      if (bound_.exact_limit) {
        value *= p;
        if (value > *bound_.exact_limit) break;
      }
      if (only_exponent && e != *only_exponent) continue;
      exponents_.push_back(e);
      emit();
      descend(depth + 1, e, next_log, value, std::nullopt);
      exponents_.pop_back();
    }
  }

  const PrimeTable& table_;
  PrimaryBound bound_;
  const std::function<void(const Factorization&)>& visit_;
  std::vector<std::uint32_t> exponents_;
};

}  // namespace

void for_each_primary(double log_limit, const PrimeTable& table,
                      const std::function<void(const Factorization&)>& visit,
                      std::optional<std::uint32_t> leading_exponent) {
  PrimaryWalker(table, {log_limit, std::nullopt}, visit).walk(leading_exponent);
}

std::vector<Factorization> enumerate_primary(std::uint64_t limit, const PrimeTable& table) {
  if (limit == 0) throw std::invalid_argument("enumerate_primary: limit must be >= 1");
  std::vector<Factorization> out;
  auto collect = [&](const Factorization& f) { out.push_back(f); };
  PrimaryWalker(table, {std::log(static_cast<double>(limit)), limit}, collect).walk(std::nullopt);
  return out;
}

std::vector<Factorization> enumerate_primary_log(double log_limit, const PrimeTable& table) {
  if (!(log_limit >= 0.0)) throw std::invalid_argument("enumerate_primary: log limit must be >= 0");
  std::vector<Factorization> out;
  for_each_primary(log_limit, table, [&](const Factorization& f) { out.push_back(f); });
  return out;
}

}  // namespace divbound
