#include "divbound/primes.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

namespace divbound {
namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Upper bound for p_k: p_k < k (log k + log log k) for k >= 6.
std::uint64_t nth_prime_upper_bound(std::size_t k) {
  if (k < 6) return 13;
  double kd = static_cast<double>(k);
  return static_cast<std::uint64_t>(kd * (std::log(kd) + std::log(std::log(kd)))) + 1;
}

constexpr std::array<char, 8> kCacheMagic{'D', 'V', 'B', 'P', 'R', 'I', 'M', 'E'};
constexpr std::uint32_t kCacheVersion = 1;

void write_u64(std::ostream& out, std::uint64_t v) {
  std::array<unsigned char, 8> bytes{};
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

void write_u32(std::ostream& out, std::uint32_t v) {
  std::array<unsigned char, 4> bytes{};
  for (int i = 0; i < 4; ++i) bytes[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

std::uint64_t read_u64(std::istream& in) {
  std::array<unsigned char, 8> bytes{};
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    throw std::runtime_error("prime cache: truncated file");
  }
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  return v;
}

std::uint32_t read_u32(std::istream& in) {
  std::array<unsigned char, 4> bytes{};
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    throw std::runtime_error("prime cache: truncated file");
  }
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes[i]) << (8 * i);
  return v;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = std::countr_zero(d);
  d >>= r;
  // This base set is exact for all n < 2^64.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    std::uint64_t base = a % n;
    if (base == 0) continue;
    std::uint64_t x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> sieve_primes_upto(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;

  auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
  while (root * root > limit) --root;
  while ((root + 1) * (root + 1) <= limit) ++root;

  std::vector<bool> small(root + 1, true);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = false;
  }

  constexpr std::uint64_t kSegment = 1 << 18;
  std::vector<char> mark(kSegment);
  for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
    std::uint64_t hi = std::min(limit, lo + kSegment - 1);
    std::fill(mark.begin(), mark.end(), 1);
    for (std::uint64_t p : base) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= hi; j += p) mark[j - lo] = 0;
    }
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (mark[n - lo]) out.push_back(n);
    }
  }
  return out;
}

PrimeTable::PrimeTable(std::vector<std::uint64_t> primes,
                       std::vector<double> log_primorial,
                       std::vector<double> loglog_sum)
    : primes_(std::move(primes)),
      log_primorial_(std::move(log_primorial)),
      loglog_sum_(std::move(loglog_sum)) {}

PrimeTable PrimeTable::build(std::size_t count) {
  if (count == 0) throw std::invalid_argument("PrimeTable: count must be >= 1");
  if (count > kMaxCount) {
    throw std::invalid_argument("PrimeTable: count exceeds " + std::to_string(kMaxCount));
  }
  std::vector<std::uint64_t> primes = sieve_primes_upto(nth_prime_upper_bound(count));
  if (primes.size() < count) {
    throw std::logic_error("PrimeTable: sieve bound too small");
  }
  primes.resize(count);

  std::vector<double> log_primorial(count + 1, 0.0);
  std::vector<double> loglog_sum(count + 1, 0.0);
  CompensatedSum<double> sum_log;
  CompensatedSum<double> sum_loglog;
  for (std::size_t k = 1; k <= count; ++k) {
    double lp = std::log(static_cast<double>(primes[k - 1]));
    sum_log.add(lp);
    sum_loglog.add(std::log(lp));
    log_primorial[k] = sum_log.value();
    loglog_sum[k] = sum_loglog.value();
  }
  return PrimeTable(std::move(primes), std::move(log_primorial), std::move(loglog_sum));
}

void PrimeTable::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("prime cache: cannot write " + path.string());
  out.write(kCacheMagic.data(), kCacheMagic.size());
  write_u32(out, kCacheVersion);
  write_u32(out, 0);
  write_u64(out, primes_.size());
  for (std::uint64_t p : primes_) write_u64(out, p);
  for (std::size_t k = 1; k <= size(); ++k) write_u64(out, std::bit_cast<std::uint64_t>(log_primorial_[k]));
  for (std::size_t k = 1; k <= size(); ++k) write_u64(out, std::bit_cast<std::uint64_t>(loglog_sum_[k]));
  if (!out) throw std::runtime_error("prime cache: write failed for " + path.string());
}

PrimeTable PrimeTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("prime cache: cannot open " + path.string());
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kCacheMagic) {
    throw std::runtime_error("prime cache: bad magic in " + path.string());
  }
  if (std::uint32_t version = read_u32(in); version != kCacheVersion) {
    throw std::runtime_error("prime cache: unsupported version " + std::to_string(version));
  }
  read_u32(in);
  std::uint64_t count = read_u64(in);
  if (count == 0 || count > kMaxCount) {
    throw std::runtime_error("prime cache: invalid count " + std::to_string(count));
  }

  std::vector<std::uint64_t> primes(count);
  for (auto& p : primes) p = read_u64(in);
  std::vector<double> log_primorial(count + 1, 0.0);
  std::vector<double> loglog_sum(count + 1, 0.0);
  for (std::size_t k = 1; k <= count; ++k) log_primorial[k] = std::bit_cast<double>(read_u64(in));
  for (std::size_t k = 1; k <= count; ++k) loglog_sum[k] = std::bit_cast<double>(read_u64(in));

  if (primes[0] != 2) throw std::runtime_error("prime cache: first prime is not 2");
  for (std::size_t i = 1; i < count; ++i) {
    if (primes[i] <= primes[i - 1]) throw std::runtime_error("prime cache: primes not increasing");
    if (!(log_primorial[i + 1] > log_primorial[i])) {
      throw std::runtime_error("prime cache: log primorial not increasing");
    }
  }
  return PrimeTable(std::move(primes), std::move(log_primorial), std::move(loglog_sum));
}

PrimeTable PrimeTable::load_or_build(std::size_t count, const std::filesystem::path& cache) {
  if (cache.empty()) return build(count);
  std::error_code ec;
  if (std::filesystem::exists(cache, ec)) {
    try {
      PrimeTable cached = load(cache);
      if (cached.size() >= count) {
        cached.primes_.resize(count);
        cached.log_primorial_.resize(count + 1);
        cached.loglog_sum_.resize(count + 1);
        return cached;
      }
    } catch (const std::runtime_error&) {
      // Unreadable cache: fall through and rebuild it.
    }
  }
  PrimeTable table = build(count);
  if (cache.has_parent_path()) std::filesystem::create_directories(cache.parent_path(), ec);
  table.save(cache);
  return table;
}

void PrimeTable::require(std::size_t k) const {
  if (k > size()) {
    throw std::out_of_range("PrimeTable: index " + std::to_string(k) + " exceeds table size " +
                            std::to_string(size()));
  }
}

std::uint64_t PrimeTable::nth_prime(std::size_t k) const {
  if (k == 0) throw std::out_of_range("PrimeTable: prime indices start at 1");
  require(k);
  return primes_[k - 1];
}

double PrimeTable::log_primorial(std::size_t k) const {
  require(k);
  return log_primorial_[k];
}

double PrimeTable::loglog_sum(std::size_t k) const {
  require(k);
  return loglog_sum_[k];
}

HighReal PrimeTable::log_primorial_hp(std::size_t k) const {
  require(k);
  HighReal sum = 0;
  for (std::size_t j = 0; j < k; ++j) sum += boost::multiprecision::log(HighReal(primes_[j]));
  return sum;
}

HighReal PrimeTable::loglog_sum_hp(std::size_t k) const {
  require(k);
  HighReal sum = 0;
  for (std::size_t j = 0; j < k; ++j) {
    sum += boost::multiprecision::log(boost::multiprecision::log(HighReal(primes_[j])));
  }
  return sum;
}

}  // namespace divbound
