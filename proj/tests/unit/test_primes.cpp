#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "divbound/primes.hpp"
#include "oracles.hpp"

namespace divbound {
namespace {

const PrimeTable& table() {
  static const PrimeTable t = PrimeTable::build(PrimeTable::kDefaultCount);
  return t;
}

TEST(PrimeTable, FirstThreePrimes) {
  PrimeTable t = PrimeTable::build(3);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t.nth_prime(1), 2u);
  EXPECT_EQ(t.nth_prime(2), 3u);
  EXPECT_EQ(t.nth_prime(3), 5u);
  EXPECT_NEAR(t.log_primorial(3), std::log(30.0), 1e-15);
}

TEST(PrimeTable, LogPrimorialOfNine) {
  EXPECT_EQ(table().nth_prime(9), 23u);
  // 50-digit reference: log 223092870.
  EXPECT_NEAR(table().log_primorial(9), 19.223098700129182, 1e-12);
  EXPECT_NEAR(table().log_primorial(9), std::log(223092870.0), 1e-12);
}

TEST(PrimeTable, AgreesWithTrialDivision) {
  EXPECT_EQ(table().nth_prime(1), oracle::nth_prime(1));
  EXPECT_EQ(table().nth_prime(9), oracle::nth_prime(9));
  EXPECT_EQ(table().nth_prime(25), 97u);
  EXPECT_EQ(table().nth_prime(25), oracle::nth_prime(25));
  for (std::size_t k = 1; k <= 1000; ++k) ASSERT_EQ(table().nth_prime(k), oracle::nth_prime(k)) << k;
}

TEST(PrimeTable, AgreesWithPlainSieveAt10999) {
  auto reference = oracle::eratosthenes(120000);
  ASSERT_GE(reference.size(), 11000u);
  EXPECT_EQ(table().nth_prime(10999), reference[10998]);
  EXPECT_EQ(table().nth_prime(10999), 116443u);
  EXPECT_EQ(table().nth_prime(11000), 116447u);
  for (std::size_t k = 1; k <= 11000; ++k) ASSERT_EQ(table().nth_prime(k), reference[k - 1]);
}

TEST(PrimeTable, RejectsBadCounts) {
  EXPECT_THROW(PrimeTable::build(0), std::invalid_argument);
  EXPECT_THROW(PrimeTable::build(PrimeTable::kMaxCount + 1), std::invalid_argument);
}

TEST(PrimeTable, RejectsBadIndices) {
  EXPECT_THROW(table().nth_prime(0), std::out_of_range);
  EXPECT_THROW(table().nth_prime(table().size() + 1), std::out_of_range);
  EXPECT_THROW(table().log_primorial(table().size() + 1), std::out_of_range);
  EXPECT_DOUBLE_EQ(table().log_primorial(0), 0.0);
  EXPECT_DOUBLE_EQ(table().loglog_sum(0), 0.0);
}

TEST(PrimeTable, Invariants) {
  const auto& t = table();
  EXPECT_EQ(t.nth_prime(1), 2u);
  EXPECT_LT(t.loglog_sum(1), 0.0);
  EXPECT_NEAR(t.loglog_sum(1), std::log(std::log(2.0)), 1e-16);
  for (std::size_t k = 1; k <= t.size(); ++k) {
    std::uint64_t p = t.nth_prime(k);
    ASSERT_TRUE(is_prime_u64(p));
    if (k > 1) {
      ASSERT_GT(p, t.nth_prime(k - 1));
    }
    double lp = std::log(static_cast<double>(p));
    double step = t.log_primorial(k) - t.log_primorial(k - 1);
    ASSERT_GT(step, 0.0);
    double ulp = std::nextafter(t.log_primorial(k), INFINITY) - t.log_primorial(k);
    ASSERT_LE(std::abs(step - lp), 2 * ulp) << k;
    ASSERT_NEAR(t.loglog_sum(k) - t.loglog_sum(k - 1), std::log(lp), 1e-11) << k;
  }
}

TEST(PrimeTable, PrimorialMatchesExactProduct) {
  std::uint64_t primorial = 1;
  for (std::size_t k = 1; k <= 15; ++k) {
    primorial *= table().nth_prime(k);
    double rel = std::abs(std::exp(table().log_primorial(k)) - static_cast<double>(primorial)) /
                 static_cast<double>(primorial);
    EXPECT_LT(rel, 1e-12) << k;
  }
}

TEST(PrimeTable, HighPrecisionSumsAgree) {
  for (std::size_t k : {1u, 9u, 100u, 5000u}) {
    EXPECT_NEAR(static_cast<double>(table().log_primorial_hp(k)), table().log_primorial(k), 1e-10);
    EXPECT_NEAR(static_cast<double>(table().loglog_sum_hp(k)), table().loglog_sum(k), 1e-10);
  }
}

class PrimeCacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("divbound_cache_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

TEST_F(PrimeCacheTest, RoundTrip) {
  PrimeTable t = PrimeTable::build(500);
  t.save(dir_ / "p.bin");
  PrimeTable u = PrimeTable::load(dir_ / "p.bin");
  ASSERT_EQ(u.size(), 500u);
  for (std::size_t k = 1; k <= 500; ++k) {
    EXPECT_EQ(u.nth_prime(k), t.nth_prime(k));
    EXPECT_EQ(u.log_primorial(k), t.log_primorial(k));
    EXPECT_EQ(u.loglog_sum(k), t.loglog_sum(k));
  }
}

TEST_F(PrimeCacheTest, LoadOrBuildReusesLargerCache) {
  auto path = dir_ / "sub" / "p.bin";
  PrimeTable big = PrimeTable::load_or_build(800, path);
  ASSERT_TRUE(std::filesystem::exists(path));
  PrimeTable small = PrimeTable::load_or_build(100, path);
  EXPECT_EQ(small.size(), 100u);
  EXPECT_EQ(small.log_primorial(100), big.log_primorial(100));
  PrimeTable larger = PrimeTable::load_or_build(1000, path);
  EXPECT_EQ(larger.size(), 1000u);
  EXPECT_EQ(PrimeTable::load(path).size(), 1000u);
}

TEST_F(PrimeCacheTest, RejectsCorruptFiles) {
  auto path = dir_ / "bad.bin";
  {
    std::ofstream out(path, std::ios::binary);
    out << "NOTAPRIMECACHE";
  }
  EXPECT_THROW(PrimeTable::load(path), std::runtime_error);
  PrimeTable::build(50).save(path);
  std::filesystem::resize_file(path, 100);
  EXPECT_THROW(PrimeTable::load(path), std::runtime_error);
  // A broken cache is rebuilt rather than trusted.
  EXPECT_EQ(PrimeTable::load_or_build(50, path).nth_prime(50), 229u);
  EXPECT_THROW(PrimeTable::load(dir_ / "missing.bin"), std::runtime_error);
}

TEST(MillerRabin, AgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 100000; ++n) ASSERT_EQ(is_prime_u64(n), oracle::is_prime(n)) << n;
}

TEST(MillerRabin, LargeKnownValues) {
  EXPECT_TRUE(is_prime_u64(2305843009213693951ULL));   // 2^61 - 1
  EXPECT_TRUE(is_prime_u64(18446744073709551557ULL));  // largest 64-bit prime
  EXPECT_FALSE(is_prime_u64(3215031751ULL));           // strong pseudoprime to 2, 3, 5, 7
  EXPECT_FALSE(is_prime_u64(3825123056546413051ULL));  // strong pseudoprime to bases up to 23
  EXPECT_FALSE(is_prime_u64(561));
  EXPECT_FALSE(is_prime_u64(2305843009213693951ULL * 3));
}

TEST(Sieve, PrimeCounts) {
  EXPECT_TRUE(sieve_primes_upto(1).empty());
  EXPECT_EQ(sieve_primes_upto(2).size(), 1u);
  EXPECT_EQ(sieve_primes_upto(100).size(), 25u);
  EXPECT_EQ(sieve_primes_upto(1000000).size(), 78498u);
  EXPECT_EQ(sieve_primes_upto(1000000), oracle::eratosthenes(1000000));
}

}  // namespace
}  // namespace divbound
