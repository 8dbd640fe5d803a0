#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "divbound/arith.hpp"
#include "divbound/primes.hpp"
#include "divbound/rho.hpp"

namespace divbound {
namespace {

// 50-digit reference values.
constexpr double kRhoChampion = 2.0008012822217082;
constexpr double kThetaChampion = 0.20069510428690614;
constexpr double kRho16 = 11.734236928191223;
constexpr double kTheta16 = 0.36780840676377560;
constexpr double kRho17 = -12.125178176705679;
constexpr double kKappa = 1.3840127408266659;
constexpr double kRhoN9 = 0.74904319105576070;

const PrimeTable& table() {
  static const PrimeTable t = PrimeTable::build(PrimeTable::kDefaultCount);
  return t;
}

const Factorization& champion() {
  static const Factorization f = parse_factored("2^26*3^16");
  return f;
}

TEST(Rho, Champion) {
  RhoReport r = rho(champion());
  EXPECT_NEAR(r.rho, kRhoChampion, 1e-13);
  EXPECT_NEAR(r.rho, 2.00080128, 1e-8);
  EXPECT_TRUE(r.exceeds_two);
  EXPECT_TRUE(r.in_theorem_range);
  EXPECT_FALSE(r.escalated);
  EXPECT_EQ(r.n, "2^26*3^16");
  EXPECT_EQ(r.omega, 2u);
  EXPECT_NEAR(r.tau_log, std::log(459.0), 1e-14);
  EXPECT_NEAR(r.theta, kThetaChampion, 1e-15);
}

TEST(Rho, SmallIntegers) {
  RhoReport r16 = rho(factorize(16));
  EXPECT_NEAR(r16.rho, kRho16, 1e-12);
  EXPECT_FALSE(r16.in_theorem_range);
  RhoReport r17 = rho(factorize(17));
  EXPECT_NEAR(r17.rho, kRho17, 1e-12);
  EXPECT_TRUE(r17.in_theorem_range);
  EXPECT_FALSE(r17.exceeds_two);
}

TEST(Rho, DomainErrors) {
  EXPECT_THROW(rho(factorize(15)), std::domain_error);
  EXPECT_THROW(rho(Factorization()), std::domain_error);
  EXPECT_THROW(theta(factorize(2)), std::domain_error);
  EXPECT_THROW(theta(Factorization()), std::domain_error);
}

TEST(Theta, Examples) {
  EXPECT_NEAR(theta(factorize(16)), kTheta16, 1e-15);
  EXPECT_NEAR(theta(factorize(223092870)), kKappa, 1e-14);
  EXPECT_NEAR(theta(champion()), kThetaChampion, 1e-15);
  EXPECT_NEAR(rho(factorize(223092870)).rho, kRhoN9, 1e-13);
}

TEST(Rho, TripleAgreesWithFactorization) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> dist(16, 1ULL << 62);
  for (int i = 0; i < 5000; ++i) {
    Factorization f = factorize(dist(rng));
    RhoReport a = rho(f);
    RhoReport b = rho_from_triple(f.value_log(), omega(f), log_tau(f));
    ASSERT_NEAR(a.rho, b.rho, 1e-12);
    ASSERT_NEAR(a.theta, b.theta, 1e-12);
  }
}

TEST(Rho, HighPrecisionAgrees) {
  HighReal precise = rho_value(champion().value_log_hp(), HighReal(2), log_tau_hp(champion()));
  EXPECT_NEAR(static_cast<double>(precise), kRhoChampion, 1e-15);
}

// log tau that puts rho exactly at `target` for the given (log n, omega).
double tau_log_for(double n_log, double w, double target) {
  const double x = std::log(n_log);
  const double th = w * x / n_log;
  return (target * std::log(x) / x + 1.0) * w * std::log1p(1.0 / th);
}

TEST(Rho, MarginCountsAsExceeding) {
  const double n_log = 40.0;
  RhoReport inside = rho_from_triple(n_log, 2, tau_log_for(n_log, 2.0, 2.0 - 1e-10));
  EXPECT_NEAR(inside.rho, 2.0 - 1e-10, 1e-12);
  EXPECT_TRUE(inside.exceeds_two);
  RhoReport below = rho_from_triple(n_log, 2, tau_log_for(n_log, 2.0, 2.0 - 1e-6));
  EXPECT_FALSE(below.exceeds_two);
}

TEST(Kappa, Search) {
  for (std::size_t k_max : {9u, 100u, 10000u}) {
    KappaResult r = kappa_search(table(), k_max);
    EXPECT_EQ(r.k, 9u);
    EXPECT_NEAR(r.kappa, kKappa, 1e-13);
    EXPECT_NEAR(r.kappa, 1.3840127, 1e-6);
  }
  const double l = table().log_primorial(10000);
  EXPECT_LT(10000.0 * std::log(l) / l, 1.2);
  EXPECT_THROW(kappa_search(table(), table().size() + 1), std::out_of_range);
}

TEST(ExtremalM, SingletonPowerOfTwo) {
  // alpha + 1 = round((z + L(1)) / log 2) = 21.
  Factorization m = extremal_m(table(), 1, 20.0 * std::log(2.0));
  EXPECT_EQ(m, Factorization::from_pairs({{2, 20}}));
}

TEST(ExtremalM, ThreePrimes) {
  Factorization m = extremal_m(table(), 3, 100.0);
  EXPECT_EQ(m, Factorization::from_pairs({{2, 49}, {3, 30}, {5, 20}}));
  EXPECT_TRUE(is_primary(m));
  EXPECT_NEAR(rho(m).rho, 1.9503432642445168, 1e-12);
}

TEST(ExtremalM, ApproachesOneFromAbove) {
  // k = 5 values rise briefly, then fall toward 1.
  std::vector<double> z_values{50, 100, 200, 400, 1e3, 1e4, 1e5, 1e6, 1e8};
  std::vector<double> rhos;
  for (double z : z_values) rhos.push_back(rho(extremal_m(table(), 5, z)).rho);
  EXPECT_NEAR(rhos[0], 1.8754, 1e-4);
  EXPECT_NEAR(rhos[3], 1.7442, 1e-4);
  for (std::size_t i = 2; i + 1 < rhos.size(); ++i) EXPECT_GT(rhos[i], rhos[i + 1]) << z_values[i];
  EXPECT_GT(rhos.back(), 1.0);
  EXPECT_LT(rhos.back(), 1.2);
}

TEST(ExtremalM, StaysBelowTwo) {
  for (std::size_t k = 1; k <= 30; ++k) {
    for (double z : {200.0, 1e3, 1e4, 1e6}) {
      Factorization m;
      try {
        m = extremal_m(table(), k, z);
      } catch (const std::invalid_argument&) {
        continue;  // z too small for this k
      }
      if (m.value_log() < std::log(17.0)) continue;
      EXPECT_LT(rho(m).rho, 2.0) << "k=" << k << " z=" << z;
    }
  }
}

TEST(ExtremalM, RejectsTooSmallZ) {
  EXPECT_THROW(extremal_m(table(), 20, 1.0), std::invalid_argument);
  EXPECT_THROW(extremal_m(table(), 0, 100.0), std::invalid_argument);
}

TEST(Rho, ChampionDominatesTwoPrimeShapes) {
  // Every primary 2^a 3^b in (1e9, 1e16].
  const double lo = std::log(1e9);
  const double hi = std::log(1e16);
  const double best = rho(champion()).rho;
  std::size_t equal = 0;
  for (std::uint32_t a = 1; a <= 60; ++a) {
    for (std::uint32_t b = 1; b <= a; ++b) {
      Factorization n = Factorization::from_pairs({{2, a}, {3, b}});
      if (n.value_log() <= lo || n.value_log() > hi) continue;
      double r = rho(n).rho;
      EXPECT_LE(r, best);
      if (r == best) {
        ++equal;
        EXPECT_EQ(n, champion());
      }
    }
  }
  EXPECT_EQ(equal, 1u);
}

}  // namespace
}  // namespace divbound
