#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "divbound/arith.hpp"
#include "divbound/primes.hpp"
#include "divbound/rho.hpp"
#include "divbound/verify/cases.hpp"
#include "divbound/verify/grid.hpp"
#include "divbound/verify/hk.hpp"

namespace divbound {
namespace {

const PrimeTable& table() {
  static const PrimeTable t = PrimeTable::build(11000);
  return t;
}

TEST(Properties, KappaBoundsTheta) {
  const double kappa = kappa_search(table(), 10000).kappa;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(3, 1000000000000ULL);
  for (int i = 0; i < 100000; ++i) {
    std::uint64_t n = dist(rng);
    ASSERT_LE(theta(factorize(n)), kappa + 1e-12) << n;
  }
  for (std::size_t k = 2; k <= 40; ++k) {
    std::vector<std::uint32_t> ones(k, 1);
    ASSERT_LE(theta(Factorization::from_exponents(table(), ones)), kappa + 1e-12) << k;
  }
}

TEST(Properties, HkDominatesRho) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> k_dist(3, 200);
  std::uniform_int_distribution<std::uint32_t> top_dist(1, 40);
  for (int i = 0; i < 10000; ++i) {
    std::size_t k = k_dist(rng);
    std::uniform_int_distribution<std::uint32_t> e_dist(1, top_dist(rng));
    std::vector<std::uint32_t> exponents(k);
    for (auto& e : exponents) e = e_dist(rng);
    std::sort(exponents.begin(), exponents.end(), std::greater<>());
    Factorization f = Factorization::from_exponents(table(), exponents);
    double x = std::log(f.value_log());
    ASSERT_LE(rho(f).rho, hk(table(), k, x) + 1e-9) << f.to_string();
  }
}

TEST(Properties, NumeratorBelowPointEightLogKOnMidGrids) {
  for (std::size_t k = kMidFirstK; k <= kMidLastK; ++k) {
    const double lk = std::log(static_cast<double>(k));
    for (int i = 0; i <= 20; ++i) {
      double x = lk * (1.0 + 0.8 * i / 20.0);
      ASSERT_LT(hk_numerator(table(), k, x), 0.8 * lk) << "k=" << k << " x=" << x;
    }
  }
}

double max_central_difference(std::size_t k, double a, double b, int steps) {
  const double h = (b - a) / steps;
  double worst = 0.0;
  for (int i = 1; i < steps; ++i) {
    double x = a + i * h;
    double d = (hk(table(), k, x + 1e-5) - hk(table(), k, x - 1e-5)) / 2e-5;
    worst = std::max(worst, std::abs(d));
  }
  return worst;
}

TEST(Properties, DerivativeBoundOnMidGrids) {
  EXPECT_LE(hk_derivative_bound(kMidLastK), kMidParams.m1);
  for (std::size_t k = kMidFirstK; k <= kMidLastK; k += 97) {
    const double lk = std::log(static_cast<double>(k));
    const double bound = hk_derivative_bound(k);
    ASSERT_LE(bound, kMidParams.m1) << k;
    ASSERT_LE(max_central_difference(k, lk, 1.8 * lk, 400), bound) << k;
  }
}

TEST(Properties, DerivativeBoundOnSmallGrids) {
  for (std::size_t k = 1; k <= kSmallLastK; ++k) {
    if (k == 2) continue;
    GridCertificate c = verify_case_small(table(), k, false,
                                          GridParams{0.01, kSmallParams.m1, kSmallParams.threshold});
    ASSERT_LE(max_central_difference(k, c.alpha, c.beta, 400), kSmallParams.m1) << k;
  }
}

// The certificate bound grid_max + delta * M1 must cover a much finer grid.
TEST(Properties, FinerGridStaysBelowCertificateBound) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> k_dist(kMidFirstK, kMidLastK);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t k = k_dist(rng);
    GridCertificate c = verify_case_mid(table(), k);
    ASSERT_TRUE(c.pass) << k;
    const double bound = c.grid_max + c.delta * c.m1;
    const double fine = c.delta / 10.0;
    const std::uint64_t count = grid_point_count(c.alpha, c.beta, fine);
    for (std::uint64_t i = 0; i < count; ++i) {
      double x = grid_point(c.alpha, c.beta, fine, i, count);
      ASSERT_LE(hk(table(), k, x), bound) << "k=" << k << " x=" << x;
    }
  }
}

}  // namespace
}  // namespace divbound
