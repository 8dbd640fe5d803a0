#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "divbound/hull.hpp"
#include "divbound/primes.hpp"
#include "oracles.hpp"

namespace divbound {
namespace {

const PrimeTable& table() {
  static const PrimeTable t = PrimeTable::build(PrimeTable::kDefaultCount);
  return t;
}

TEST(Hull, BuildSmall) {
  EXPECT_THROW(HullFunction::build(0), std::invalid_argument);
  HullFunction one = HullFunction::build(1);
  ASSERT_EQ(one.vertices().size(), 2u);
  EXPECT_EQ(one.vertices()[0].x, 0.0);
  EXPECT_EQ(one.vertices()[0].y, 0.0);
  EXPECT_EQ(one.vertices()[1].x, 1.0);
  EXPECT_DOUBLE_EQ(one.vertices()[1].y, std::log(2.0));

  HullFunction three = HullFunction::build(3);
  ASSERT_EQ(three.vertices().size(), 4u);
  EXPECT_DOUBLE_EQ(three.vertices()[1].x, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(three.vertices()[1].y, std::log(4.0) / 3.0);
  EXPECT_DOUBLE_EQ(three.vertices()[2].x, 0.5);
  EXPECT_DOUBLE_EQ(three.vertices()[2].y, std::log(3.0) / 2.0);
}

TEST(Hull, VertexValues) {
  HullFunction f = HullFunction::build(50);
  EXPECT_NEAR(f(1.0), std::log(2.0), 1e-12);
  EXPECT_NEAR(f(0.5), std::log(3.0) / 2.0, 1e-12);
  EXPECT_NEAR(f(1.0 / 3.0), std::log(4.0) / 3.0, 1e-12);
  EXPECT_EQ(f(0.0), 0.0);
  for (std::size_t s = 1; s <= 50; ++s) {
    double sd = static_cast<double>(s);
    EXPECT_NEAR(f(1.0 / sd), std::log(sd + 1.0) / sd, 1e-12) << s;
  }
  // 50-digit reference for the closed form on segment s = 1.
  EXPECT_NEAR(f(0.75), 0.62122666244700008, 1e-15);
  EXPECT_NEAR(hull_closed_form(0.75), 0.5 * std::log(2.0) + 0.25 * std::log(3.0), 1e-15);
}

TEST(Hull, MatchesBruteForceHull) {
  for (std::size_t s_max : {1u, 2u, 10u, 50u}) {
    std::vector<oracle::Point> points{{0.0, 0.0}};
    for (std::size_t s = 1; s <= s_max; ++s) {
      double sd = static_cast<double>(s);
      points.push_back({1.0 / sd, std::log(sd + 1.0) / sd});
    }
    auto reference = oracle::upper_hull(points);
    HullFunction f = HullFunction::build(s_max);
    ASSERT_EQ(reference.size(), f.vertices().size()) << "every generated point is a vertex";
    for (std::size_t i = 0; i < reference.size(); ++i) {
      EXPECT_EQ(reference[i].x, f.vertices()[i].x);
      EXPECT_EQ(reference[i].y, f.vertices()[i].y);
    }
  }
}

TEST(Hull, ConcaveAndNondecreasing) {
  HullFunction f = HullFunction::build(50);
  auto v = f.vertices();
  for (std::size_t i = 2; i < v.size(); ++i) {
    double left = (v[i - 1].y - v[i - 2].y) / (v[i - 1].x - v[i - 2].x);
    double right = (v[i].y - v[i - 1].y) / (v[i].x - v[i - 1].x);
    EXPECT_LT(right, left) << i;
    EXPECT_GT(right, 0.0);
  }
  double previous = 0.0;
  for (int i = 1; i <= 10000; ++i) {
    double th = i / 10000.0;
    double value = f(th);
    EXPECT_GE(value, previous - 1e-15) << th;
    previous = value;
  }
}

TEST(Hull, ClosedFormMatchesInterpolation) {
  HullFunction f = HullFunction::build(50);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(1.0 / 50.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    double th = dist(rng);
    EXPECT_NEAR(hull_closed_form(th), f.interpolate(th), 1e-12) << th;
  }
}

TEST(Hull, ClosedFormBelowLastVertex) {
  HullFunction f = HullFunction::build(5);
  HullFunction big = HullFunction::build(200);
  for (double th : {0.01, 0.05, 0.1, 0.15}) EXPECT_NEAR(f(th), big.interpolate(th), 1e-12) << th;
}

TEST(Hull, SegmentsAreRightClosed) {
  EXPECT_EQ(hull_segment(1.0), 1u);
  EXPECT_EQ(hull_segment(0.75), 1u);
  EXPECT_EQ(hull_segment(0.5), 2u);
  EXPECT_EQ(hull_segment(0.4), 2u);
  EXPECT_EQ(hull_segment(1.0 / 3.0), 3u);
  EXPECT_EQ(hull_segment(0.34), 2u);
  EXPECT_EQ(hull_segment(0.01), 100u);
  EXPECT_THROW(hull_segment(0.0), std::domain_error);
  EXPECT_THROW(hull_segment(1.5), std::domain_error);
}

TEST(Hull, DomainErrors) {
  HullFunction f = HullFunction::build(10);
  EXPECT_THROW(f(-0.1), std::domain_error);
  EXPECT_THROW(f(1.01), std::domain_error);
  EXPECT_THROW(f(std::nan("")), std::domain_error);
}

TEST(Hull, CsvOutput) {
  std::ostringstream out;
  write_hull_csv(out, HullFunction::build(50), 5);
  std::istringstream in(out.str());
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[0], "theta,f");
  EXPECT_EQ(lines[1], "0,0");
  EXPECT_EQ(lines[3].substr(0, 4), "0.5,");
  EXPECT_THROW(write_hull_csv(out, HullFunction::build(5), 1), std::invalid_argument);
}

struct WitnessReference {
  double theta;
  double z_log;
  double ratio;
  double theta_actual;
};

// 50-digit references from an independent evaluation of the construction.
const WitnessReference kWitness[] = {
    {1.0, 1e3, 0.84060488247765635, 1.2127364952975647},
    {1.0, 1e4, 0.79392682908707137, 1.1453942991526175},
    {1.0, 1e5, 0.76855465000174864, 1.1087899822096757},
    {0.5, 1e3, 0.76810614940739391, 0.69916034740390425},
    {0.5, 1e4, 0.69284643849559161, 0.63065600634738596},
    {0.5, 1e5, 0.65462545096777992, 0.59586576421915666},
    {0.4, 1e3, 0.75850869916499390, 0.61173519696319570},
    {0.4, 1e4, 0.66265155020753382, 0.53334120238606782},
    {0.4, 1e5, 0.61670600758606444, 0.49636150930553361},
};

TEST(Witness, MatchesReference) {
  for (const auto& ref : kWitness) {
    Theorem2Witness w = theorem2_witness(table(), ref.theta, ref.z_log);
    EXPECT_NEAR(w.ratio, ref.ratio, 1e-10) << ref.theta << " " << ref.z_log;
    EXPECT_NEAR(w.theta_actual, ref.theta_actual, 1e-10) << ref.theta << " " << ref.z_log;
    EXPECT_TRUE(is_primary(w.m));
  }
}

TEST(Witness, ThetaOneIsAPrimorial) {
  Theorem2Witness w = theorem2_witness(table(), 1.0, 1e3);
  EXPECT_EQ(w.s, 1u);
  EXPECT_EQ(w.m1_primes, 0u);
  EXPECT_EQ(w.last_index, static_cast<std::size_t>(1e3 / std::log(1e3)));
  for (const auto& pp : w.m.pairs()) EXPECT_EQ(pp.exponent, 1u);
}

TEST(Witness, ShapeForSegmentTwo) {
  Theorem2Witness w = theorem2_witness(table(), 0.4, 1e4);
  const double K = 1e4 / std::log(1e4);
  EXPECT_EQ(w.s, 2u);
  EXPECT_EQ(w.m1_primes, static_cast<std::size_t>(std::floor(0.2 * K)));
  EXPECT_EQ(w.last_index, static_cast<std::size_t>(std::floor(0.4 * K)));
  auto pairs = w.m.pairs();
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    EXPECT_EQ(pairs[j].exponent, j < w.m1_primes ? 3u : 2u);
  }
}

TEST(Witness, ConvergesTowardTheHull) {
  HullFunction f = HullFunction::build(50);
  for (double th : {1.0, 0.5, 0.4}) {
    double previous_gap = INFINITY;
    double previous_theta_gap = INFINITY;
    for (double z : {1e3, 1e4, 1e5}) {
      Theorem2Witness w = theorem2_witness(table(), th, z);
      double gap = std::abs(w.ratio - f(th));
      double theta_gap = std::abs(w.theta_actual - th);
      EXPECT_LT(gap, previous_gap) << th << " " << z;
      EXPECT_LT(theta_gap, previous_theta_gap) << th << " " << z;
      previous_gap = gap;
      previous_theta_gap = theta_gap;
    }
  }
  EXPECT_LT(std::abs(theorem2_witness(table(), 0.5, 1e4).ratio - std::log(3.0) / 2.0), 0.15);
}

TEST(Witness, Errors) {
  EXPECT_THROW(theorem2_witness(table(), 0.0, 1e4), std::invalid_argument);
  EXPECT_THROW(theorem2_witness(table(), 1.2, 1e4), std::invalid_argument);
  EXPECT_THROW(theorem2_witness(table(), 0.5, 2.0), std::invalid_argument);
  EXPECT_THROW(theorem2_witness(table(), 0.01, 20.0), std::invalid_argument);
  EXPECT_THROW(theorem2_witness(PrimeTable::build(10), 0.5, 1e4), std::out_of_range);
}

TEST(TargetSequence, Membership) {
  Theorem2Witness w = theorem2_witness(table(), 0.5, 1e5);
  EXPECT_TRUE(in_target_sequence(w.m, 0.5));
  EXPECT_FALSE(in_target_sequence(w.m, 0.5, 1e-3));
  EXPECT_FALSE(in_target_sequence(Factorization::from_pairs({{2, 1000}}), 0.9));
}

}  // namespace
}  // namespace divbound
