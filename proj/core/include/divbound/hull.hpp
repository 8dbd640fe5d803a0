#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "divbound/arith.hpp"
#include "divbound/primes.hpp"

namespace divbound {

struct HullPoint {
  double x;
  double y;
};

/// Upper boundary of the convex hull of {(1/s, log(s+1)/s) : s >= 1} u {(0,0)}.
///
/// Every generating point lies on the strictly concave curve x log(1 + 1/x),
/// so each one is a hull vertex and the boundary is just the points sorted by
/// x. The polyline built with s = 1..s_max is exact on [1/s_max, 1]; smaller
/// theta are answered from the closed form, which is exact for every segment.
class HullFunction {
 public:
  // s_max >= 1, otherwise std::invalid_argument.
  static HullFunction build(std::size_t s_max);

  // Vertices ordered by x: (0,0), (1/s_max, ..), ..., (1, log 2).
  std::span<const HullPoint> vertices() const noexcept { return vertices_; }
  std::size_t s_max() const noexcept { return s_max_; }

  // f(theta) for theta in [0, 1]; std::domain_error outside.
  double operator()(double theta) const;

  // Linear interpolation between the stored vertices only.
  double interpolate(double theta) const;

 private:
  explicit HullFunction(std::vector<HullPoint> vertices, std::size_t s_max)
      : vertices_(std::move(vertices)), s_max_(s_max) {}

  std::vector<HullPoint> vertices_;
  std::size_t s_max_;
};

// The s >= 1 with theta in (1/(s+1), 1/s]. Requires 0 < theta <= 1.
std::size_t hull_segment(double theta);

// (theta (s+1) - 1) log(s+1) + (1 - s theta) log(s+2) with s = hull_segment(theta).
double hull_closed_form(double theta);

// Writes "theta,f" rows for `points` equally spaced theta in [0, 1].
void write_hull_csv(std::ostream& out, const HullFunction& hull, std::size_t points);

/// Constructive integer m = m1^(s+1) m2^s for theta in (1/(s+1), 1/s]:
/// with K = z_log / log z_log, m1 is the product of the first
/// floor((1 - s theta) K) primes and m2 of the following primes up to index
/// floor(theta K).
struct Theorem2Witness {
  Factorization m;
  std::size_t s = 0;
  std::size_t m1_primes = 0;  // primes with exponent s+1
  std::size_t last_index = 0; // omega(m)
  double ratio = 0.0;         // log tau(m) loglog m / log m
  double theta_actual = 0.0;  // omega(m) loglog m / log m
};

// std::invalid_argument when theta is outside (0, 1] or the index bounds
// degenerate; std::out_of_range if the table is too short.
Theorem2Witness theorem2_witness(const PrimeTable& table, double theta, double z_log);

// |omega(n) - theta log n / loglog n| < scale * log n / (loglog n)^(3/2).
bool in_target_sequence(const Factorization& n, double theta, double tolerance_scale = 1.0);

}  // namespace divbound
