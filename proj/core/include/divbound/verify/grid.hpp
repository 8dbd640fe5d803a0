#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "divbound/precision.hpp"

namespace divbound {

/// Result of certifying max_{[alpha,beta]} h < threshold from grid values and
/// a derivative bound: every point of the interval is within delta of a grid
/// point, so max h <= M + delta * m1 where M is the grid maximum.
struct GridCertificate {
  std::size_t k = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double delta = 0.0;
  double m1 = 0.0;
  double grid_max = -std::numeric_limits<double>::infinity();
  double argmax = 0.0;
  double threshold = 0.0;
  double slack = 0.0;  // threshold - (grid_max + delta * m1)
  bool pass = false;   // slack > kNumericMargin
  bool escalated = false;
  std::uint64_t points_evaluated = 0;
  std::string diagnostic;
};

// Number of grid points alpha + i*delta (i = 0..n) plus beta when it is not
// already on the grid.
inline std::uint64_t grid_point_count(double alpha, double beta, double delta) {
  auto steps = static_cast<std::uint64_t>(std::floor((beta - alpha) / delta));
  bool beta_on_grid = alpha + static_cast<double>(steps) * delta >= beta;
  return steps + 1 + (beta_on_grid ? 0 : 1);
}

// The i-th grid point; the last one is clamped to beta.
inline double grid_point(double alpha, double beta, double delta, std::uint64_t i,
                         std::uint64_t count) {
  if (i + 1 == count) return beta;
  return std::min(beta, alpha + static_cast<double>(i) * delta);
}

/// Evaluates `h` on alpha, alpha + delta, ..., beta (endpoint forced onto the
/// grid) and applies the derivative-bound argument. A non-finite value fails
/// the certificate with a diagnostic instead of throwing.
template <class Evaluate>
GridCertificate grid_verify(Evaluate&& h, double alpha, double beta, double delta, double m1,
                            double threshold) {
  if (!(delta > 0.0)) throw std::invalid_argument("grid_verify: delta must be > 0");
  if (!(m1 >= 0.0)) throw std::invalid_argument("grid_verify: m1 must be >= 0");
  if (!(alpha <= beta)) throw std::invalid_argument("grid_verify: alpha must be <= beta");

  GridCertificate cert;
  cert.alpha = alpha;
  cert.beta = beta;
  cert.delta = delta;
  cert.m1 = m1;
  cert.threshold = threshold;

  const std::uint64_t count = grid_point_count(alpha, beta, delta);
  for (std::uint64_t i = 0; i < count; ++i) {
    double x = grid_point(alpha, beta, delta, i, count);
    double value = h(x);
    ++cert.points_evaluated;
    if (!std::isfinite(value)) {
      cert.grid_max = std::numeric_limits<double>::infinity();
      cert.argmax = x;
      cert.slack = -std::numeric_limits<double>::infinity();
      cert.pass = false;
      cert.diagnostic = "non-finite value at x=" + std::to_string(x);
      return cert;
    }
    if (value > cert.grid_max) {
      cert.grid_max = value;
      cert.argmax = x;
    }
  }
  cert.slack = threshold - (cert.grid_max + delta * m1);
  cert.pass = cert.slack > kNumericMargin;
  return cert;
}

/// Same certificate, but a marginal result (|slack| < kEscalationBand) is
/// recomputed with the 113-bit evaluator `h_precise`.
template <class Evaluate, class EvaluatePrecise>
GridCertificate grid_verify_escalating(Evaluate&& h, EvaluatePrecise&& h_precise, double alpha,
                                       double beta, double delta, double m1, double threshold) {
  GridCertificate cert = grid_verify(h, alpha, beta, delta, m1, threshold);
  if (!cert.diagnostic.empty() || std::abs(cert.slack) >= kEscalationBand) return cert;

  const std::uint64_t count = grid_point_count(alpha, beta, delta);
  HighReal best = -std::numeric_limits<double>::infinity();
  double argmax = alpha;
  for (std::uint64_t i = 0; i < count; ++i) {
    double x = grid_point(alpha, beta, delta, i, count);
    HighReal value = h_precise(HighReal(x));
    if (value > best) {
      best = value;
      argmax = x;
    }
  }
  HighReal slack = HighReal(threshold) - (best + HighReal(delta) * HighReal(m1));
  cert.grid_max = static_cast<double>(best);
  cert.argmax = argmax;
  cert.slack = static_cast<double>(slack);
  cert.pass = slack > HighReal(kNumericMargin);
  cert.escalated = true;
  cert.points_evaluated += count;
  return cert;
}

}  // namespace divbound
