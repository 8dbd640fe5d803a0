#include "divbound/hull.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace divbound {

HullFunction HullFunction::build(std::size_t s_max) {
  if (s_max == 0) throw std::invalid_argument("build_hull: s_max must be >= 1");
  std::vector<HullPoint> vertices;
  vertices.reserve(s_max + 1);
  vertices.push_back({0.0, 0.0});
  for (std::size_t s = s_max; s >= 1; --s) {
    auto sd = static_cast<double>(s);
    vertices.push_back({1.0 / sd, std::log(sd + 1.0) / sd});
  }
  for (std::size_t i = 2; i < vertices.size(); ++i) {
    double left = (vertices[i - 1].y - vertices[i - 2].y) / (vertices[i - 1].x - vertices[i - 2].x);
    double right = (vertices[i].y - vertices[i - 1].y) / (vertices[i].x - vertices[i - 1].x);
    if (!(right < left)) throw std::logic_error("build_hull: generating points are not concave");
  }
  return HullFunction(std::move(vertices), s_max);
}

double HullFunction::operator()(double theta) const {
  if (!(theta >= 0.0 && theta <= 1.0)) throw std::domain_error("f: theta must lie in [0, 1]");
  if (theta == 0.0) return 0.0;
  if (theta < 1.0 / static_cast<double>(s_max_)) return hull_closed_form(theta);
  return interpolate(theta);
}

double HullFunction::interpolate(double theta) const {
  if (!(theta >= 0.0 && theta <= 1.0)) throw std::domain_error("f: theta must lie in [0, 1]");
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), theta,
                             [](const HullPoint& v, double t) { return v.x < t; });
  if (it == vertices_.begin()) return vertices_.front().y;
  if (it->x == theta) return it->y;
  const HullPoint& right = *it;
  const HullPoint& left = *(it - 1);
  double w = (theta - left.x) / (right.x - left.x);
  return left.y + w * (right.y - left.y);
}

std::size_t hull_segment(double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) throw std::domain_error("hull_segment: theta must lie in (0, 1]");
  auto s = static_cast<std::size_t>(std::floor(1.0 / theta));
  // Right-closed intervals: theta == 1/s belongs to segment s.
  while (s > 1 && theta * static_cast<double>(s) > 1.0) --s;
  while (theta * static_cast<double>(s + 1) <= 1.0) ++s;
  return std::max<std::size_t>(s, 1);
}

double hull_closed_form(double theta) {
  auto s = static_cast<double>(hull_segment(theta));
  return (theta * (s + 1.0) - 1.0) * std::log(s + 1.0) + (1.0 - s * theta) * std::log(s + 2.0);
}

void write_hull_csv(std::ostream& out, const HullFunction& hull, std::size_t points) {
  if (points < 2) throw std::invalid_argument("write_hull_csv: need at least 2 points");
  auto old_precision = out.precision(17);
  out << "theta,f\n";
  for (std::size_t i = 0; i < points; ++i) {
    double theta = static_cast<double>(i) / static_cast<double>(points - 1);
    out << theta << ',' << hull(theta) << '\n';
  }
  out.precision(old_precision);
}

Theorem2Witness theorem2_witness(const PrimeTable& table, double theta, double z_log) {
  if (!(theta > 0.0 && theta <= 1.0)) throw std::invalid_argument("witness: theta must lie in (0, 1]");
  if (!(z_log > std::exp(1.0))) throw std::invalid_argument("witness: z_log must exceed e");
  std::size_t s = hull_segment(theta);
  double scale = z_log / std::log(z_log);
  auto first = static_cast<std::size_t>(std::floor((1.0 - static_cast<double>(s) * theta) * scale));
  auto last = static_cast<std::size_t>(std::floor(theta * scale));
  if (last == 0 || first > last) {
    throw std::invalid_argument("witness: degenerate index bounds for theta=" + std::to_string(theta) +
                                ", z_log=" + std::to_string(z_log));
  }
  table.require(last);
  std::vector<std::uint32_t> exponents(last, static_cast<std::uint32_t>(s));
  for (std::size_t j = 0; j < first; ++j) exponents[j] = static_cast<std::uint32_t>(s + 1);

  Theorem2Witness w;
  w.m = Factorization::from_exponents(table, exponents);
  w.s = s;
  w.m1_primes = first;
  w.last_index = last;
  double m_log = w.m.value_log();
  double loglog = std::log(m_log);
  w.ratio = log_tau(w.m) * loglog / m_log;
  w.theta_actual = static_cast<double>(last) * loglog / m_log;
  return w;
}

bool in_target_sequence(const Factorization& n, double theta, double tolerance_scale) {
  double n_log = n.value_log();
  if (!(n_log > 1.0)) return false;
  double loglog = std::log(n_log);
  double gap = std::abs(static_cast<double>(omega(n)) - theta * n_log / loglog);
  return gap < tolerance_scale * n_log / std::pow(loglog, 1.5);
}

}  // namespace divbound
