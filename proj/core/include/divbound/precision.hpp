#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace divbound {

// 113-bit binary mantissa; used when a double result lands too close to a
// decision threshold.
using HighReal = boost::multiprecision::cpp_bin_float_quad;

// Safety margin applied to every comparison against a threshold.
inline constexpr double kNumericMargin = 1e-9;

// Results whose distance to the threshold is below this band are recomputed
// in HighReal.
inline constexpr double kEscalationBand = 10 * kNumericMargin;

// Neumaier's variant of Kahan summation.
template <class Real>
class CompensatedSum {
 public:
  void add(Real term) {
    Real t = sum_ + term;
    if (abs_of(sum_) >= abs_of(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
  }
  Real value() const { return sum_ + compensation_; }

 private:
  static Real abs_of(Real v) { return v < 0 ? -v : v; }
  Real sum_{0};
  Real compensation_{0};
};

}  // namespace divbound
