#pragma once

#include <cmath>
#include <limits>

namespace chemo {

// (chi, R, M); R = +inf selects the whole-plane problem.
struct ModelParams {
  double chi = 2.0;
  double R = 5.0;
  double M = 25.0 * 3.14159265358979323846;

  double omega() const { return std::sqrt(chi - 1.0); }
  bool whole_space() const { return std::isinf(R); }

  static double unbounded() { return std::numeric_limits<double>::infinity(); }
};

}  // namespace chemo
