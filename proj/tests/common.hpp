#pragma once

#include <cmath>
#include <numbers>

#include "chemo/params.hpp"

namespace testing {

inline constexpr double pi = std::numbers::pi;
inline constexpr double kM = 25 * pi;

inline chemo::ModelParams disk(double chi, double R = 5, double M = kM) {
  chemo::ModelParams p;
  p.chi = chi;
  p.R = R;
  p.M = M;
  return p;
}

inline chemo::ModelParams plane(double chi, double M) {
  return disk(chi, chemo::ModelParams::unbounded(), M);
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace testing
