#pragma once

// Bracketed scalar root finding used by the threshold and support solvers.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "chemo/errors.hpp"

namespace chemo {

struct RootBracket {
  double lo = 0;
  double hi = 0;
  std::string target;
  bool certified = false;  // sign(f(lo)) * sign(f(hi)) < 0 was observed
};

// Bisection down to adjacent doubles (or |hi-lo| <= abs_tol). f(lo) and f(hi) must
// differ in sign; a zero at either end is returned as is.
template <class F>
double bisect(F&& f, double lo, double hi, double abs_tol = 0.0) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo < 0) == (fhi < 0)) throw NoRootError("bisect: no sign change on bracket");
  for (int it = 0; it < 400; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || hi - lo <= abs_tol) break;
    double fm = f(mid);
    if (fm == 0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return std::abs(flo) <= std::abs(f(hi)) ? lo : hi;
}

// Scan [lo, hi] with n equal steps and return the first sub-interval with a sign
// change of f. Points where f is not finite are skipped.
template <class F>
std::optional<RootBracket> first_sign_change(F&& f, double lo, double hi, int n,
                                             std::string target = {}) {
  double h = (hi - lo) / n;
  double xp = lo;
  double fp = f(lo);
  for (int i = 1; i <= n; ++i) {
    double x = i == n ? hi : lo + i * h;
    double fx = f(x);
    if (!std::isfinite(fx)) continue;
    if (std::isfinite(fp) && ((fp < 0) != (fx < 0) || fx == 0))
      return RootBracket{xp, x, std::move(target), fp * fx < 0};
    xp = x;
    fp = fx;
  }
  return std::nullopt;
}

// One Newton step with a central-difference slope, kept only if it stays inside
// [lo, hi] and reduces |f|.
template <class F>
double newton_polish(F&& f, double x, double lo, double hi) {
  double fx = f(x);
  if (fx == 0 || !std::isfinite(fx)) return x;
  double h = std::max(std::abs(x), 1e-300) * 1e-7;
  if (x - h <= lo || x + h >= hi) return x;
  double slope = (f(x + h) - f(x - h)) / (2 * h);
  if (!std::isfinite(slope) || slope == 0) return x;
  double xn = x - fx / slope;
  if (!(xn > lo && xn < hi)) return x;
  double fn = f(xn);
  return std::abs(fn) < std::abs(fx) ? xn : x;
}

}  // namespace chemo
