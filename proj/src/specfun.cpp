#include "chemo/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <limits>
#include <string>

#include <boost/math/special_functions/bessel.hpp>

#include "chemo/errors.hpp"

namespace chemo {

namespace {

using boost::math::cyl_bessel_i;
using boost::math::cyl_bessel_j;
using boost::math::cyl_bessel_k;
using boost::math::cyl_neumann;

constexpr double kScaledSwitch = 600.0;

// Large-argument expansion of e^{-x} I_n(x) (sign = -1) or e^{x} K_n(x) sqrt(2x/pi)
// (sign = +1): sum_k (sign)^k a_k(n) / x^k with a_k = prod (4n^2-(2j-1)^2) / (k! 8^k).
double hankel_sum(int n, double x, double sign) {
  const double mu = 4.0 * n * n;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (mu - odd * odd) / (k * 8.0 * x) * sign;
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

void require_order(int order) {
  if (order < 0 || order > 2)
    throw DomainError("bessel: order " + std::to_string(order) + " not supported");
}

}  // namespace

double bessel(BesselKind kind, int order, double x) {
  require_order(order);
  if (std::isnan(x)) return x;
  switch (kind) {
    case BesselKind::J:
      if (x < 0) throw DomainError("bessel J: negative argument");
      return cyl_bessel_j(order, x);
    case BesselKind::Y:
      if (x <= 0) throw DomainError("bessel Y: argument must be positive");
      return cyl_neumann(order, x);
    case BesselKind::I:
      if (x < 0) throw DomainError("bessel I: negative argument");
      return cyl_bessel_i(order, x);  // boost raises std::overflow_error past the range
    case BesselKind::K:
      if (x <= 0) throw DomainError("bessel K: argument must be positive");
      return cyl_bessel_k(order, x);
  }
  throw DomainError("bessel: unknown kind");
}

double bessel_scaled(BesselKind kind, int order, double x) {
  require_order(order);
  switch (kind) {
    case BesselKind::J:
    case BesselKind::Y:
      return bessel(kind, order, x);
    case BesselKind::I:
      if (x < 0) throw DomainError("bessel I: negative argument");
      if (x < kScaledSwitch) return std::exp(-x) * cyl_bessel_i(order, x);
      return hankel_sum(order, x, -1.0) / std::sqrt(2.0 * std::numbers::pi * x);
    case BesselKind::K:
      if (x <= 0) throw DomainError("bessel K: argument must be positive");
      if (x < kScaledSwitch) return std::exp(x) * cyl_bessel_k(order, x);
      return hankel_sum(order, x, 1.0) * std::sqrt(std::numbers::pi / (2.0 * x));
  }
  throw DomainError("bessel: unknown kind");
}

double J0(double x) { return bessel(BesselKind::J, 0, x); }
double J1(double x) { return bessel(BesselKind::J, 1, x); }
double J2(double x) { return bessel(BesselKind::J, 2, x); }
double Y0(double x) { return bessel(BesselKind::Y, 0, x); }
double Y1(double x) { return bessel(BesselKind::Y, 1, x); }
double I0(double x) { return bessel(BesselKind::I, 0, x); }
double I1(double x) { return bessel(BesselKind::I, 1, x); }
double I2(double x) { return bessel(BesselKind::I, 2, x); }
double K0(double x) { return bessel(BesselKind::K, 0, x); }
double K1(double x) { return bessel(BesselKind::K, 1, x); }
double I0s(double x) { return bessel_scaled(BesselKind::I, 0, x); }
double I1s(double x) { return bessel_scaled(BesselKind::I, 1, x); }
double K0s(double x) { return bessel_scaled(BesselKind::K, 0, x); }
double K1s(double x) { return bessel_scaled(BesselKind::K, 1, x); }

namespace {

struct RootFunction {
  RootKind kind;
  double value(double x) const {
    switch (kind) {
      case RootKind::J0: return J0(x);
      case RootKind::J1: return J1(x);
      case RootKind::Y1: return Y1(x);
    }
    return 0;
  }
  double slope(double x) const {
    switch (kind) {
      case RootKind::J0: return -J1(x);
      case RootKind::J1: return J0(x) - J1(x) / x;
      case RootKind::Y1: return Y0(x) - Y1(x) / x;
    }
    return 0;
  }
};

// McMahon's expansion: beta - (mu-1)/(8 beta) - 4(mu-1)(7mu-31)/(3 (8 beta)^3).
double mcmahon(RootKind kind, int n) {
  const double pi = std::numbers::pi;
  double nu = kind == RootKind::J0 ? 0.0 : 1.0;
  double shift = kind == RootKind::Y1 ? 0.75 : 0.25;
  double beta = (n + 0.5 * nu - shift) * pi;
  double mu = 4.0 * nu * nu;
  double b8 = 8.0 * beta;
  return beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8);
}

double compute_root(RootKind kind, int n) {
  RootFunction f{kind};
  const double guess = mcmahon(kind, n);
  double x = guess;
  bool ok = false;
  for (int it = 0; it < 30; ++it) {
    double step = f.value(x) / f.slope(x);
    x -= step;
    if (!std::isfinite(x) || std::abs(x - guess) > 1.0) break;
    if (std::abs(step) <= 1e-15 * x) {
      ok = true;
      break;
    }
  }
  if (ok) return x;

  // Bisection on a bracket around the asymptotic guess; consecutive zeros are
  // more than 2 apart, so [guess-1, guess+1] holds exactly one.
  double lo = std::max(guess - 1.0, 1e-3);
  double hi = guess + 1.0;
  double flo = f.value(lo);
  if (flo * f.value(hi) > 0)
    throw std::logic_error("nth_root: bracket lost sign change");
  while (hi - lo > 4 * std::numeric_limits<double>::epsilon() * hi) {
    double mid = 0.5 * (lo + hi);
    double fm = f.value(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

constexpr int kCached = 64;

struct RootCache {
  std::array<std::array<double, kCached>, 3> table{};
  RootCache() {
    for (int k = 0; k < 3; ++k)
      for (int n = 1; n <= kCached; ++n)
        table[k][n - 1] = compute_root(static_cast<RootKind>(k), n);
  }
};

const RootCache& cache() {
  static const RootCache c;
  return c;
}

}  // namespace

double nth_root(RootKind kind, int n) {
  if (n < 1) throw DomainError("nth_root: index must be >= 1");
  if (n <= kCached) return cache().table[static_cast<int>(kind)][n - 1];
  return compute_root(kind, n);
}

BesselRootTable root_table(RootKind kind, int count) {
  BesselRootTable t{kind, {}};
  t.roots.reserve(count);
  for (int n = 1; n <= count; ++n) t.roots.push_back(nth_root(kind, n));
  return t;
}

double j01() { return nth_root(RootKind::J0, 1); }
double j11() { return nth_root(RootKind::J1, 1); }
double j1k(int k) { return nth_root(RootKind::J1, k); }

}  // namespace chemo
