#include "chemo/supports.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chemo/compound.hpp"
#include "chemo/errors.hpp"
#include "chemo/specfun.hpp"
#include "chemo/thresholds.hpp"

namespace chemo {

namespace {

constexpr double kDegenerate = 1e-12;

// (T0(x;a), T1(x;a)) divided by a common positive factor; a = 0 gives (I0, I1) scaled.
struct TPair {
  double t0, t1;
};

TPair t_pair(double x, double a) {
  if (a == 0.0) return {I0s(x), I1s(x)};
  const double w = std::exp(2.0 * (x - a)) * K1s(a);
  const double ia = I1s(a);
  return {w * I0s(x) + ia * K0s(x), w * I1s(x) - ia * K1s(x)};
}

int scan_steps(double omega, double length) {
  return std::clamp(static_cast<int>(std::ceil(omega * length / 0.05)), 64, 10000);
}

struct Cylinder {
  double y1a, j1a, omega;
  double z0(double x) const { return y1a * J0(omega * x) - j1a * Y0(omega * x); }
  double z1(double x) const { return y1a * J1(omega * x) - j1a * Y1(omega * x); }
};

Cylinder anchored(double omega, double anchor) {
  return {Y1(omega * anchor), J1(omega * anchor), omega};
}

// First zeros of h0 and then h1 on (0, hi]. The second may sit at hi itself when the
// annulus is exactly critical; that case is recognised by |h1(hi)| being negligible.
template <class H0, class H1>
RootBracket s_bracket(H0&& h0, H1&& h1, double hi, int n, const std::string& what) {
  auto b0 = first_sign_change(h0, hi / n * 1e-3, hi, n, what);
  if (!b0)
    throw NoRootError(what + ": first compound zero s0 not found; chi below the annulus threshold");
  const double s0 = bisect(h0, b0->lo, b0->hi);
  double peak = 0;
  const int m = std::max(16, static_cast<int>(n * (hi - s0) / hi));
  for (int i = 1; i <= m; ++i) peak = std::max(peak, std::abs(h1(s0 + (hi - s0) * i / m)));
  auto b1 = first_sign_change(h1, s0, hi, m, what);
  double s1;
  if (b1) {
    s1 = bisect(h1, b1->lo, b1->hi);
  } else if (std::abs(h1(hi)) <= 1e-9 * peak) {
    s1 = hi;
  } else {
    throw NoRootError(what + ": no root in (0, b-a); chi is below the annulus threshold");
  }
  return RootBracket{s0, s1, what, true};
}

template <class G>
double root_in(G&& g, const RootBracket& br) {
  double glo = g(br.lo);
  double ghi = g(br.hi);
  if (ghi == 0 || (glo < 0) == (ghi < 0)) {
    // Critical annulus: the cross form vanishes only at the right end.
    return br.hi;
  }
  double x = bisect(g, br.lo, br.hi);
  return newton_polish(g, x, br.lo, br.hi);
}

}  // namespace

double f_r1(double r, double omega, double R) {
  return omega * J0(omega * r) / J1(omega * r) - t_ratio(r, R);
}

double f_r2(double r, double omega, double R) { return f_r4(r, omega, 0.0, R); }

double f_r3(double r, double omega, double a, double b) {
  if (a == 0.0) return f_r1(r, omega, b);
  return omega * S0(-r, omega, a) / S1(-r, omega, a) - t_ratio(a + r, b);
}

double f_r4(double r, double omega, double a, double b) {
  return omega * S0(r, omega, b) / S1(r, omega, b) - t_ratio(b - r, a);
}

double f_rstar(double r, double omega) {
  return omega * J0(omega * r) / J1(omega * r) + K0s(r) / K1s(r);
}

RootBracket bracket_r1(double omega, double R) {
  const double wR = omega * R;
  if (wR < j11() * (1 - kDegenerate))
    throw AdmissibilityError("inner cap: w R = " + std::to_string(wR) +
                             " <= j11; only the constant state exists (chi <= chi_1)");
  return RootBracket{j01() / omega, std::min(j11() / omega, R), "r1", true};
}

double solve_r1(double omega, double R) {
  if (omega * R <= j11() * (1 + kDegenerate)) {
    bracket_r1(omega, R);  // throws below the threshold
    return R;
  }
  auto br = bracket_r1(omega, R);
  auto g = [&](double r) {
    const TPair t = t_pair(r, R);
    return omega * J0(omega * r) * t.t1 - t.t0 * J1(omega * r);
  };
  return root_in(g, br);
}

double solve_r2(double omega, double R) { return solve_r4(omega, 0.0, R); }

RootBracket bracket_r4(double omega, double a, double b) {
  if (!(a >= 0 && b > a)) throw DomainError("r4: need 0 <= a < b");
  if (a == 0.0 && omega * b < j11() * (1 - kDegenerate))
    throw AdmissibilityError("boundary cap: w R = " + std::to_string(omega * b) +
                             " <= j11; only the constant state exists (chi <= chi_1)");
  const Cylinder z = anchored(omega, b);
  const double hi = a == 0.0 ? b * (1 - 1e-10) : b - a;
  auto h0 = [&](double r) { return z.z0(b - r); };
  auto h1 = [&](double r) { return z.z1(b - r); };
  return s_bracket(h0, h1, hi, scan_steps(omega, b - a), "r4");
}

double solve_r4(double omega, double a, double b) {
  if (a == 0.0 && omega * b <= j11() * (1 + kDegenerate)) {
    bracket_r4(omega, a, b);  // throws below the threshold
    return b;
  }
  const RootBracket br = bracket_r4(omega, a, b);
  const Cylinder z = anchored(omega, b);
  auto g = [&](double r) {
    const TPair t = t_pair(b - r, a);
    return omega * z.z0(b - r) * t.t1 - t.t0 * z.z1(b - r);
  };
  return root_in(g, br);
}

RootBracket bracket_r3(double omega, double a, double b) {
  if (!(a >= 0 && b > a)) throw DomainError("r3: need 0 <= a < b");
  if (a == 0.0) return bracket_r1(omega, b);
  const Cylinder z = anchored(omega, a);
  auto h0 = [&](double r) { return z.z0(a + r); };
  auto h1 = [&](double r) { return z.z1(a + r); };
  return s_bracket(h0, h1, b - a, scan_steps(omega, b - a), "r3");
}

double solve_r3(double omega, double a, double b) {
  if (a == 0.0) return solve_r1(omega, b);
  const RootBracket br = bracket_r3(omega, a, b);
  const Cylinder z = anchored(omega, a);
  auto g = [&](double r) {
    const TPair t = t_pair(a + r, b);
    return omega * z.z0(a + r) * t.t1 - t.t0 * z.z1(a + r);
  };
  return root_in(g, br);
}

double solve_rstar_wholespace(double omega) {
  if (!(omega > 0))
    throw AdmissibilityError("whole plane: no compactly supported state for chi <= 1");
  auto g = [&](double r) { return omega * J0(omega * r) * K1s(r) + K0s(r) * J1(omega * r); };
  const double lo = j01() / omega;
  const double hi = j11() / omega;
  double r = bisect(g, lo, hi);
  return newton_polish(g, r, lo, hi);
}

double volcano_center_function(double R0, double omega, double R) {
  const double r2 = solve_r2(omega, R0);
  const double r3 = solve_r3(omega, R0, R);
  return S0(r2, omega, R0) - S0(-r3, omega, R0);
}

VolcanoCenter solve_volcano_center(double omega, double R) {
  const double lo0 = rlow0(omega);
  const double hi0 = rbar0(omega, R, 2);
  const double shrink = 1e-9 * (hi0 - lo0);
  const double lo = lo0 + shrink;
  const double hi = hi0 - shrink;
  auto G = [&](double x) { return volcano_center_function(x, omega, R); };
  const double glo = G(lo);
  const double ghi = G(hi);
  if (!(glo > 0 && ghi < 0))
    throw AdmissibilityError("volcano center: G does not change sign on (R0_lower, R0_upper); "
                             "the detached volcano needs chi > chi2*");
  double x = bisect(G, lo, hi, 1e-14 * R);
  return VolcanoCenter{x, solve_r2(omega, x), solve_r3(omega, x, R)};
}

}  // namespace chemo
