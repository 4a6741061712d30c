#include "chemo/thresholds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "chemo/compound.hpp"
#include "chemo/errors.hpp"
#include "chemo/roots.hpp"
#include "chemo/specfun.hpp"
#include "chemo/supports.hpp"

namespace chemo {

double chi_k(double R, int k) {
  if (!(R > 0)) throw DomainError("chi_k: R must be positive");
  const double q = j1k(k) / R;
  return q * q + 1.0;
}

int oscillation_index(double omega, double R) {
  const double x = omega * R;
  int k = 0;
  while (j1k(k + 1) < x) ++k;
  return k;
}

double omega_ab(double a, double b) {
  if (!(a >= 0 && b > a)) throw DomainError("omega_ab: need 0 <= a < b");
  const double lo = j11() / b;
  if (a == 0.0) return lo;
  const double hi = j11() / (b - a);
  auto g = [&](double w) { return J1(w * a) * Y1(w * b) - J1(w * b) * Y1(w * a); };
  // g(lo) = J1(j11 a/b) Y1(j11) > 0; step off the left end to avoid reporting it.
  auto br = first_sign_change(g, lo * (1 + 1e-12), hi, 2000, "omega_ab");
  if (!br) throw NoRootError("omega_ab: no ratio match inside [j11/b, j11/(b-a)]");
  double w = bisect(g, br->lo, br->hi);
  return newton_polish(g, w, br->lo, br->hi);
}

double rlow0(double omega) { return j11() / omega; }

double rbar0(double omega, double R, int k0) {
  if (!(omega > 0 && R > 0)) throw DomainError("rbar0: need w > 0 and R > 0");
  if (k0 < 1) throw DomainError("rbar0: k0 must be >= 1");
  if (k0 == 1) return R;
  const int k = oscillation_index(omega, R);
  const int m = k - k0 + 2;
  if (m < 1)
    throw AdmissibilityError("rbar0: w R = " + std::to_string(omega * R) +
                             " is below j_{1," + std::to_string(k0) + "}; k0 = " +
                             std::to_string(k0) + " needs chi >= chi_" + std::to_string(k0));
  const double wR = omega * R;
  const double y1R = Y1(wR);
  const double j1R = J1(wR);
  const double top = j1k(m);
  if (j1R == 0.0) return top / omega;
  auto h = [&](double x) { return J1(x) * y1R - j1R * Y1(x); };
  const double bottom = m == 1 ? 1e-3 * top : j1k(m - 1);
  double x = bisect(h, bottom, top);
  x = newton_polish(h, x, bottom, top);
  return x / omega;
}

double chi2_star_function(double omega, double R) {
  const double rb = rbar0(omega, R, 2);
  const double r2 = solve_r2(omega, rb);
  const double rnu = R - rb + r2;
  return S0(rnu, omega, R) + 2.0 / (std::numbers::pi * omega * R);
}

double chi2_star(double R, const Chi2StarOptions& opt) {
  if (!(R > 0)) throw DomainError("chi2_star: R must be positive");
  const double w2 = j1k(2) / R;
  const double step = opt.step_fraction * w2;
  const double wmax = opt.window_factor * w2;
  double wp = w2 + step;
  double fp = chi2_star_function(wp, R);
  for (double w = wp + step; w <= wmax; w += step) {
    double fw = chi2_star_function(w, R);
    if ((fw < 0) != (fp < 0) || fw == 0) {
      auto f = [&](double x) { return chi2_star_function(x, R); };
      double ws = bisect(f, wp, w);
      return ws * ws + 1.0;
    }
    wp = w;
    fp = fw;
  }
  throw NoRootError("chi2_star: no sign change for w up to " + std::to_string(wmax));
}

double r_hat0_function(double x, double R) { return t_ratio(x, 0.0) + t_ratio(x, R); }

double r_hat0(double R) {
  if (!(R > 0)) throw DomainError("r_hat0: R must be positive");
  // Pole-free form: I0 T1 + I1 T0 (scaled by e^{-x} and a positive T factor).
  // Negative near 0, equal to T0(R;R) I1(R) > 0 at x = R.
  const double ka = K1s(R);
  const double ia = I1s(R);
  auto psi = [&](double x) {
    const double w = std::exp(2.0 * (x - R)) * ka;
    const double t0 = w * I0s(x) + ia * K0s(x);
    const double t1 = w * I1s(x) - ia * K1s(x);
    return I0s(x) * t1 + I1s(x) * t0;
  };
  double lo = 1e-6 * R;
  double hi = R;
  double x = bisect(psi, lo, hi);
  return newton_polish(psi, x, lo, hi);
}

ThresholdSet threshold_set(const ModelParams& p, int kmax, bool with_chi2_star) {
  ThresholdSet t;
  for (int k = 1; k <= kmax; ++k) t.chi_k.push_back(chi_k(p.R, k));
  const double w = p.omega();
  const int k = p.chi > 1 ? oscillation_index(w, p.R) : 0;
  if (k >= 2) {
    t.rbar0 = rbar0(w, p.R, 2);
    for (int k0 = 2; k0 <= k; ++k0) t.rbar0_k[k0] = rbar0(w, p.R, k0);
  }
  if (with_chi2_star) t.chi2_star = chi2_star(p.R);
  return t;
}

}  // namespace chemo
