#include "chemo/assembler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "chemo/compound.hpp"
#include "chemo/errors.hpp"
#include "chemo/specfun.hpp"
#include "chemo/supports.hpp"
#include "chemo/thresholds.hpp"

namespace chemo {

namespace {

constexpr double pi = std::numbers::pi;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

void require_disk(const ModelParams& p) {
  if (!(p.R > 0) || p.whole_space()) throw AdmissibilityError("disk family needs a finite R > 0");
  if (!(p.M > 0)) throw AdmissibilityError("mass M must be positive");
}

void require_nonconstant_regime(const ModelParams& p, const char* family) {
  require_disk(p);
  const double c1 = chi_k(p.R, 1);
  if (!(p.chi > c1))
    throw AdmissibilityError(std::string(family) + ": chi = " + num(p.chi) +
                             " <= chi_1 = " + num(c1) +
                             "; only the constant state exists (radial class)");
}

void require_second_mode(const ModelParams& p, const char* family) {
  require_disk(p);
  const double c2 = chi_k(p.R, 2);
  if (!(p.chi > c2))
    throw AdmissibilityError(std::string(family) + ": chi = " + num(p.chi) + " <= chi_2 = " +
                             num(c2) + "; needs chi > chi_2");
}

void push(PiecewiseRadialSolution& s, double lo, double hi, Form f, std::vector<Coefficient> c) {
  if (hi > lo) s.segments.push_back(Segment{lo, hi, f, std::move(c)});
}

// Smallest u sampled on support segments; used to reject assemblies that turn negative.
// min u over sampled support segments, and max u.
std::pair<double, double> density_extremes(const PiecewiseRadialSolution& s) {
  double umax = 0, umin = 0;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const Segment& seg = s.segments[i];
    if (!seg.supports_density()) continue;
    const int n = 2000;
    for (int j = 0; j <= n; ++j) {
      const double r = seg.lo + (seg.hi - seg.lo) * j / n;
      if (r <= 0 && seg.form == Form::SCap) continue;
      const double u = s.eval_segment(i, r).u;
      umax = std::max(umax, u);
      umin = std::min(umin, u);
    }
  }
  return {umin, umax};
}

bool nonnegative(const PiecewiseRadialSolution& s) {
  auto [umin, umax] = density_extremes(s);
  return umin >= -1e-9 * umax;
}

void require_nonnegative(const PiecewiseRadialSolution& s, const char* family) {
  auto [umin, umax] = density_extremes(s);
  if (umin < -1e-9 * umax)
    throw PositivityError(std::string(family) + ": assembled density is negative (min u = " +
                          num(umin) + ", max u = " + num(umax) + ")");
}

}  // namespace

PiecewiseRadialSolution constant(const ModelParams& p) {
  require_disk(p);
  const double ubar = p.M / (pi * p.R * p.R);
  PiecewiseRadialSolution s;
  s.tag.family = Family::Constant;
  s.params = p;
  push(s, 0, p.R, Form::Flat, {{"ubar", ubar}, {"vbar", ubar}});
  s.components = {{0, p.R, ubar - p.chi * ubar, p.M}};
  return s;
}

std::pair<double, double> bifurcation_epsilon_range(const ModelParams& p, int k) {
  const double ck = chi_k(p.R, k);
  const double ubar = p.M / (pi * p.R * p.R);
  return {-ubar / ck, ubar / (-J0(j11()) * ck)};
}

PiecewiseRadialSolution bifurcation_family(const ModelParams& p, int k, double epsilon) {
  require_disk(p);
  if (k < 1) throw AdmissibilityError("bifurcation family: k must be >= 1");
  const double ck = chi_k(p.R, k);
  if (std::abs(p.chi - ck) > 1e-9 * ck)
    throw AdmissibilityError("bifurcation family: chi = " + num(p.chi) + " differs from chi_" +
                             std::to_string(k) + " = " + num(ck));
  auto [lo, hi] = bifurcation_epsilon_range(p, k);
  const double slack = 1e-12 * (hi - lo);
  if (epsilon < lo - slack || epsilon > hi + slack)
    throw PositivityError("bifurcation family: epsilon = " + num(epsilon) + " outside [" +
                          num(lo) + ", " + num(hi) + "]; density would turn negative");
  PiecewiseRadialSolution s;
  s.tag = {Family::BifurcationDisk, k, 0, epsilon};
  s.params = p;
  s.params.chi = ck;
  const double ubar = p.M / (pi * p.R * p.R);
  push(s, 0, p.R, Form::BesselMode,
       {{"ubar", ubar}, {"vbar", ubar}, {"epsilon", epsilon}, {"kappa", j1k(k) / p.R}});
  s.components = {{0, p.R, ubar - ck * ubar, p.M}};
  return s;
}

PiecewiseRadialSolution inner_ring(const ModelParams& p) {
  require_disk(p);
  const double c1 = chi_k(p.R, 1);
  if (p.chi < c1 * (1 - 1e-12))
    throw AdmissibilityError("inner ring: chi = " + num(p.chi) + " <= chi_1 = " + num(c1) +
                             "; only the constant state exists (radial class)");
  const double w = p.omega(), chi = p.chi, M = p.M, R = p.R;
  const double r1 = solve_r1(w, R);
  const double x = w * r1;
  const double A1 = M / (pi * r1 * r1 * J2(x));
  const double B1 = -M * w * w * J0(x) / (chi * pi * r1 * r1 * J2(x) * T0(r1, R));
  PiecewiseRadialSolution s;
  s.tag.family = Family::InnerRing;
  s.params = p;
  push(s, 0, r1, Form::JCap, {{"A1", A1}, {"r1", r1}});
  push(s, r1, R, Form::TGap, {{"B1", B1}, {"R", R}});
  s.components = {{0, r1, A1 * w * w * J0(x), M}};
  return s;
}

PiecewiseRadialSolution outer_ring(const ModelParams& p) {
  require_nonconstant_regime(p, "outer ring");
  const double w = p.omega(), chi = p.chi, M = p.M, R = p.R;
  const double r2 = solve_r2(w, R);
  const double c = R - r2;
  const double s0 = S0(r2, w, R), s1 = S1(r2, w, R);
  const double A2 = -M * w / (pi * (2 * c * s1 + w * r2 * (2 * R - r2) * s0));
  const double B2 = M * w * w / (pi * chi * (2 * c * I1(c) + r2 * (2 * R - r2) * I0(c)));
  PiecewiseRadialSolution s;
  s.tag.family = Family::OuterRing;
  s.params = p;
  push(s, 0, c, Form::IGap, {{"B2", B2}});
  push(s, c, R, Form::SCap, {{"A2", A2}, {"R", R}, {"r2", r2}});
  s.components = {{c, R, A2 * w * w * s0, M}};
  return s;
}

PiecewiseRadialSolution annulus_mode(const ModelParams& p, double a, double b,
                                     AnnulusDirection direction) {
  if (!(a >= 0 && b > a)) throw AdmissibilityError("annulus: need 0 <= a < b");
  if (!(p.M > 0)) throw AdmissibilityError("mass M must be positive");
  if (a == 0.0) {
    ModelParams q = p;
    q.R = b;
    PiecewiseRadialSolution s =
        direction == AnnulusDirection::Decreasing ? inner_ring(q) : outer_ring(q);
    s.tag.family = direction == AnnulusDirection::Decreasing ? Family::AnnulusDecreasing
                                                             : Family::AnnulusIncreasing;
    s.tag.a = a;
    s.tag.b = b;
    return s;
  }
  if (!(p.chi > 1)) throw AdmissibilityError("annulus: chi must exceed 1");
  const double w = p.omega(), chi = p.chi, M = p.M;
  PiecewiseRadialSolution s;
  s.params = p;
  s.params.R = b;
  s.tag.a = a;
  s.tag.b = b;
  try {
    if (direction == AnnulusDirection::Decreasing) {
      const double r3 = solve_r3(w, a, b);
      const double e = a + r3;
      const double s0 = S0(-r3, w, a), s1 = S1(-r3, w, a);
      const double A3 = M * w / (pi * (2 * e * s1 - w * r3 * (2 * a + r3) * s0));
      const double B3 = -M * w * w / (pi * chi * (2 * e * T1(e, b) - r3 * (2 * a + r3) * T0(e, b)));
      s.tag.family = Family::AnnulusDecreasing;
      push(s, a, e, Form::SCap, {{"A3", A3}, {"a", a}, {"r3", -r3}});
      push(s, e, b, Form::TGap, {{"B3", B3}, {"b", b}});
      s.components = {{a, e, A3 * w * w * s0, M}};
    } else {
      const double r4 = solve_r4(w, a, b);
      const double c = b - r4;
      const double s0 = S0(r4, w, b), s1 = S1(r4, w, b);
      const double A4 = -M * w / (pi * (2 * c * s1 + w * r4 * (2 * b - r4) * s0));
      const double B4 = M * w * w / (pi * chi * (2 * c * T1(c, a) + r4 * (2 * b - r4) * T0(c, a)));
      s.tag.family = Family::AnnulusIncreasing;
      push(s, a, c, Form::TGap, {{"B4", B4}, {"a", a}});
      push(s, c, b, Form::SCap, {{"A4", A4}, {"b", b}, {"r4", r4}});
      s.components = {{c, b, A4 * w * w * s0, M}};
    }
  } catch (const NoRootError& e) {
    throw AdmissibilityError("annulus (" + num(a) + ", " + num(b) + "): chi = " + num(chi) +
                             " is below chi_ab = " + num(std::pow(omega_ab(a, b), 2) + 1) +
                             " (" + e.what() + ")");
  }
  return s;
}

std::pair<double, double> annulus_bifurcation_epsilon_range(const ModelParams& p, double a,
                                                            double b) {
  const double wab = omega_ab(a, b);
  const double cab = wab * wab + 1;
  const double ubar = p.M / (pi * (b * b - a * a));
  const double top = -ubar / cab;
  return {top / anchored_cylinder(0, a, wab, b), top / anchored_cylinder(0, b, wab, b)};
}

PiecewiseRadialSolution annulus_bifurcation(const ModelParams& p, double a, double b,
                                            double epsilon) {
  if (!(a > 0 && b > a)) throw AdmissibilityError("annulus bifurcation: need 0 < a < b");
  const double wab = omega_ab(a, b);
  const double cab = wab * wab + 1;
  if (std::abs(p.chi - cab) > 1e-9 * cab)
    throw AdmissibilityError("annulus bifurcation: chi = " + num(p.chi) + " differs from chi_ab = " +
                             num(cab));
  auto [lo, hi] = annulus_bifurcation_epsilon_range(p, a, b);
  const double slack = 1e-12 * (hi - lo);
  if (epsilon < lo - slack || epsilon > hi + slack)
    throw PositivityError("annulus bifurcation: epsilon = " + num(epsilon) + " outside [" +
                          num(lo) + ", " + num(hi) + "]");
  PiecewiseRadialSolution s;
  s.tag = {Family::AnnulusBifurcation, 0, 0, epsilon, 0, a, b};
  s.params = p;
  s.params.chi = cab;
  s.params.R = b;
  const double ubar = p.M / (pi * (b * b - a * a));
  push(s, a, b, Form::CylinderMode, {{"ubar", ubar}, {"vbar", ubar}, {"epsilon", epsilon}, {"b", b}});
  s.components = {{a, b, ubar - cab * ubar, p.M}};
  return s;
}

std::pair<double, double> hat_center_range(const ModelParams& p, int k0) {
  const double w = p.omega();
  return {rlow0(w), rbar0(w, p.R, k0)};
}

namespace {

// Central cap on [0, r1), gap with v = B T0(r; R0), outer cap anchored at A reaching R.
PiecewiseRadialSolution assemble_hat(const ModelParams& p, double R0, double A) {
  const double w = p.omega(), chi = p.chi, M = p.M, R = p.R;
  const double r1 = solve_r1(w, R0);
  const double r4 = solve_r4(w, R0, A);
  const double c = A - r4;
  const double x = w * r1;
  const double t0c = T0(c, R0), t1c = T1(c, R0);
  const double C1 = -w * w * J0(x) / (pi * chi * r1 * r1 * J2(x) * T0(r1, R0));
  const double C2 = w * w / (pi * chi * (2 * c * t1c + (R * R - c * c) * t0c));
  const double B = C1 * C2 * M / (C1 + C2);
  const double s0 = S0(r4, w, A);
  const double A1 = chi * B * T0(r1, R0) / ((1 - chi) * J0(x));
  const double A4 = chi * B * t0c / ((1 - chi) * s0);
  PiecewiseRadialSolution s;
  s.params = p;
  push(s, 0, r1, Form::JCap, {{"A1", A1}, {"r1", r1}});
  push(s, r1, c, Form::TGap, {{"B", B}, {"R0", R0}});
  push(s, c, R, Form::SCap, {{"A4", A4}, {"anchor", A}, {"r4", r4}});
  s.components = {{0, r1, A1 * w * w * J0(x), C2 * M / (C1 + C2)},
                  {c, R, A4 * w * w * s0, C1 * M / (C1 + C2)}};
  return s;
}

// Gap with v = B I0(r) on [0, c), cap anchored at A reaching R.
PiecewiseRadialSolution assemble_attached(const ModelParams& p, double A) {
  const double w = p.omega(), chi = p.chi, M = p.M, R = p.R;
  const double r2 = solve_r2(w, A);
  const double c = A - r2;
  const double s0 = S0(r2, w, A), s1 = S1(r2, w, A);
  const double A2 = -M * w / (pi * (2 * c * s1 + w * (R * R - c * c) * s0));
  const double B2 = M * w * w / (pi * chi * (2 * c * I1(c) + (R * R - c * c) * I0(c)));
  PiecewiseRadialSolution s;
  s.params = p;
  push(s, 0, c, Form::IGap, {{"B2", B2}});
  push(s, c, R, Form::SCap, {{"A2", A2}, {"anchor", A}, {"r2", r2}});
  s.components = {{c, R, A2 * w * w * s0, M}};
  return s;
}

void require_center(const ModelParams& p, double R0, int k0, const char* family) {
  auto [lo, hi] = hat_center_range(p, k0);
  const double tol = 1e-12 * p.R;
  if (R0 < lo - tol || R0 > hi + tol)
    throw AdmissibilityError(std::string(family) + ": R0 = " + num(R0) + " outside [R0_lower, " +
                             "R0_upper] = [" + num(lo) + ", " + num(hi) + "]");
}

// Largest squared mismatch of v, v' across interior knots relative to the solution scale.
double knot_mismatch(const PiecewiseRadialSolution& s) {
  double worst = 0;
  for (std::size_t i = 0; i + 1 < s.segments.size(); ++i) {
    const double r = s.segments[i].hi;
    PointValue L = s.eval_segment(i, r), Rv = s.eval_segment(i + 1, r);
    const double scale = std::max({1.0, std::abs(L.v), std::abs(L.dv)});
    worst = std::max({worst, std::abs(L.v - Rv.v) / scale, std::abs(L.dv - Rv.dv) / scale});
  }
  return worst;
}

}  // namespace

PiecewiseRadialSolution mexican_hat(const ModelParams& p, double R0) {
  require_second_mode(p, "mexican hat");
  require_center(p, R0, 2, "mexican hat");
  auto [lo, hi] = hat_center_range(p, 2);
  R0 = std::clamp(R0, lo, hi);
  PiecewiseRadialSolution s = assemble_hat(p, R0, p.R);
  s.tag.family = Family::MexicanHat;
  s.tag.R0 = R0;
  return s;
}

PiecewiseRadialSolution volcano_attached(const ModelParams& p) {
  require_second_mode(p, "volcano");
  PiecewiseRadialSolution s = assemble_attached(p, rbar0(p.omega(), p.R, 2));
  s.tag.family = Family::VolcanoAttached;
  s.tag.k0 = 2;
  require_nonnegative(s, "volcano (attached)");
  return s;
}

PiecewiseRadialSolution volcano_detached(const ModelParams& p) {
  require_second_mode(p, "volcano");
  const double w = p.omega(), chi = p.chi, M = p.M, R = p.R;
  const VolcanoCenter vc = solve_volcano_center(w, R);
  const double R0 = vc.R0_star, r2 = vc.r2_star, r3 = vc.r3_star;
  const double s0l = S0(r2, w, R0), s1l = S1(r2, w, R0);
  const double s0r = S0(-r3, w, R0), s1r = S1(-r3, w, R0);
  const double C3 = -w / (pi * (2 * (R0 - r2) * s1l + w * r2 * (2 * R0 - r2) * s0l));
  const double C4 = w / (pi * (2 * (R0 + r3) * s1r - w * r3 * (2 * R0 + r3) * s0r));
  const double A = C3 * C4 * M / (C3 + C4);
  const double lo = R0 - r2, hi = R0 + r3;
  const double B2 = (1 - chi) * A * s0l / (chi * I0(lo));
  const double B3 = (1 - chi) * A * s0l / (chi * T0(hi, R));
  PiecewiseRadialSolution s;
  s.tag.family = Family::VolcanoDetached;
  s.tag.R0 = R0;
  s.params = p;
  push(s, 0, lo, Form::IGap, {{"B2*", B2}});
  push(s, lo, hi, Form::SCap, {{"A*", A}, {"R0*", R0}, {"r2*", r2}});
  push(s, hi, R, Form::TGap, {{"B3*", B3}, {"R", R}});
  s.components = {{lo, hi, A * w * w * s0l, M}};
  return s;
}

PiecewiseRadialSolution volcano(const ModelParams& p, std::optional<double> chi2s) {
  require_second_mode(p, "volcano");
  const double cs = chi2s ? *chi2s : chi2_star(p.R);
  const double band = 1e-9 * cs;
  if (p.chi < cs - band) return volcano_attached(p);
  if (p.chi > cs + band) return volcano_detached(p);
  std::optional<PiecewiseRadialSolution> att, det;
  try {
    att = volcano_attached(p);
  } catch (const Error&) {
  }
  try {
    det = volcano_detached(p);
  } catch (const Error&) {
  }
  if (att && det) return knot_mismatch(*att) <= knot_mismatch(*det) ? *att : *det;
  if (att) return *att;
  if (det) return *det;
  throw AdmissibilityError("volcano: neither regime assembles at chi = " + num(p.chi));
}

std::pair<double, double> airy_hat_center_range(const ModelParams& p, int k0) {
  require_disk(p);
  const double w = p.omega();
  const int k = oscillation_index(w, p.R);
  if (k0 < 2 || k0 > k)
    throw AdmissibilityError("airy pattern: k0 = " + std::to_string(k0) + " outside [2, " +
                             std::to_string(k) + "] for chi = " + num(p.chi));
  auto [lo, hi] = hat_center_range(p, k0);
  const double anchor = rbar0(w, p.R, k0 - 1);
  auto ok = [&](double c) {
    try {
      return nonnegative(assemble_hat(p, c, anchor));
    } catch (const Error&) {
      return false;
    }
  };
  // Nonnegativity holds at the upper end and is lost once below a single threshold centre.
  if (!ok(hi))
    throw PositivityError("airy hat: no center in [R0_lower, R0_upper] gives a nonnegative density at chi = " +
                          num(p.chi));
  if (ok(lo)) return {lo, hi};
  double bad = lo, good = hi;
  while (good - bad > 1e-12 * p.R) {
    const double mid = 0.5 * (bad + good);
    (ok(mid) ? good : bad) = mid;
  }
  return {good, hi};
}

PiecewiseRadialSolution airy(const ModelParams& p, int k0, AiryVariant variant,
                             std::optional<double> R0) {
  require_disk(p);
  if (!(p.chi > 1)) throw AdmissibilityError("airy pattern: chi must exceed 1");
  const double w = p.omega();
  const int k = oscillation_index(w, p.R);
  if (k0 < 2 || k0 > k)
    throw AdmissibilityError("airy pattern: k0 = " + std::to_string(k0) + " outside [2, " +
                             std::to_string(k) + "] for chi = " + num(p.chi) +
                             " (needs chi > chi_k0)");
  PiecewiseRadialSolution s;
  if (variant == AiryVariant::Hat) {
    auto [lo, hi] = hat_center_range(p, k0);
    double c;
    if (R0) {
      c = *R0;
      require_center(p, c, k0, "airy hat");
      c = std::clamp(c, lo, hi);
    } else {
      auto [plo, phi] = airy_hat_center_range(p, k0);
      c = 0.5 * (plo + phi);
    }
    s = assemble_hat(p, c, rbar0(w, p.R, k0 - 1));
    s.tag.family = Family::AiryHat;
    s.tag.R0 = c;
    s.tag.k0 = k0;
    require_nonnegative(s, "airy hat");
  } else {
    s = assemble_attached(p, rbar0(w, p.R, k0));
    s.tag.family = Family::AiryVolcano;
    s.tag.k0 = k0;
    require_nonnegative(s, "airy volcano");
  }
  return s;
}

PiecewiseRadialSolution whole_space(const ModelParams& p) {
  if (!(p.chi > 1))
    throw AdmissibilityError("whole plane: chi = " + num(p.chi) +
                             " <= 1; no nonnegative steady state exists");
  if (!(p.M > 0)) throw AdmissibilityError("mass M must be positive");
  const double w = p.omega(), chi = p.chi, M = p.M;
  const double rs = solve_rstar_wholespace(w);
  const double x = w * rs;
  const double A = M / (pi * rs * rs * J2(x));
  const double B = -M * w * w * J0(x) / (pi * chi * rs * rs * J2(x) * K0(rs));
  PiecewiseRadialSolution s;
  s.tag.family = Family::WholeSpace;
  s.params = p;
  s.params.R = ModelParams::unbounded();
  push(s, 0, rs, Form::JCap, {{"A", A}, {"r*", rs}});
  push(s, rs, rs + kPlaneTail, Form::KGap, {{"B", B}});
  s.components = {{0, rs, A * w * w * J0(x), M}};
  return s;
}

PiecewiseRadialSolution log_potential(const ModelParams& p) {
  if (!(p.chi > 0)) throw AdmissibilityError("log potential: chi must be positive");
  if (!(p.M > 0)) throw AdmissibilityError("mass M must be positive");
  const double q = std::sqrt(p.chi);
  const double rs = j01() / q;
  const double A = p.M * p.chi / (2 * pi * j01() * J1(j01()));
  PiecewiseRadialSolution s;
  s.tag.family = Family::LogPotential;
  s.params = p;
  s.params.R = ModelParams::unbounded();
  push(s, 0, rs, Form::LogCap, {{"A", A}});
  push(s, rs, rs + kPlaneTail, Form::LogGap, {{"M/2pi", p.M / (2 * pi)}, {"r*", rs}});
  s.components = {{0, rs, 0.0, p.M}};
  return s;
}

}  // namespace chemo
