#include "chemo/energy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "chemo/assembler.hpp"
#include "chemo/compound.hpp"
#include "chemo/errors.hpp"
#include "chemo/roots.hpp"
#include "chemo/specfun.hpp"
#include "chemo/thresholds.hpp"

namespace chemo {

namespace {

constexpr double pi = std::numbers::pi;

double integrate(const std::function<double(double)>& f, double a, double b) {
  if (!(b > a)) return 0;
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 31>::integrate(f, a, b, 10, 1e-12);
}

// Energy of one cap with profile u = amp (Z0(w r) - Z0(w r_e)) carrying mass m:
// lambda = amp w^2 Z0_e and m = 2 pi amp D with D = [r Z1 / w - Z0_e r^2 / 2]_lo^hi.
double cap_energy(double m, double w, double chi, double z0e, double D) {
  return m * m * w * w * z0e / (chi * 2 * pi * D);
}

std::optional<double> closed_form(const PiecewiseRadialSolution& s) {
  const double chi = s.params.chi, w = s.params.omega(), M = s.params.M;
  switch (s.tag.family) {
    case Family::Constant:
    case Family::BifurcationDisk:
    case Family::AnnulusBifurcation:
      return constant_energy(chi, M, s.domain_lo(), s.domain_hi());
    case Family::LogPotential:
      return std::nullopt;
    default:
      break;
  }
  double e = 0;
  std::size_t comp = 0;
  for (const auto& seg : s.segments) {
    if (!seg.supports_density()) continue;
    if (comp >= s.components.size()) return std::nullopt;
    const double m = s.components[comp++].mass;
    if (seg.form == Form::JCap) {
      const double r1 = seg.c(1), x = w * r1;
      const double j0e = J0(x);
      e += cap_energy(m, w, chi, j0e, r1 * J1(x) / w - j0e * r1 * r1 / 2);
    } else if (seg.form == Form::SCap) {
      const double A = seg.c(1), edge = A - seg.c(2);
      const double z0e = anchored_cylinder(0, edge, w, A);
      auto prim = [&](double r) { return r * anchored_cylinder(1, r, w, A) / w - z0e * r * r / 2; };
      e += cap_energy(m, w, chi, z0e, prim(seg.hi) - prim(seg.lo));
    } else {
      return std::nullopt;
    }
  }
  return e;
}

}  // namespace

double constant_energy(double chi, double M, double a, double b) {
  return -(chi - 1) * M * M / (chi * pi * (b * b - a * a));
}

EnergyReport energy(const PiecewiseRadialSolution& s) {
  if (s.tag.family == Family::LogPotential)
    throw InvalidInput("energy: undefined for the log-potential state (v is unbounded)");
  const double chi = s.params.chi;
  EnergyReport rep;

  // Steady-state check: u - chi v must equal the stored constant on every support segment.
  double umax = 0, worst = 0, lscale = 0;
  for (const auto& c : s.components) lscale = std::max(lscale, std::abs(c.lambda));
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const Segment& seg = s.segments[i];
    if (!seg.supports_density()) continue;
    const Component* comp = nullptr;
    for (const auto& c : s.components)
      if (seg.lo >= c.lo - 1e-12 && seg.hi <= c.hi + 1e-12) comp = &c;
    if (!comp) throw InvalidInput("energy: support segment outside every stored component");
    for (int j = 0; j <= 64; ++j) {
      const double r = std::max(seg.lo + (seg.hi - seg.lo) * j / 64, 1e-300);
      PointValue p = s.eval_segment(i, r);
      umax = std::max(umax, p.u);
      worst = std::max(worst, std::abs(p.u - chi * p.v - comp->lambda));
    }
  }
  if (worst > 1e-8 * std::max({1.0, umax, lscale}))
    throw InvalidInput("energy: u - chi v is not constant on a support component (deviation " +
                       std::to_string(worst) + ")");

  for (const auto& c : s.components) {
    rep.per_component.push_back(c.lambda * c.mass / chi);
    rep.total += rep.per_component.back();
  }
  rep.closed_form = closed_form(s);

  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const Segment& seg = s.segments[i];
    rep.quadrature += integrate(
        [&](double r) {
          if (r <= 0) return 0.0;
          PointValue p = s.eval_segment(i, r);
          return 2 * pi * r * (p.u * p.u / chi + p.dv * p.dv + p.v * p.v - 2 * p.u * p.v);
        },
        seg.lo, seg.hi);
  }
  rep.discrepancy = std::abs(rep.closed_form.value_or(rep.total) - rep.quadrature);
  return rep;
}

HierarchyReport hierarchy(const std::vector<PiecewiseRadialSolution>& states, double margin_rel) {
  HierarchyReport rep;
  if (states.empty()) return rep;
  const ModelParams& p0 = states.front().params;
  for (const auto& s : states) {
    if (s.params.chi != p0.chi || s.params.R != p0.R || s.params.M != p0.M)
      rep.violations.push_back("states do not share (chi, R, M)");
    std::string label(to_string(s.tag.family));
    rep.sorted.push_back({label, s.tag.family, energy(s).total});
  }
  std::stable_sort(rep.sorted.begin(), rep.sorted.end(),
                   [](const auto& a, const auto& b) { return a.energy < b.energy; });

  auto find = [&](Family f) -> const HierarchyEntry* {
    for (const auto& e : rep.sorted)
      if (e.family == f) return &e;
    return nullptr;
  };
  const double ec = p0.whole_space() ? 0 : constant_energy(p0.chi, p0.M, 0, p0.R);
  const double margin = margin_rel * std::abs(ec);
  auto below = [&](const HierarchyEntry* lo, const HierarchyEntry* hi) {
    if (lo && hi && !(lo->energy < hi->energy - margin))
      rep.violations.push_back(lo->label + " (" + std::to_string(lo->energy) + ") is not below " +
                               hi->label + " (" + std::to_string(hi->energy) + ")");
  };
  const HierarchyEntry* c = find(Family::Constant);
  below(find(Family::InnerRing), find(Family::OuterRing));
  below(find(Family::OuterRing), c);
  for (const auto& e : rep.sorted)
    if (e.family == Family::MexicanHat || e.family == Family::VolcanoAttached ||
        e.family == Family::VolcanoDetached || e.family == Family::AiryHat ||
        e.family == Family::AiryVolcano || e.family == Family::InnerRing)
      below(&e, c);
  return rep;
}

double partition_bound(const std::vector<double>& masses, const std::vector<double>& radii) {
  if (masses.empty() || masses.size() != radii.size())
    throw InvalidInput("partition: need one mass per radius");
  double F = 0, prev = 0;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (!(radii[i] > prev)) throw InvalidInput("partition: radii must be positive and increasing");
    if (!(masses[i] > 0)) throw InvalidInput("partition: masses must be positive");
    F += masses[i] * masses[i] / (radii[i] * radii[i] - prev * prev);
    prev = radii[i];
  }
  return F;
}

std::optional<double> outer_hat_crossing(double R, double M, double chi_lo, double chi_hi,
                                         int scan_points) {
  auto gap = [&](double chi) {
    ModelParams p{chi, R, M};
    const double R0 = hat_center_range(p, 2).second;
    return energy(outer_ring(p)).total - energy(mexican_hat(p, R0)).total;
  };
  auto br = first_sign_change(gap, chi_lo, chi_hi, scan_points, "outer/hat energy crossing");
  if (!br) return std::nullopt;
  double a = br->lo, b = br->hi, ga = gap(a);
  for (int i = 0; i < 80 && b - a > 1e-12 * b; ++i) {
    const double m = 0.5 * (a + b), gm = gap(m);
    if ((gm < 0) == (ga < 0)) {
      a = m;
      ga = gm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace chemo
