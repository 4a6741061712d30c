#include "chemo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "chemo/specfun.hpp"
#include "chemo/thresholds.hpp"

namespace chemo {

namespace {

constexpr double pi = std::numbers::pi;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

double origin_offset(const PiecewiseRadialSolution& s) {
  const double scale = s.params.whole_space() ? s.domain_hi() : s.params.R;
  return scale * 1e-9;
}

// Evaluation point inside segment i, nudged off the origin.
double clamp_point(const PiecewiseRadialSolution& s, double r) {
  return r <= 0 ? origin_offset(s) : r;
}

bool is_log(const PiecewiseRadialSolution& s) { return s.tag.family == Family::LogPotential; }

double integrate(const std::function<double(double)>& f, double a, double b) {
  if (!(b > a)) return 0;
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 31>::integrate(f, a, b, 10, 1e-12);
}

bool close_rel(double a, double b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Checks that the family tag agrees with the parameters stored in the segments.
void check_tag(const PiecewiseRadialSolution& s, std::vector<std::string>& fail) {
  const auto& t = s.tag;
  const auto& seg = s.segments;
  auto mismatch = [&](const std::string& what) { fail.push_back("tag: " + what); };
  auto find_form = [&](Form f) -> const Segment* {
    for (const auto& x : seg)
      if (x.form == f) return &x;
    return nullptr;
  };
  const bool disk = !s.params.whole_space();
  switch (t.family) {
    case Family::BifurcationDisk: {
      const Segment* m = find_form(Form::BesselMode);
      if (!m || !close_rel(m->c(2), t.epsilon)) mismatch("epsilon differs from the family tag");
      if (m && !close_rel(m->c(3), j1k(t.k) / s.params.R)) mismatch("wavenumber is not j_{1,k}/R");
      break;
    }
    case Family::AnnulusBifurcation: {
      const Segment* m = find_form(Form::CylinderMode);
      if (!m || !close_rel(m->c(2), t.epsilon)) mismatch("epsilon differs from the family tag");
      if (m && !close_rel(m->c(3), t.b)) mismatch("mode anchor differs from b");
      break;
    }
    case Family::MexicanHat:
    case Family::AiryHat: {
      const Segment* g = find_form(Form::TGap);
      if (!g || !close_rel(g->c(1), t.R0)) mismatch("gap anchor differs from R0");
      break;
    }
    case Family::VolcanoDetached: {
      const Segment* c = find_form(Form::SCap);
      if (!c || !close_rel(c->c(1), t.R0)) mismatch("cap anchor differs from R0*");
      break;
    }
    default:
      break;
  }
  if (t.family == Family::AnnulusBifurcation || t.family == Family::AnnulusDecreasing ||
      t.family == Family::AnnulusIncreasing) {
    if (!close_rel(s.domain_lo(), t.a) || !close_rel(s.domain_hi(), t.b))
      mismatch("domain differs from (a, b)");
    if (!close_rel(s.params.R, t.b)) mismatch("R differs from the outer radius b");
  } else if (disk) {
    if (s.domain_lo() != 0 || !close_rel(s.domain_hi(), s.params.R))
      mismatch("domain differs from [0, R]");
  }
}

}  // namespace

RadialField sample(const PiecewiseRadialSolution& s, int n, bool include_knots) {
  std::vector<double> r;
  const double lo = s.domain_lo(), hi = s.domain_hi();
  r.reserve(n + s.segments.size() + 2);
  for (int i = 0; i <= n; ++i) r.push_back(lo + (hi - lo) * i / n);
  if (include_knots)
    for (double k : s.knots()) r.push_back(k);
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  RadialField f;
  for (double x : r) {
    const double xe = clamp_point(s, x);
    PointValue p = s.eval(xe);
    f.r.push_back(x);
    f.u.push_back(p.u);
    f.v.push_back(p.v);
    f.du.push_back(p.du);
    f.dv.push_back(p.dv);
  }
  return f;
}

double mass_between(const PiecewiseRadialSolution& s, double lo, double hi) {
  double m = 0;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const Segment& seg = s.segments[i];
    if (!seg.supports_density()) continue;
    const double a = std::max(lo, seg.lo), b = std::min(hi, seg.hi);
    m += integrate([&](double r) { return 2 * pi * r * s.eval_segment(i, clamp_point(s, r)).u; }, a, b);
  }
  return m;
}

VerificationReport verify(const PiecewiseRadialSolution& s, int grid_size, const VerifyTolerances& tol) {
  VerificationReport rep;
  auto& fail = rep.failures;
  if (s.segments.empty()) {
    fail.push_back("solution has no segments");
    return rep;
  }
  for (const auto& seg : s.segments)
    if (static_cast<int>(seg.coeffs.size()) != coefficient_count(seg.form))
      fail.push_back("segment " + std::string(to_string(seg.form)) + " has the wrong coefficient count");
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const Segment& seg = s.segments[i];
    if (!(seg.lo < seg.hi)) fail.push_back("tiling: empty segment [" + fmt(seg.lo) + ", " + fmt(seg.hi) + "]");
    if (i + 1 < s.segments.size() && seg.hi != s.segments[i + 1].lo)
      fail.push_back("tiling: gap or overlap between " + fmt(seg.hi) + " and " + fmt(s.segments[i + 1].lo));
  }
  {
    // Stored components must be exactly the maximal runs of support segments.
    std::vector<std::pair<double, double>> runs;
    for (const auto& seg : s.segments) {
      if (!seg.supports_density()) continue;
      if (!runs.empty() && runs.back().second == seg.lo)
        runs.back().second = seg.hi;
      else
        runs.emplace_back(seg.lo, seg.hi);
    }
    bool same = runs.size() == s.components.size();
    for (std::size_t i = 0; same && i < runs.size(); ++i)
      same = runs[i].first == s.components[i].lo && runs[i].second == s.components[i].hi;
    if (!same) fail.push_back("components: intervals do not match the support segments");
  }
  if (!(s.params.M > 0) || !(s.params.chi > 0))
    fail.push_back("parameters: chi and M must be positive");
  if (!fail.empty()) return rep;

  grid_size = std::max(grid_size, 1000);
  const double chi = s.params.chi;
  const bool log = is_log(s);
  const double lo = s.domain_lo(), hi = s.domain_hi();

  // Per-segment evaluation on the shared grid.
  std::vector<double> grid;
  for (int i = 0; i <= grid_size; ++i) grid.push_back(lo + (hi - lo) * i / grid_size);
  double dvmax = 0;
  rep.u_min = INFINITY;
  rep.v_min = INFINITY;
  std::vector<double> resid;
  struct Sample {
    double r, u, v;
    bool support;
  };
  std::vector<Sample> pts;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const Segment& seg = s.segments[i];
    auto first = std::lower_bound(grid.begin(), grid.end(), seg.lo);
    std::vector<double> local(first, std::upper_bound(first, grid.end(), seg.hi));
    local.push_back(seg.lo);
    local.push_back(seg.hi);
    for (double r : local) {
      const double x = clamp_point(s, r);
      PointValue p = s.eval_segment(i, x);
      const double res = log ? p.d2v + p.dv / x + p.u : p.d2v + p.dv / x - p.v + p.u;
      resid.push_back(std::abs(res));
      rep.u_max = std::max(rep.u_max, p.u);
      rep.u_min = std::min(rep.u_min, p.u);
      rep.v_min = std::min(rep.v_min, p.v);
      dvmax = std::max(dvmax, std::abs(p.dv));
      pts.push_back({r, p.u, p.v, seg.supports_density()});
    }
  }
  const double umax = rep.u_max;
  rep.v_residual_max = *std::max_element(resid.begin(), resid.end());
  if (!(rep.v_residual_max <= tol.residual * std::max(1.0, umax)))
    fail.push_back("v_residual: " + fmt(rep.v_residual_max) + " exceeds " +
                   fmt(tol.residual * std::max(1.0, umax)));

  // u - chi v against the stored constant on each component.
  for (const auto& c : s.components) {
    double dev = 0;
    for (const auto& q : pts)
      if (q.support && q.r >= c.lo && q.r <= c.hi) dev = std::max(dev, std::abs(q.u - chi * q.v - c.lambda));
    rep.flux_constancy = std::max(rep.flux_constancy, dev);
  }
  if (!(rep.flux_constancy <= tol.flux * umax))
    fail.push_back("flux_constancy: " + fmt(rep.flux_constancy) + " exceeds " + fmt(tol.flux * umax));

  // Mass, total and per component.
  const double M = s.params.M;
  const double total = mass_between(s, lo, hi);
  rep.mass_error = std::abs(total - M) / M;
  if (!(rep.mass_error <= tol.mass))
    fail.push_back("mass_error: " + fmt(rep.mass_error) + " exceeds " + fmt(tol.mass));
  double stored = 0;
  for (const auto& c : s.components) {
    const double e = std::abs(mass_between(s, c.lo, c.hi) - c.mass) / M;
    rep.component_mass_error.push_back(e);
    stored += c.mass;
    if (!(e <= tol.mass)) fail.push_back("component_mass: " + fmt(e) + " exceeds " + fmt(tol.mass));
  }
  if (std::abs(stored - M) > tol.mass * M) fail.push_back("component masses do not sum to M");

  // Closed-form one-sided limits at each interior knot.
  for (std::size_t i = 0; i + 1 < s.segments.size(); ++i) {
    const double r = s.segments[i].hi;
    PointValue L = s.eval_segment(i, r), Rv = s.eval_segment(i + 1, r);
    auto rel = [](double a, double b) {
      return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
    };
    KnotJump j{r, std::abs(L.u - Rv.u) / std::max(1.0, umax), rel(L.v, Rv.v), rel(L.dv, Rv.dv),
               rel(L.d2v, Rv.d2v)};
    rep.continuity.push_back(j);
    const double worst = std::max({j.u, j.v, j.dv, j.d2v});
    if (!(worst <= tol.continuity))
      fail.push_back("continuity at r = " + fmt(r) + ": jump " + fmt(worst) + " exceeds " +
                     fmt(tol.continuity));
  }

  // Neumann walls.
  const double bscale = tol.boundary * std::max(1.0, dvmax);
  rep.boundary_left = std::abs(s.eval_segment(0, lo).dv);
  if (!(rep.boundary_left <= bscale))
    fail.push_back("boundary: |v'| = " + fmt(rep.boundary_left) + " at r = " + fmt(lo));
  if (!s.params.whole_space()) {
    rep.boundary_right = std::abs(s.eval_segment(s.segments.size() - 1, hi).dv);
    if (!(rep.boundary_right <= bscale))
      fail.push_back("boundary: |v'| = " + fmt(rep.boundary_right) + " at r = " + fmt(hi));
  }

  rep.u_nonnegative = rep.u_min >= -tol.positivity * umax;
  if (!rep.u_nonnegative) fail.push_back("positivity: min u = " + fmt(rep.u_min));
  rep.v_positive = log || rep.v_min > 0;
  if (!rep.v_positive) fail.push_back("positivity: min v = " + fmt(rep.v_min));

  check_tag(s, fail);
  return rep;
}

StructureReport structure_check(const PiecewiseRadialSolution& s, int grid_size) {
  StructureReport rep;
  const RadialField f = sample(s, grid_size, false);
  const double umax = *std::max_element(f.u.begin(), f.u.end());
  const double utol = 1e-12 * umax;
  const std::size_t n = f.r.size();

  // Support components; isolated zero touches (one or two nodes) do not split them.
  struct Run {
    std::size_t first, last;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < n; ++i) {
    if (f.u[i] <= utol) continue;
    if (!runs.empty() && i - runs.back().last <= 3) {
      runs.back().last = i;
    } else {
      runs.push_back({i, i});
    }
  }
  rep.components = static_cast<int>(runs.size());
  rep.touches_origin = !runs.empty() && runs.front().first <= 1;
  rep.touches_boundary = !runs.empty() && runs.back().last + 2 >= n;

  double dvmax = 0;
  for (double d : f.dv) dvmax = std::max(dvmax, std::abs(d));
  int sign = 0;
  for (double d : f.dv) {
    if (std::abs(d) <= 1e-9 * dvmax) continue;
    const int sg = d > 0 ? 1 : -1;
    if (sign != 0 && sg != sign) ++rep.dv_sign_changes;
    sign = sg;
  }

  const auto fam = s.tag.family;
  int comps = 1;
  int changes = 0;
  enum { Any, Yes, No } origin = Any, boundary = Any;
  switch (fam) {
    case Family::Constant:
      origin = boundary = Yes;
      break;
    case Family::BifurcationDisk:
      origin = boundary = Yes;
      changes = s.tag.epsilon == 0 ? 0 : s.tag.k - 1;
      break;
    case Family::AnnulusBifurcation:
      origin = boundary = Yes;
      break;
    case Family::InnerRing:
    case Family::AnnulusDecreasing:
    case Family::WholeSpace:
    case Family::LogPotential:
      origin = Yes;
      break;
    case Family::OuterRing:
    case Family::AnnulusIncreasing:
      boundary = Yes;
      origin = No;
      break;
    case Family::MexicanHat:
      comps = 2;
      changes = 1;
      origin = boundary = Yes;
      break;
    case Family::AiryHat:
      comps = 2;
      changes = s.tag.k0 - 1;
      origin = boundary = Yes;
      break;
    case Family::VolcanoAttached:
      changes = 1;
      origin = No;
      boundary = Yes;
      break;
    case Family::AiryVolcano:
      changes = s.tag.k0 - 1;
      origin = No;
      boundary = Yes;
      break;
    case Family::VolcanoDetached:
      changes = 1;
      origin = boundary = No;
      break;
  }
  rep.expected_components = comps;
  rep.expected_dv_sign_changes = changes;
  if (rep.components != comps)
    rep.failures.push_back("support has " + std::to_string(rep.components) +
                           " components, expected " + std::to_string(comps));
  if (origin == Yes && !rep.touches_origin) rep.failures.push_back("support should contain the inner end");
  if (origin == No && rep.touches_origin) rep.failures.push_back("support should not contain the inner end");
  if (boundary == Yes && !rep.touches_boundary) rep.failures.push_back("support should reach the outer wall");
  if (boundary == No && rep.touches_boundary) rep.failures.push_back("support should not reach the outer wall");
  if (rep.dv_sign_changes != changes)
    rep.failures.push_back("v' changes sign " + std::to_string(rep.dv_sign_changes) +
                           " times, expected " + std::to_string(changes));
  return rep;
}

}  // namespace chemo
