#include "chemo/solution.hpp"

#include <array>
#include <cmath>
#include <string>

#include "chemo/compound.hpp"
#include "chemo/errors.hpp"
#include "chemo/specfun.hpp"

namespace chemo {

namespace {

constexpr std::array<std::string_view, 14> kFamilyNames = {
    "constant",           "bifurcation_disk",   "inner_ring",       "outer_ring",
    "annulus_decreasing", "annulus_increasing", "annulus_bifurcation", "mexican_hat",
    "volcano_attached",   "volcano_detached",   "airy_hat",         "airy_volcano",
    "whole_space",        "log_potential"};

constexpr std::array<std::string_view, 10> kFormNames = {
    "flat", "bessel_mode", "cylinder_mode", "j_cap", "s_cap",
    "i_gap", "k_gap", "t_gap", "log_cap", "log_gap"};

constexpr std::array<int, 10> kCoefficientCounts = {2, 4, 4, 2, 3, 1, 1, 2, 1, 2};

// J1(x)/x with its limit at 0.
double j1_over_x(double j1, double x) { return x == 0 ? 0.5 : j1 / x; }

}  // namespace

std::string_view to_string(Family f) { return kFamilyNames.at(static_cast<int>(f)); }
std::string_view to_string(Form f) { return kFormNames.at(static_cast<int>(f)); }

Family family_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i)
    if (kFamilyNames[i] == s) return static_cast<Family>(i);
  throw ParseError("unknown family '" + std::string(s) + "'");
}

Form form_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kFormNames.size(); ++i)
    if (kFormNames[i] == s) return static_cast<Form>(i);
  throw ParseError("unknown segment form '" + std::string(s) + "'");
}

int coefficient_count(Form f) { return kCoefficientCounts.at(static_cast<int>(f)); }

bool Segment::supports_density() const {
  switch (form) {
    case Form::IGap:
    case Form::KGap:
    case Form::TGap:
    case Form::LogGap:
      return false;
    default:
      return true;
  }
}

std::vector<double> PiecewiseRadialSolution::knots() const {
  std::vector<double> k;
  k.reserve(segments.size() + 1);
  for (const auto& s : segments) k.push_back(s.lo);
  if (!segments.empty()) k.push_back(segments.back().hi);
  return k;
}

std::size_t PiecewiseRadialSolution::locate(double r, bool prefer_right) const {
  const std::size_t n = segments.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double hi = segments[i].hi;
    if (r < hi || (r == hi && !(prefer_right && i + 1 < n))) return i;
  }
  return n - 1;
}

PointValue PiecewiseRadialSolution::eval(double r) const { return eval_segment(locate(r), r); }

PointValue PiecewiseRadialSolution::eval_segment(std::size_t i, double r) const {
  return eval_form(segments.at(i), params, r);
}

PointValue eval_form(const Segment& s, const ModelParams& p, double r) {
  const double chi = p.chi;
  PointValue out;
  switch (s.form) {
    case Form::Flat:
      out.u = s.c(0);
      out.v = s.c(1);
      break;
    case Form::BesselMode: {
      const double eps = s.c(2), kappa = s.c(3);
      const double x = kappa * r;
      const double j0 = J0(x), j1 = J1(x);
      out.v = s.c(1) + eps * j0;
      out.dv = -eps * kappa * j1;
      out.d2v = -eps * kappa * kappa * (j0 - j1_over_x(j1, x));
      out.u = s.c(0) + chi * eps * j0;
      out.du = chi * out.dv;
      break;
    }
    case Form::CylinderMode: {
      const double w = p.omega();
      const double eps = s.c(2), A = s.c(3);
      const double z0 = anchored_cylinder(0, r, w, A), z1 = anchored_cylinder(1, r, w, A);
      out.v = s.c(1) + eps * z0;
      out.dv = -eps * w * z1;
      out.d2v = -eps * w * w * (z0 - z1 / (w * r));
      out.u = s.c(0) + chi * eps * z0;
      out.du = chi * out.dv;
      break;
    }
    case Form::JCap: {
      const double w = p.omega();
      const double amp = s.c(0), level = J0(w * s.c(1));
      const double x = w * r;
      const double j0 = J0(x), j1 = J1(x);
      out.u = amp * (j0 - level);
      out.v = amp * (j0 / chi - level);
      out.du = -amp * w * j1;
      out.dv = out.du / chi;
      out.d2v = -amp * w * w * (j0 - j1_over_x(j1, x)) / chi;
      break;
    }
    case Form::SCap: {
      const double w = p.omega();
      const double amp = s.c(0), A = s.c(1), rho = s.c(2);
      const double level = anchored_cylinder(0, A - rho, w, A);
      const double z0 = anchored_cylinder(0, r, w, A), z1 = anchored_cylinder(1, r, w, A);
      out.u = amp * (z0 - level);
      out.v = amp * (z0 / chi - level);
      out.du = -amp * w * z1;
      out.dv = out.du / chi;
      out.d2v = -amp * w * w * (z0 - z1 / (w * r)) / chi;
      break;
    }
    case Form::IGap: {
      const double B = s.c(0);
      const double i0 = I0(r), i1 = I1(r);
      out.v = B * i0;
      out.dv = B * i1;
      out.d2v = B * (i0 - (r == 0 ? 0.5 : i1 / r));
      break;
    }
    case Form::KGap: {
      const double B = s.c(0);
      const double k0 = K0(r), k1 = K1(r);
      out.v = B * k0;
      out.dv = -B * k1;
      out.d2v = B * (k0 + k1 / r);
      break;
    }
    case Form::TGap: {
      const double B = s.c(0), A = s.c(1);
      const double t0 = T0(r, A), t1 = T1(r, A);
      out.v = B * t0;
      out.dv = B * t1;
      out.d2v = B * (t0 - t1 / r);
      break;
    }
    case Form::LogCap: {
      const double amp = s.c(0);
      const double q = std::sqrt(chi);
      const double x = q * r;
      const double j0 = J0(x), j1 = J1(x);
      out.u = amp * j0;
      out.v = amp * j0 / chi;
      out.du = -amp * q * j1;
      out.dv = -amp * j1 / q;
      out.d2v = -amp * (j0 - j1_over_x(j1, x));
      break;
    }
    case Form::LogGap: {
      const double c = s.c(0);
      out.v = -c * std::log(r / s.c(1));
      out.dv = -c / r;
      out.d2v = c / (r * r);
      break;
    }
  }
  return out;
}

}  // namespace chemo
