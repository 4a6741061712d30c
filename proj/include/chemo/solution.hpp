#pragma once

// Piecewise closed-form radial steady states.

#include <string>
#include <string_view>
#include <vector>

#include "chemo/params.hpp"

namespace chemo {

enum class Family {
  Constant,
  BifurcationDisk,
  InnerRing,
  OuterRing,
  AnnulusDecreasing,
  AnnulusIncreasing,
  AnnulusBifurcation,
  MexicanHat,
  VolcanoAttached,
  VolcanoDetached,
  AiryHat,
  AiryVolcano,
  WholeSpace,
  LogPotential,
};

// Segment expression kinds. Coefficients are positional, with the layout below;
// w = sqrt(chi - 1) and Z(r) = Y1(w A) J0(w r) - J1(w A) Y0(w r) for anchor A.
//
//   Flat          [u_level, v_level]                u = u_level, v = v_level
//   BesselMode    [u_level, v_level, eps, kappa]    v = v_level + eps J0(kappa r), u = u_level + chi eps J0(kappa r)
//   CylinderMode  [u_level, v_level, eps, A]        v = v_level + eps Z(r),        u = u_level + chi eps Z(r)
//   JCap          [amp, rho]                        u = amp (J0(wr) - J0(w rho)), v = amp (J0(wr)/chi - J0(w rho))
//   SCap          [amp, A, rho]                     u = amp (Z(r) - Z(A - rho)),  v = amp (Z(r)/chi - Z(A - rho))
//   IGap          [amp]                             u = 0, v = amp I0(r)
//   KGap          [amp]                             u = 0, v = amp K0(r)
//   TGap          [amp, A]                          u = 0, v = amp T0(r; A)
//   LogCap        [amp]                             u = amp J0(sqrt(chi) r), v = u / chi
//   LogGap        [c, r_ref]                        u = 0, v = -c log(r / r_ref)
//
// The logarithmic-potential forms fix the free additive constant of v by v(r*) = 0.
enum class Form { Flat, BesselMode, CylinderMode, JCap, SCap, IGap, KGap, TGap, LogCap, LogGap };

std::string_view to_string(Family f);
std::string_view to_string(Form f);
Family family_from_string(std::string_view s);
Form form_from_string(std::string_view s);

// Number of coefficients each form carries.
int coefficient_count(Form f);

struct Coefficient {
  std::string name;
  double value;
};

struct Segment {
  double lo;
  double hi;
  Form form;
  std::vector<Coefficient> coeffs;

  double c(int i) const { return coeffs.at(i).value; }
  bool supports_density() const;
};

// A connected component of supp(u), with its Lagrange constant u - chi v and mass.
struct Component {
  double lo;
  double hi;
  double lambda;
  double mass;
};

struct FamilyTag {
  Family family = Family::Constant;
  int k = 0;       // bifurcation index
  int k0 = 0;      // Airy order
  double epsilon = 0;
  double R0 = 0;
  double a = 0;    // annulus inner radius
  double b = 0;    // annulus outer radius
};

// Evaluated state at one radius.
struct PointValue {
  double u = 0;
  double v = 0;
  double dv = 0;
  double d2v = 0;
  double du = 0;
};

struct PiecewiseRadialSolution {
  FamilyTag tag;
  ModelParams params;
  std::vector<Segment> segments;
  std::vector<Component> components;

  double domain_lo() const { return segments.front().lo; }
  double domain_hi() const { return segments.back().hi; }
  std::vector<double> knots() const;

  // Segment index containing r (the left one at an interior knot unless prefer_right).
  std::size_t locate(double r, bool prefer_right = false) const;

  PointValue eval(double r) const;
  PointValue eval_segment(std::size_t i, double r) const;

  double u(double r) const { return eval(r).u; }
  double v(double r) const { return eval(r).v; }
};

// Closed-form evaluation of one segment expression.
PointValue eval_form(const Segment& s, const ModelParams& p, double r);

}  // namespace chemo
