#pragma once

// Grid-based verification of assembled steady states against the stationary system
//   v'' + v'/r - v + u = 0,  u - chi v = const on each component of supp(u),
// Neumann walls, mass, and C^2 matching at the knots.

#include <string>
#include <vector>

#include "chemo/solution.hpp"

namespace chemo {

struct RadialField {
  std::vector<double> r;
  std::vector<double> u;
  std::vector<double> v;
  std::vector<double> du;
  std::vector<double> dv;
};

// n+1 uniform nodes on the solution domain (knots added); the origin is replaced by
// R * 1e-9 so that logarithmic terms stay finite.
RadialField sample(const PiecewiseRadialSolution& s, int n, bool include_knots = true);

struct KnotJump {
  double r;
  double u;    // |u_L - u_R| / max(1, |u|_inf)
  double v;    // remaining entries are relative to max(1, |left|, |right|)
  double dv;
  double d2v;
};

struct VerifyTolerances {
  double residual = 1e-8;     // times max(1, |u|_inf)
  double flux = 1e-9;         // times |u|_inf
  double mass = 1e-10;        // relative
  double continuity = 1e-6;
  double boundary = 1e-8;     // times max(1, |v'|_inf)
  double positivity = 1e-10;  // allowed undershoot of u, times |u|_inf
};

struct VerificationReport {
  double u_max = 0;
  double u_min = 0;
  double v_min = 0;
  double v_residual_max = 0;
  double flux_constancy = 0;
  double mass_error = 0;
  std::vector<double> component_mass_error;
  std::vector<KnotJump> continuity;
  bool u_nonnegative = true;
  bool v_positive = true;
  double boundary_left = 0;
  double boundary_right = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

VerificationReport verify(const PiecewiseRadialSolution& s, int grid_size = 10000,
                          const VerifyTolerances& tol = {});

struct StructureReport {
  int components = 0;
  int expected_components = 0;
  bool touches_origin = false;
  bool touches_boundary = false;
  int dv_sign_changes = 0;
  int expected_dv_sign_changes = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

StructureReport structure_check(const PiecewiseRadialSolution& s, int grid_size = 20000);

// Mass of u on [lo, hi] by adaptive Gauss-Kronrod on the segment pieces.
double mass_between(const PiecewiseRadialSolution& s, double lo, double hi);

}  // namespace chemo
