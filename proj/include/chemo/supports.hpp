#pragma once

// Support-size equations of the piecewise steady states.
//
// Residuals are given in ratio form; the solvers bracket with pole-free
// cross-multiplied versions of the same equations.

#include "chemo/roots.hpp"

namespace chemo {

// w J0(wr)/J1(wr) - T0(r;R)/T1(r;R): inner cap [0, r) with gap up to a Neumann wall at R.
double f_r1(double r, double omega, double R);
// w S0(r;w,R)/S1(r;w,R) - I0(R-r)/I1(R-r): cap (R-r, R] with gap down to 0.
double f_r2(double r, double omega, double R);
// w S0(-r;w,a)/S1(-r;w,a) - T0(a+r;b)/T1(a+r;b): cap (a, a+r) in the annulus (a, b).
double f_r3(double r, double omega, double a, double b);
// w S0(r;w,b)/S1(r;w,b) - T0(b-r;a)/T1(b-r;a): cap (b-r, b) in the annulus (a, b).
double f_r4(double r, double omega, double a, double b);
// w J0(wr)/J1(wr) + K0(r)/K1(r): whole-plane cap.
double f_rstar(double r, double omega);

double solve_r1(double omega, double R);
double solve_r2(double omega, double R);
double solve_r3(double omega, double a, double b);
double solve_r4(double omega, double a, double b);
double solve_rstar_wholespace(double omega);

// Certified brackets (first sign changes of the compound functions) used by the solvers.
RootBracket bracket_r1(double omega, double R);
RootBracket bracket_r3(double omega, double a, double b);
RootBracket bracket_r4(double omega, double a, double b);

// S0(r2;w,R0) - S0(-r3;w,R0) with r2 = solve_r2(w,R0), r3 = solve_r3(w,R0,R).
double volcano_center_function(double R0, double omega, double R);

struct VolcanoCenter {
  double R0_star;
  double r2_star;
  double r3_star;
};

VolcanoCenter solve_volcano_center(double omega, double R);

}  // namespace chemo
