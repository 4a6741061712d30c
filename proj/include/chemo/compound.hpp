#pragma once

// Compound cylinder functions anchored at a radius.
//
//   T0(r;R) = K1(R) I0(r) + I1(R) K0(r),      T1 = dT0/dr
//   S0(r;w,R) = Y1(wR) J0(w(R-r)) - J1(wR) Y0(w(R-r)),  S1 likewise with J1, Y1
//   V0(r;w,R) = Y0(wR) J0(w(R-r)) - J0(wR) Y0(w(R-r)),  V1 likewise with J1, Y1
//
// S(-r; w, a) is obtained by passing a negative offset.

namespace chemo {

double T(int order, double r, double anchor);
double T0(double r, double anchor);
double T1(double r, double anchor);

// T0(r;a)/T1(r;a) without overflow. anchor == 0 is the limit I0(r)/I1(r).
double t_ratio(double r, double anchor);

double S(int order, double r, double omega, double anchor);
double S0(double r, double omega, double anchor);
double S1(double r, double omega, double anchor);

double V(int order, double r, double omega, double anchor);
double V0(double r, double omega, double anchor);
double V1(double r, double omega, double anchor);

// Cylinder function Z_n(w r) = Y1(w A) J_n(w r) - J1(w A) Y_n(w r); equals S_n(A - r; w, A).
double anchored_cylinder(int order, double r, double omega, double anchor);

// Leading large-wR behaviour: S0 ~ -2 cos(wr) / (pi w sqrt(R(R-r))), S1 ~ +2 sin(wr) / (...).
double s_asymptotic(int order, double r, double omega, double anchor);

struct Interval {
  double lo;
  double hi;
  bool contains(double x) const { return lo <= x && x <= hi; }
};

// Two-term Hankel P, Q for J_n/Y_n with rigorous remainder intervals:
//   J_n(x) = sqrt(2/(pi x)) (P cos(phase) - Q sin(phase)),
//   Y_n(x) = sqrt(2/(pi x)) (P sin(phase) + Q cos(phase)),  phase = x - n pi/2 - pi/4.
struct PQExpansion {
  double P;   // leading terms
  double Q;
  Interval P_bracket;
  Interval Q_bracket;
};

PQExpansion pq_expansion(double x, int order);

}  // namespace chemo
