#include "chemo/compound.hpp"

#include <cmath>
#include <numbers>

#include "chemo/errors.hpp"
#include "chemo/specfun.hpp"

namespace chemo {

namespace {

void require_positive(double x, const char* what) {
  if (!(x > 0)) throw DomainError(what);
}

}  // namespace

// Scaled evaluation: K1(R) I0(r) = K1s(R) I0s(r) e^{r-R} and I1(R) K0(r) = I1s(R) K0s(r) e^{R-r}.
double T0(double r, double anchor) {
  require_positive(r, "T0: r must be positive");
  require_positive(anchor, "T0: anchor must be positive");
  return K1s(anchor) * I0s(r) * std::exp(r - anchor) + I1s(anchor) * K0s(r) * std::exp(anchor - r);
}

double T1(double r, double anchor) {
  require_positive(r, "T1: r must be positive");
  require_positive(anchor, "T1: anchor must be positive");
  return K1s(anchor) * I1s(r) * std::exp(r - anchor) - I1s(anchor) * K1s(r) * std::exp(anchor - r);
}

double T(int order, double r, double anchor) {
  if (order == 0) return T0(r, anchor);
  if (order == 1) return T1(r, anchor);
  throw DomainError("T: order must be 0 or 1");
}

double t_ratio(double r, double anchor) {
  require_positive(r, "t_ratio: r must be positive");
  if (anchor == 0.0) return I0s(r) / I1s(r);
  require_positive(anchor, "t_ratio: anchor must be non-negative");
  // Divide numerator and denominator by I1(R) K0(r) e^{R-r} style factors.
  const double w = std::exp(2.0 * (r - anchor)) * K1s(anchor);
  const double ia = I1s(anchor);
  return (w * I0s(r) + ia * K0s(r)) / (w * I1s(r) - ia * K1s(r));
}

double anchored_cylinder(int order, double r, double omega, double anchor) {
  const double x = omega * r;
  if (!(x > 0)) throw DomainError("anchored_cylinder: w r must be positive");
  const double wa = omega * anchor;
  const double y1a = Y1(wa);
  const double j1a = J1(wa);
  if (order == 0) return y1a * J0(x) - j1a * Y0(x);
  if (order == 1) return y1a * J1(x) - j1a * Y1(x);
  throw DomainError("anchored_cylinder: order must be 0 or 1");
}

double S(int order, double r, double omega, double anchor) {
  if (!(omega * (anchor - r) > 0)) throw DomainError("S: w(R-r) must be positive");
  require_positive(anchor, "S: anchor must be positive");
  return anchored_cylinder(order, anchor - r, omega, anchor);
}

double S0(double r, double omega, double anchor) { return S(0, r, omega, anchor); }
double S1(double r, double omega, double anchor) { return S(1, r, omega, anchor); }

double V(int order, double r, double omega, double anchor) {
  const double x = omega * (anchor - r);
  if (!(x > 0)) throw DomainError("V: w(R-r) must be positive");
  require_positive(anchor, "V: anchor must be positive");
  const double wa = omega * anchor;
  if (order == 0) return Y0(wa) * J0(x) - J0(wa) * Y0(x);
  if (order == 1) return Y0(wa) * J1(x) - J0(wa) * Y1(x);
  throw DomainError("V: order must be 0 or 1");
}

double V0(double r, double omega, double anchor) { return V(0, r, omega, anchor); }
double V1(double r, double omega, double anchor) { return V(1, r, omega, anchor); }

double s_asymptotic(int order, double r, double omega, double anchor) {
  const double amp = 2.0 / (std::numbers::pi * omega * std::sqrt(anchor * (anchor - r)));
  if (order == 0) return -amp * std::cos(omega * r);
  if (order == 1) return amp * std::sin(omega * r);
  throw DomainError("s_asymptotic: order must be 0 or 1");
}

PQExpansion pq_expansion(double x, int order) {
  if (!(x > 1)) throw DomainError("pq_expansion: x must exceed 1");
  const double x2 = x * x;
  const double x3 = x2 * x;
  PQExpansion e{};
  if (order == 0) {
    e.P = 1.0;
    e.Q = -1.0 / (8.0 * x);
    e.P_bracket = {1.0 - 9.0 / (128.0 * x2), 1.0};
    e.Q_bracket = {-1.0 / (8.0 * x), -1.0 / (8.0 * x) + 75.0 / (1024.0 * x3)};
  } else if (order == 1) {
    e.P = 1.0;
    e.Q = 3.0 / (8.0 * x);
    e.P_bracket = {1.0, 1.0 + 15.0 / (128.0 * x2)};
    e.Q_bracket = {3.0 / (8.0 * x) - 105.0 / (1024.0 * x3), 3.0 / (8.0 * x)};
  } else {
    throw DomainError("pq_expansion: order must be 0 or 1");
  }
  return e;
}

}  // namespace chemo
