#pragma once

// Real-argument Bessel functions of order 0, 1, 2 and their positive zeros.

#include <vector>

namespace chemo {

enum class BesselKind { J, Y, I, K };

// Unscaled value. Throws DomainError for Y, K at x <= 0 and std::overflow_error
// when I_n(x) is not representable.
double bessel(BesselKind kind, int order, double x);

// e^{-x} I_n(x) for kind I, e^{x} K_n(x) for kind K; J and Y are returned unscaled.
double bessel_scaled(BesselKind kind, int order, double x);

double J0(double x);
double J1(double x);
double J2(double x);
double Y0(double x);
double Y1(double x);
double I0(double x);
double I1(double x);
double I2(double x);
double K0(double x);
double K1(double x);

double I0s(double x);  // e^{-x} I0(x)
double I1s(double x);
double K0s(double x);  // e^{x} K0(x)
double K1s(double x);

enum class RootKind { J0, J1, Y1 };

struct BesselRootTable {
  RootKind kind;
  std::vector<double> roots;
};

// n-th positive zero (n >= 1).
double nth_root(RootKind kind, int n);

BesselRootTable root_table(RootKind kind, int count);

// Frequently used zeros.
double j01();
double j11();
double j1k(int k);

}  // namespace chemo
