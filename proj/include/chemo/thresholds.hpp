#pragma once

// Critical chemotaxis values and geometric thresholds.

#include <map>
#include <optional>
#include <vector>

#include "chemo/params.hpp"

namespace chemo {

// (j_{1,k}/R)^2 + 1
double chi_k(double R, int k);

// k such that wR lies in (j_{1,k}, j_{1,k+1}]; 0 when wR <= j_{1,1}.
int oscillation_index(double omega, double R);

// Smallest w > j11/b with J1(wa)/Y1(wa) = J1(wb)/Y1(wb); a = 0 gives j11/b.
double omega_ab(double a, double b);

// Lower end of the Mexican-hat range: j11/w.
double rlow0(double omega);

// Largest R0 < j_{1,k-k0+2}/w with J1(w R0)/Y1(w R0) = J1(wR)/Y1(wR).
// k0 = 1 returns R. Throws AdmissibilityError when k - k0 + 2 < 1.
double rbar0(double omega, double R, int k0 = 2);

// S0(r_nu; w, R) + 2/(pi w R), with r_nu = R - rbar0 + r2(w, rbar0). Its zero in w
// marks the attached/detached switch of the volcano profile.
double chi2_star_function(double omega, double R);

struct Chi2StarOptions {
  double step_fraction = 1e-3;  // scan step in w relative to j_{1,2}/R
  double window_factor = 50.0;  // scan up to window_factor * j_{1,2}/R
};

double chi2_star(double R, const Chi2StarOptions& opt = {});

// Root of I0/I1 = -T0(.;R)/T1(.;R) in (0, R): large-chi limit of the volcano center.
double r_hat0(double R);

// Residual of the r_hat0 equation at x.
double r_hat0_function(double x, double R);

struct ThresholdSet {
  std::vector<double> chi_k;
  std::optional<double> omega_ab;
  std::optional<double> chi2_star;
  std::optional<double> rbar0;
  std::map<int, double> rbar0_k;
};

// chi_1..chi_kmax and, when chi > chi_2, the R0 thresholds for the given parameters.
ThresholdSet threshold_set(const ModelParams& p, int kmax = 5, bool with_chi2_star = false);

}  // namespace chemo
