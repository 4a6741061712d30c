#pragma once

// Constructors for every explicit radial steady-state family.

#include <optional>
#include <utility>

#include "chemo/solution.hpp"

namespace chemo {

PiecewiseRadialSolution constant(const ModelParams& p);

// Admissible epsilon range [lo, hi] of the k-th bifurcation family.
std::pair<double, double> bifurcation_epsilon_range(const ModelParams& p, int k);

// Strictly positive family through the constant state at chi = chi_k. p.chi must equal
// chi_k to 1e-9 relative; the returned solution carries chi_k exactly.
PiecewiseRadialSolution bifurcation_family(const ModelParams& p, int k, double epsilon);

PiecewiseRadialSolution inner_ring(const ModelParams& p);
PiecewiseRadialSolution outer_ring(const ModelParams& p);

enum class AnnulusDirection { Decreasing, Increasing };

// Monotone state on the annulus (a, b) with Neumann walls at both radii; M is the
// annulus mass. a = 0 falls back to the disk rings of radius b.
PiecewiseRadialSolution annulus_mode(const ModelParams& p, double a, double b,
                                     AnnulusDirection direction);

std::pair<double, double> annulus_bifurcation_epsilon_range(const ModelParams& p, double a, double b);

// Strictly positive family on (a, b) at chi = chi_{a,b}.
PiecewiseRadialSolution annulus_bifurcation(const ModelParams& p, double a, double b,
                                            double epsilon);

// Admissible interval of the Mexican-hat / Airy-hat centre: [j11/w, rbar0(w, R, k0)].
std::pair<double, double> hat_center_range(const ModelParams& p, int k0 = 2);

PiecewiseRadialSolution mexican_hat(const ModelParams& p, double R0);

// Attached regime for chi <= chi2*, detached above; chi2_star may be supplied to skip
// the threshold search.
PiecewiseRadialSolution volcano(const ModelParams& p, std::optional<double> chi2_star = {});
PiecewiseRadialSolution volcano_attached(const ModelParams& p);
PiecewiseRadialSolution volcano_detached(const ModelParams& p);

enum class AiryVariant { Hat, Volcano };

// Sub-interval of hat_center_range(p, k0) on which the Airy hat density is nonnegative.
// For k0 >= 3 the outer cap spans further oscillations and only centres near the upper end
// survive. Throws PositivityError when the window is empty.
std::pair<double, double> airy_hat_center_range(const ModelParams& p, int k0);

// Higher-order concentric patterns. Hat needs R0 in hat_center_range(p, k0); when omitted
// the middle of airy_hat_center_range is used.
PiecewiseRadialSolution airy(const ModelParams& p, int k0, AiryVariant variant,
                             std::optional<double> R0 = {});

PiecewiseRadialSolution whole_space(const ModelParams& p);
PiecewiseRadialSolution log_potential(const ModelParams& p);

// Radius beyond the support at which plane solutions are truncated.
inline constexpr double kPlaneTail = 30.0;

}  // namespace chemo
