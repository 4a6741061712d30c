#pragma once

// Free energy  E = (1/chi) int u^2 + int (|v'|^2 + v^2 - 2uv)  of radial steady states.
// On a steady state it collapses to (1/chi) sum_i lambda_i m_i over support components.

#include <optional>
#include <string>
#include <vector>

#include "chemo/solution.hpp"

namespace chemo {

struct EnergyReport {
  double total = 0;                    // (1/chi) sum lambda_i m_i from stored constants
  std::vector<double> per_component;
  std::optional<double> closed_form;   // family formula in terms of masses and support radii
  double quadrature = 0;               // direct integration of the functional
  double discrepancy = 0;              // |closed_form - quadrature| (or |total - quadrature|)
};

// Throws InvalidInput for the log-potential state (unbounded v) or when u - chi v drifts
// from the stored constant on a component.
EnergyReport energy(const PiecewiseRadialSolution& s);

// Closed-form energy of a constant state of mass M on an annulus (a, b).
double constant_energy(double chi, double M, double a, double b);

struct HierarchyEntry {
  std::string label;
  Family family;
  double energy;
};

struct HierarchyReport {
  std::vector<HierarchyEntry> sorted;  // ascending energy
  std::vector<std::string> violations;
  bool ordered() const { return violations.empty(); }
};

// Checks inner < outer < constant and hat, volcano, airy < constant, each with a margin
// of margin_rel * |E(constant)|. All states must share (chi, R, M).
HierarchyReport hierarchy(const std::vector<PiecewiseRadialSolution>& states,
                          double margin_rel = 1e-10);

// F(k) = sum m_i^2 / (R_i^2 - R_{i-1}^2) with R_0 = 0; radii are R_1 < ... < R_k.
double partition_bound(const std::vector<double>& masses, const std::vector<double>& radii);

// chi in [chi_lo, chi_hi] where the outer ring and the Mexican hat centred at R0_upper have
// equal energy, located by sign scan and bisection; empty if no crossing.
std::optional<double> outer_hat_crossing(double R, double M, double chi_lo, double chi_hi,
                                         int scan_points = 200);

}  // namespace chemo
