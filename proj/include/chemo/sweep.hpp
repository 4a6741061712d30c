#pragma once

// Parameter sweeps in chi for bifurcation and energy diagrams.

#include <optional>
#include <string>
#include <vector>

#include "chemo/catalog.hpp"

namespace chemo {

enum class Observable { SupNorm, Support, Energy, Knots };

std::string_view to_string(Observable o);
Observable observable_from_string(std::string_view s);

struct SweepSpec {
  SolveRequest request;  // request.params.chi is overwritten per point
  double chi_min = 2;
  double chi_max = 100;
  int points = 50;
  bool log_spacing = false;
  Observable observable = Observable::SupNorm;
  int jobs = 1;
};

struct SweepRow {
  double chi;
  std::optional<std::string> value;  // formatted cell; empty on a failed point
  std::string error;
};

// Points run concurrently up to spec.jobs; rows come back in chi order regardless.
std::vector<SweepRow> sweep(const SweepSpec& spec);

std::vector<double> chi_grid(const SweepSpec& spec);

// Observable value of one solution, formatted at 17 significant digits.
std::string observe(const PiecewiseRadialSolution& s, Observable o);

// Maximum of u over the support.
double sup_norm(const PiecewiseRadialSolution& s);
double support_length(const PiecewiseRadialSolution& s);

// %.17g
std::string format_number(double x);

}  // namespace chemo
