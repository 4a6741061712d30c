#pragma once

// Name-driven construction of any family, shared by the command line and sweeps.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chemo/solution.hpp"

namespace chemo {

struct SolveRequest {
  std::string kind;  // one of catalog_kinds()
  ModelParams params;
  std::optional<double> R0;
  std::optional<double> epsilon;
  int k = 1;   // bifurcation index
  int k0 = 3;  // Airy order
  double a = 1;
  double b = 5;
};

const std::vector<std::string>& catalog_kinds();

// Defaults: bifurcation and annulus bifurcation ignore chi (it is fixed by the family) and
// take the middle of the admissible epsilon range; hat takes the middle of its centre range.
PiecewiseRadialSolution build(const SolveRequest& req);

}  // namespace chemo
