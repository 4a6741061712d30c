#include "chemo/catalog.hpp"

#include <algorithm>

#include "chemo/assembler.hpp"
#include "chemo/errors.hpp"
#include "chemo/thresholds.hpp"

namespace chemo {

const std::vector<std::string>& catalog_kinds() {
  static const std::vector<std::string> kinds = {
      "constant", "bifurcation", "inner",     "outer",        "annulus_decreasing",
      "annulus_increasing", "annulus_bifurcation", "hat", "volcano", "airy_hat",
      "airy_volcano", "whole_space", "logpotential"};
  return kinds;
}

PiecewiseRadialSolution build(const SolveRequest& req) {
  const std::string& kind = req.kind;
  ModelParams p = req.params;
  if (kind == "constant") return constant(p);
  if (kind == "bifurcation") {
    p.chi = chi_k(p.R, req.k);
    auto [lo, hi] = bifurcation_epsilon_range(p, req.k);
    return bifurcation_family(p, req.k, req.epsilon.value_or(0.5 * (lo + hi)));
  }
  if (kind == "inner") return inner_ring(p);
  if (kind == "outer") return outer_ring(p);
  if (kind == "annulus_decreasing") return annulus_mode(p, req.a, req.b, AnnulusDirection::Decreasing);
  if (kind == "annulus_increasing") return annulus_mode(p, req.a, req.b, AnnulusDirection::Increasing);
  if (kind == "annulus_bifurcation") {
    if (!(req.a > 0 && req.b > req.a)) throw AdmissibilityError("annulus bifurcation: need 0 < a < b");
    const double w = omega_ab(req.a, req.b);
    p.chi = w * w + 1;
    auto [lo, hi] = annulus_bifurcation_epsilon_range(p, req.a, req.b);
    return annulus_bifurcation(p, req.a, req.b, req.epsilon.value_or(0.5 * (lo + hi)));
  }
  if (kind == "hat") {
    if (req.R0) return mexican_hat(p, *req.R0);
    auto [lo, hi] = hat_center_range(p);
    return mexican_hat(p, 0.5 * (lo + hi));
  }
  if (kind == "volcano") return volcano(p);
  if (kind == "airy_hat") return airy(p, req.k0, AiryVariant::Hat, req.R0);
  if (kind == "airy_volcano") return airy(p, req.k0, AiryVariant::Volcano);
  if (kind == "whole_space") {
    p.R = ModelParams::unbounded();
    return whole_space(p);
  }
  if (kind == "logpotential") {
    p.R = ModelParams::unbounded();
    return log_potential(p);
  }
  std::string names;
  for (const auto& k : catalog_kinds()) names += (names.empty() ? "" : ", ") + k;
  throw ParseError("unknown kind '" + kind + "' (expected one of " + names + ")");
}

}  // namespace chemo
