#pragma once

// Radial finite-volume integrator for  u_t = div(u grad u - chi u grad v),
// 0 = lap v - v + u  (or tau v_t = lap v - v + u), zero flux at r = 0 and r = R.

#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chemo/params.hpp"
#include "chemo/verify.hpp"

namespace chemo {

enum class FluxScheme {
  // F = -u_up grad(u - chi v), mobility upwinded on the potential difference. Steady states
  // are exact discrete equilibria and the semi-discrete energy is non-increasing.
  PotentialUpwind,
  // F = -grad(u^2/2) + chi u_up grad v with arithmetic-mean diffusion mobility.
  Split,
};

enum class TimeStepping {
  Explicit,  // forward Euler under the positivity bound
  // Mobility frozen at t^n, u and v advanced together by one sparse solve. Steps are
  // rejected (dt halved) on negative cells or on a rise of the discrete energy.
  LinearlyImplicit,
};

struct EvolveConfig {
  ModelParams params;
  int cells = 400;
  double dt_initial = 1e-3;
  double t_end = 100;
  double cfl = 0.45;
  int snapshot_every = 1000;
  FluxScheme scheme = FluxScheme::PotentialUpwind;
  TimeStepping stepping = TimeStepping::Explicit;
  double dt_max = 0.05;      // cap for the linearly implicit stepper
  bool parabolic_v = false;  // implicit v-step instead of the elliptic solve
  // Stop early once max|u^{n+1} - u^n| / dt <= steady_tol * max(1, |u|_inf); 0 disables.
  double steady_tol = 0;
  long max_steps = 200'000'000;
};

struct EvolveState {
  double t = 0;
  std::vector<double> u;  // cell averages
  std::vector<double> v;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<RadialField> fields;
  std::vector<double> energies;
  std::vector<double> mass_drift;
  long steps = 0;
  long rejected_steps = 0;
  double max_energy_increase = 0;  // largest per-step rise of the discrete energy, relative
  bool reached_steady = false;
  EvolveState final_state;
};

class Evolver {
 public:
  explicit Evolver(const EvolveConfig& cfg);

  const EvolveConfig& config() const { return cfg_; }
  const std::vector<double>& centers() const { return rc_; }
  const std::vector<double>& volumes() const { return vol_; }

  // Cell averages of a sampled profile (linear interpolation at cell centres), rescaled
  // to mass M; v is filled consistently.
  EvolveState initial_state(const RadialField& initial) const;
  EvolveState constant_state() const;

  ~Evolver();
  Evolver(const Evolver&) = delete;
  Evolver& operator=(const Evolver&) = delete;

  // One step of size dt with the configured stepping; throws DomainError if a cell would
  // turn negative.
  EvolveState step(const EvolveState& s, double dt) const;

  // Largest dt keeping the explicit update nonnegative, scaled by cfl.
  double stable_dt(const EvolveState& s) const;

  Trajectory run(const EvolveState& initial) const;

  double mass(const std::vector<double>& u) const;
  double energy(const EvolveState& s) const;
  RadialField field(const EvolveState& s) const;

  // v with lap v - v + u = 0 on the grid.
  std::vector<double> solve_v(const std::vector<double>& u) const;

 private:
  struct Mobility {
    std::vector<double> diffusion, chemotaxis;  // per interior face
  };
  Mobility mobility(const EvolveState& s) const;
  std::vector<double> fluxes(const EvolveState& s) const;
  EvolveState explicit_step(const EvolveState& s, double dt) const;
  EvolveState implicit_step(const EvolveState& s, double dt) const;
  std::vector<double> parabolic_v_step(const std::vector<double>& v, const std::vector<double>& u,
                                       double dt) const;

  EvolveConfig cfg_;
  double dr_ = 0;
  std::vector<double> rc_, vol_, area_;  // centres, cell areas, face lengths (2 pi r)
  struct Solvers;
  std::unique_ptr<Solvers> solvers_;
};

Trajectory run(const EvolveConfig& cfg, const RadialField& initial);

// Initial data on [0, R], sampled at n + 1 points (mass is fixed later by initial_state).
RadialField perturbed_constant_profile(double R, double amplitude = 0.01, int n = 2000);
RadialField center_biased_profile(double R, int n = 2000);

// Nearest closed-form steady state to a grid state: constant, inner_ring, outer_ring or
// volcano, compared pointwise at cell centres relative to max(1, |u|_inf). Families that
// cannot be assembled for the run's parameters are skipped.
struct SteadyMatch {
  std::string label = "none";
  double distance = INFINITY;  // relative sup distance to the best candidate
};
SteadyMatch nearest_steady_state(const Evolver& ev, const EvolveState& s);

}  // namespace chemo
