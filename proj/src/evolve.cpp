#include "chemo/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include "chemo/assembler.hpp"
#include "chemo/errors.hpp"

namespace chemo {

namespace {

constexpr double pi = std::numbers::pi;

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;

Vec to_eigen(const std::vector<double>& x) { return Eigen::Map<const Vec>(x.data(), x.size()); }
std::vector<double> from_eigen(const Vec& x) { return {x.data(), x.data() + x.size()}; }

}  // namespace

struct Evolver::Solvers {
  SpMat stiffness;  // -div grad with zero-flux walls, weighted by face lengths
  SpMat mass;       // diagonal cell areas
  Eigen::SimplicialLDLT<SpMat> elliptic;
};

Evolver::~Evolver() = default;

Evolver::Evolver(const EvolveConfig& cfg) : cfg_(cfg), solvers_(std::make_unique<Solvers>()) {
  if (cfg.cells < 100) throw InvalidInput("evolve: cells must be at least 100");
  if (!(cfg.cfl > 0 && cfg.cfl < 1)) throw InvalidInput("evolve: cfl must lie in (0, 1)");
  if (cfg.params.whole_space()) throw InvalidInput("evolve: needs a bounded disk");
  if (!(cfg.params.R > 0 && cfg.params.M > 0 && cfg.params.chi >= 0))
    throw InvalidInput("evolve: need R > 0, M > 0, chi >= 0");
  if (!(cfg.t_end >= 0 && cfg.dt_initial > 0 && cfg.dt_max > 0 && cfg.snapshot_every > 0))
    throw InvalidInput("evolve: need t_end >= 0, dt_initial > 0, dt_max > 0, snapshot_every > 0");
  const int n = cfg.cells;
  dr_ = cfg.params.R / n;
  for (int i = 0; i < n; ++i) {
    const double a = i * dr_, b = (i + 1) * dr_;
    rc_.push_back(0.5 * (a + b));
    vol_.push_back(pi * (b * b - a * a));
  }
  for (int i = 0; i <= n; ++i) area_.push_back(2 * pi * i * dr_);

  std::vector<Eigen::Triplet<double>> k, m;
  for (int i = 0; i + 1 < n; ++i) {
    const double g = area_[i + 1] / dr_;
    k.emplace_back(i, i, g);
    k.emplace_back(i + 1, i + 1, g);
    k.emplace_back(i, i + 1, -g);
    k.emplace_back(i + 1, i, -g);
  }
  for (int i = 0; i < n; ++i) m.emplace_back(i, i, vol_[i]);
  solvers_->stiffness.resize(n, n);
  solvers_->stiffness.setFromTriplets(k.begin(), k.end());
  solvers_->mass.resize(n, n);
  solvers_->mass.setFromTriplets(m.begin(), m.end());
  solvers_->elliptic.compute(SpMat(solvers_->stiffness + solvers_->mass));
}

std::vector<double> Evolver::solve_v(const std::vector<double>& u) const {
  const Vec rhs = to_eigen(vol_).cwiseProduct(to_eigen(u));
  return from_eigen(solvers_->elliptic.solve(rhs));
}

std::vector<double> Evolver::parabolic_v_step(const std::vector<double>& v,
                                              const std::vector<double>& u, double dt) const {
  Eigen::SimplicialLDLT<SpMat> solver(
      SpMat(solvers_->stiffness + solvers_->mass * (1 + 1 / dt)));
  const Vec rhs = to_eigen(vol_).cwiseProduct(to_eigen(u) + to_eigen(v) / dt);
  return from_eigen(solver.solve(rhs));
}

double Evolver::mass(const std::vector<double>& u) const {
  double m = 0;
  for (std::size_t i = 0; i < u.size(); ++i) m += vol_[i] * u[i];
  return m;
}

double Evolver::energy(const EvolveState& s) const {
  const double chi = cfg_.params.chi;
  double e = 0;
  for (std::size_t i = 0; i < s.u.size(); ++i) {
    e += vol_[i] * (s.u[i] * s.u[i] / chi + s.v[i] * s.v[i] - 2 * s.u[i] * s.v[i]);
    if (i + 1 < s.u.size()) {
      const double grad = (s.v[i + 1] - s.v[i]) / dr_;
      e += area_[i + 1] * dr_ * grad * grad;
    }
  }
  return e;
}

EvolveState Evolver::initial_state(const RadialField& f) const {
  if (f.r.size() < 2 || f.r.size() != f.u.size())
    throw InvalidInput("evolve: initial profile needs matching r and u samples");
  EvolveState s;
  for (double r : rc_) {
    auto it = std::lower_bound(f.r.begin(), f.r.end(), r);
    double val;
    if (it == f.r.begin()) {
      val = f.u.front();
    } else if (it == f.r.end()) {
      val = f.u.back();
    } else {
      const std::size_t j = it - f.r.begin();
      const double t = (r - f.r[j - 1]) / (f.r[j] - f.r[j - 1]);
      val = (1 - t) * f.u[j - 1] + t * f.u[j];
    }
    if (!(val >= 0)) throw InvalidInput("evolve: initial density must be nonnegative");
    s.u.push_back(val);
  }
  const double m = mass(s.u);
  if (!(m > 0)) throw InvalidInput("evolve: initial density has zero mass");
  for (double& x : s.u) x *= cfg_.params.M / m;
  s.v = solve_v(s.u);
  return s;
}

EvolveState Evolver::constant_state() const {
  EvolveState s;
  const double R = cfg_.params.R;
  s.u.assign(rc_.size(), cfg_.params.M / (pi * R * R));
  s.v = solve_v(s.u);
  return s;
}

// Face mobilities for face i + 1/2. PotentialUpwind uses one upwinded mobility for the
// whole potential u - chi v; Split uses the arithmetic mean for u^2/2 diffusion and the
// upwind cell (by the sign of the v-gradient) for the drift.
Evolver::Mobility Evolver::mobility(const EvolveState& s) const {
  const double chi = cfg_.params.chi;
  const std::size_t n = s.u.size();
  Mobility m{std::vector<double>(n - 1), std::vector<double>(n - 1)};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (cfg_.scheme == FluxScheme::PotentialUpwind) {
      const double dp = (s.u[i + 1] - chi * s.v[i + 1]) - (s.u[i] - chi * s.v[i]);
      m.diffusion[i] = m.chemotaxis[i] = dp > 0 ? s.u[i + 1] : s.u[i];
    } else {
      m.diffusion[i] = 0.5 * (s.u[i] + s.u[i + 1]);
      m.chemotaxis[i] = s.v[i + 1] > s.v[i] ? s.u[i] : s.u[i + 1];
    }
  }
  return m;
}

// Outward flux through each interior face (indexed by the left cell).
std::vector<double> Evolver::fluxes(const EvolveState& s) const {
  const double chi = cfg_.params.chi;
  const Mobility m = mobility(s);
  std::vector<double> F(s.u.size(), 0);
  for (std::size_t i = 0; i + 1 < s.u.size(); ++i) {
    const double g = area_[i + 1] / dr_;
    F[i] = -g * (m.diffusion[i] * (s.u[i + 1] - s.u[i]) - chi * m.chemotaxis[i] * (s.v[i + 1] - s.v[i]));
  }
  return F;
}

double Evolver::stable_dt(const EvolveState& s) const {
  const double chi = cfg_.params.chi;
  const std::size_t n = s.u.size();
  double rate = 0, umax = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double out = 0;
    for (int side : {-1, 1}) {
      const long j = static_cast<long>(i) + side;
      if (j < 0 || j >= static_cast<long>(n)) continue;
      const double g = area_[side > 0 ? i + 1 : i] / dr_;
      if (cfg_.scheme == FluxScheme::PotentialUpwind) {
        out += g * std::abs((s.u[j] - chi * s.v[j]) - (s.u[i] - chi * s.v[i]));
      } else {
        out += g * (0.5 * (s.u[i] + s.u[j]) + chi * std::abs(s.v[j] - s.v[i]));
      }
    }
    rate = std::max(rate, out / vol_[i]);
    umax = std::max(umax, s.u[i]);
  }
  // The diffusive limit keeps the update stable where the potential is already flat.
  const double diff = umax > 0 ? dr_ * dr_ / (2 * umax) : INFINITY;
  const double adv = rate > 0 ? 1 / rate : INFINITY;
  return cfg_.cfl * std::min(diff, adv);
}

namespace {

// Round-off undershoot on an emptying cell is clipped; anything larger rejects the step.
void check_nonnegative(std::vector<double>& u, const std::vector<double>& before) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] >= 0) continue;
    if (u[i] > -1e-12 * std::max(1.0, before[i])) {
      u[i] = 0;
    } else {
      throw DomainError("evolve: step would make a cell negative");
    }
  }
}

}  // namespace

EvolveState Evolver::explicit_step(const EvolveState& s, double dt) const {
  const std::vector<double> F = fluxes(s);
  EvolveState out;
  out.t = s.t + dt;
  out.u = s.u;
  const std::size_t n = s.u.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double in = i > 0 ? F[i - 1] : 0;
    const double o = i + 1 < n ? F[i] : 0;
    out.u[i] += dt * (in - o) / vol_[i];
  }
  check_nonnegative(out.u, s.u);
  out.v = cfg_.parabolic_v ? parabolic_v_step(s.v, out.u, dt) : solve_v(out.u);
  return out;
}

// Unknowns interleaved as (u_0, v_0, u_1, v_1, ...):
//   V u/dt + sum_faces g [md (u_i - u_j) - chi mc (v_i - v_j)] = V u^n/dt
//   sum_faces g (v_i - v_j) + V v - V u = 0     (+ V v/dt on both sides when parabolic)
EvolveState Evolver::implicit_step(const EvolveState& s, double dt) const {
  const double chi = cfg_.params.chi;
  const int n = static_cast<int>(s.u.size());
  const Mobility m = mobility(s);
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(12 * n);
  Vec rhs(2 * n);
  const double vdt = cfg_.parabolic_v ? 1 / dt : 0;
  for (int i = 0; i < n; ++i) {
    const int ui = 2 * i, vi = 2 * i + 1;
    t.emplace_back(ui, ui, vol_[i] / dt);
    t.emplace_back(vi, vi, vol_[i] * (1 + vdt));
    t.emplace_back(vi, ui, -vol_[i]);
    rhs[ui] = vol_[i] * s.u[i] / dt;
    rhs[vi] = vol_[i] * s.v[i] * vdt;
  }
  for (int i = 0; i + 1 < n; ++i) {
    const double g = area_[i + 1] / dr_;
    const double gd = g * m.diffusion[i], gc = g * chi * m.chemotaxis[i];
    const int a = 2 * i, b = 2 * (i + 1);
    t.emplace_back(a, a, gd);
    t.emplace_back(a, b, -gd);
    t.emplace_back(b, b, gd);
    t.emplace_back(b, a, -gd);
    t.emplace_back(a, a + 1, -gc);
    t.emplace_back(a, b + 1, gc);
    t.emplace_back(b, b + 1, -gc);
    t.emplace_back(b, a + 1, gc);
    t.emplace_back(a + 1, a + 1, g);
    t.emplace_back(a + 1, b + 1, -g);
    t.emplace_back(b + 1, b + 1, g);
    t.emplace_back(b + 1, a + 1, -g);
  }
  SpMat A(2 * n, 2 * n);
  A.setFromTriplets(t.begin(), t.end());
  Eigen::SparseLU<SpMat> lu;
  lu.compute(A);
  if (lu.info() != Eigen::Success) throw DomainError("evolve: implicit system is singular");
  const Vec x = lu.solve(rhs);
  EvolveState out;
  out.t = s.t + dt;
  out.u.resize(n);
  out.v.resize(n);
  for (int i = 0; i < n; ++i) {
    out.u[i] = x[2 * i];
    out.v[i] = x[2 * i + 1];
  }
  check_nonnegative(out.u, s.u);
  return out;
}

EvolveState Evolver::step(const EvolveState& s, double dt) const {
  return cfg_.stepping == TimeStepping::Explicit ? explicit_step(s, dt) : implicit_step(s, dt);
}

RadialField Evolver::field(const EvolveState& s) const {
  RadialField f;
  f.r = rc_;
  f.u = s.u;
  f.v = s.v;
  const std::size_t n = s.u.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = i > 0 ? i - 1 : 0, b = std::min(i + 1, n - 1);
    f.du.push_back((s.u[b] - s.u[a]) / (rc_[b] - rc_[a]));
    f.dv.push_back((s.v[b] - s.v[a]) / (rc_[b] - rc_[a]));
  }
  return f;
}

Trajectory Evolver::run(const EvolveState& initial) const {
  Trajectory tr;
  const double M = cfg_.params.M, R = cfg_.params.R;
  const double ubar = M / (pi * R * R);
  const double m0 = mass(initial.u);
  if (std::abs(m0 - M) > 1e-10 * M) throw InvalidInput("evolve: initial mass differs from M");
  const bool implicit = cfg_.stepping == TimeStepping::LinearlyImplicit;

  EvolveState s = initial;
  double e = energy(s);
  auto snapshot = [&] {
    tr.times.push_back(s.t);
    tr.fields.push_back(field(s));
    tr.energies.push_back(e);
    tr.mass_drift.push_back(std::abs(mass(s.u) - m0) / m0);
  };
  snapshot();
  double dt = cfg_.dt_initial;
  while (s.t < cfg_.t_end && tr.steps < cfg_.max_steps) {
    dt = implicit ? std::min({dt * 1.25, cfg_.dt_max, cfg_.t_end - s.t})
                  : std::min({dt * 1.1, stable_dt(s), cfg_.t_end - s.t});
    EvolveState next;
    double en = 0;
    for (;;) {
      try {
        next = step(s, dt);
        en = energy(next);
        // The implicit stepper is only accepted when it does not raise the energy.
        if (implicit && en > e + 1e-9 * std::abs(e)) throw DomainError("evolve: energy rise");
        break;
      } catch (const DomainError&) {
        dt *= 0.5;
        ++tr.rejected_steps;
        if (dt < 1e-14 * std::max(1.0, cfg_.t_end)) throw DomainError("evolve: time step underflow");
      }
    }
    if (en > e) tr.max_energy_increase = std::max(tr.max_energy_increase, (en - e) / std::abs(e));
    double change = 0, umax = 0;
    for (std::size_t i = 0; i < s.u.size(); ++i) {
      change = std::max(change, std::abs(next.u[i] - s.u[i]));
      umax = std::max(umax, next.u[i]);
    }
    if (umax > 1e6 * ubar) throw DomainError("evolve: blow-up guard tripped (|u|_inf > 1e6 ubar)");
    s = std::move(next);
    e = en;
    ++tr.steps;
    if (tr.steps % cfg_.snapshot_every == 0) snapshot();
    if (cfg_.steady_tol > 0 && change / dt <= cfg_.steady_tol * std::max(1.0, umax)) {
      tr.reached_steady = true;
      break;
    }
  }
  if (tr.times.back() != s.t) snapshot();
  tr.final_state = s;
  return tr;
}

Trajectory run(const EvolveConfig& cfg, const RadialField& initial) {
  Evolver ev(cfg);
  return ev.run(ev.initial_state(initial));
}

RadialField perturbed_constant_profile(double R, double amplitude, int n) {
  RadialField f;
  for (int i = 0; i <= n; ++i) {
    const double r = R * i / n;
    f.r.push_back(r);
    f.u.push_back(1 + amplitude * std::cos(pi * r / R));
  }
  return f;
}

RadialField center_biased_profile(double R, int n) {
  RadialField f;
  for (int i = 0; i <= n; ++i) {
    const double r = R * i / n;
    f.r.push_back(r);
    f.u.push_back(std::exp(-r * r / 4));
  }
  return f;
}

SteadyMatch nearest_steady_state(const Evolver& ev, const EvolveState& s) {
  const ModelParams& p = ev.config().params;
  const auto& rc = ev.centers();
  const double scale = std::max(1.0, *std::max_element(s.u.begin(), s.u.end()));
  SteadyMatch best;
  auto consider = [&](const char* label, auto&& make) {
    try {
      const PiecewiseRadialSolution sol = make();
      double d = 0;
      for (std::size_t i = 0; i < rc.size(); ++i) d = std::max(d, std::abs(s.u[i] - sol.u(rc[i])));
      d /= scale;
      if (d < best.distance) best = {label, d};
    } catch (const Error&) {
    }
  };
  consider("constant", [&] { return constant(p); });
  consider("inner_ring", [&] { return inner_ring(p); });
  consider("outer_ring", [&] { return outer_ring(p); });
  consider("volcano", [&] { return volcano(p); });
  return best;
}

}  // namespace chemo
