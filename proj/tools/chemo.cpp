// Command-line front end: solve, sweep, verify, evolve.
//
// Exit status: 0 success, 1 invariant failure, 2 admissibility error, 3 parse error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "chemo/catalog.hpp"
#include "chemo/descriptor.hpp"
#include "chemo/energy.hpp"
#include "chemo/errors.hpp"
#include "chemo/evolve.hpp"
#include "chemo/sweep.hpp"
#include "chemo/verify.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace chemo;

namespace {

enum Exit { Ok = 0, Invariant = 1, Admissibility = 2, Parse = 3 };

constexpr double kDefaultMass = 25 * std::numbers::pi;

struct SolveArgs {
  std::string kind;
  double chi = 2, R = 5, M = kDefaultMass;
  std::optional<double> R0, epsilon;
  int k = 1, k0 = 3;
  double a = 1, b = 5;
};

void add_model_flags(CLI::App* cmd, SolveArgs& a) {
  cmd->add_option("--kind", a.kind, "solution family")->required()->check(CLI::IsMember(catalog_kinds()));
  cmd->add_option("--R", a.R, "disk radius")->capture_default_str();
  cmd->add_option("--M", a.M, "total mass")->capture_default_str();
  cmd->add_option("--R0", a.R0, "hat centre");
  cmd->add_option("--epsilon", a.epsilon, "bifurcation amplitude");
  cmd->add_option("--k", a.k, "bifurcation index")->capture_default_str();
  cmd->add_option("--k0", a.k0, "Airy order")->capture_default_str();
  cmd->add_option("--a", a.a, "annulus inner radius")->capture_default_str();
  cmd->add_option("--b", a.b, "annulus outer radius")->capture_default_str();
}

SolveRequest to_request(const SolveArgs& a) {
  SolveRequest r;
  r.kind = a.kind;
  r.params.chi = a.chi;
  r.params.R = a.R;
  r.params.M = a.M;
  r.R0 = a.R0;
  r.epsilon = a.epsilon;
  r.k = a.k;
  r.k0 = a.k0;
  r.a = a.a;
  r.b = a.b;
  return r;
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string profile_csv(const PiecewiseRadialSolution& s, int samples) {
  const bool log = s.tag.family == Family::LogPotential;
  const double lo = s.domain_lo();
  const double hi = s.params.whole_space() ? s.components.back().hi + 10 : s.domain_hi();
  std::string out = log ? "r,u,v_r\n" : "r,u,v\n";
  for (int i = 0; i < samples; ++i) {
    const double r = samples == 1 ? lo : lo + (hi - lo) * i / (samples - 1);
    const PointValue p = s.eval(r);
    out += format_number(r) + "," + format_number(p.u) + "," + format_number(log ? p.dv : p.v) + "\n";
  }
  return out;
}

int cmd_solve(const SolveArgs& a, int samples, const std::string& out) {
  const PiecewiseRadialSolution s = build(to_request(a));
  if (samples < 2) throw InvalidInput("--samples must be at least 2");
  write_file(fs::path(out + ".json"), to_descriptor(s));
  write_file(fs::path(out + ".csv"), profile_csv(s, samples));
  std::printf("%s: chi = %s, %zu segments, %zu support components\n", std::string(to_string(s.tag.family)).c_str(),
              format_number(s.params.chi).c_str(), s.segments.size(), s.components.size());
  std::printf("wrote %s.json and %s.csv\n", out.c_str(), out.c_str());
  return Ok;
}

int cmd_sweep(const SolveArgs& a, SweepSpec spec, const std::string& observable, const std::string& out) {
  spec.request = to_request(a);
  spec.observable = observable_from_string(observable);
  const auto rows = sweep(spec);
  std::string csv = "chi," + observable + "\n";
  int failed = 0;
  for (const auto& row : rows) {
    csv += format_number(row.chi) + "," + row.value.value_or("") + "\n";
    if (!row.value) {
      ++failed;
      std::fprintf(stderr, "chi = %s: %s\n", format_number(row.chi).c_str(), row.error.c_str());
    }
  }
  if (out.empty())
    std::fputs(csv.c_str(), stdout);
  else
    write_file(out, csv);
  std::fprintf(stderr, "%zu points, %d without a solution\n", rows.size(), failed);
  return Ok;
}

json report_json(const fs::path& file, const ParsedDescriptor& d, const VerificationReport& v,
                 const StructureReport& st) {
  json j;
  j["descriptor"] = file.string();
  j["kind"] = std::string(to_string(d.solution.tag.family));
  j["passed"] = v.passed() && st.passed();
  j["u_max"] = v.u_max;
  j["u_min"] = v.u_min;
  j["v_residual_max"] = v.v_residual_max;
  j["flux_constancy"] = v.flux_constancy;
  j["mass_error"] = v.mass_error;
  j["component_mass_error"] = v.component_mass_error;
  double worst = 0;
  for (const auto& k : v.continuity) worst = std::max({worst, k.u, k.v, k.dv, k.d2v});
  j["continuity_max_jump"] = worst;
  j["boundary_left"] = v.boundary_left;
  j["boundary_right"] = v.boundary_right;
  j["structure"] = {{"components", st.components},
                    {"expected_components", st.expected_components},
                    {"dv_sign_changes", st.dv_sign_changes},
                    {"expected_dv_sign_changes", st.expected_dv_sign_changes}};
  json failures = json::array();
  for (const auto& f : v.failures) failures.push_back(f);
  for (const auto& f : st.failures) failures.push_back("structure: " + f);
  j["failures"] = failures;
  return j;
}

int cmd_verify(const std::string& file, std::string report, int grid) {
  const ParsedDescriptor d = parse_descriptor(read_file(file));
  const VerificationReport v = verify_descriptor(d, grid);
  StructureReport st;
  if (v.passed()) st = structure_check(d.solution);
  const json j = report_json(file, d, v, st);
  if (report.empty()) report = fs::path(file).replace_extension(".report.json").string();
  write_file(report, j.dump(2) + "\n");
  for (const auto& f : j["failures"]) std::printf("FAIL %s\n", f.get<std::string>().c_str());
  const bool ok = j["passed"].get<bool>();
  std::printf("%s: %s (report %s)\n", file.c_str(), ok ? "verified" : "invariant failure", report.c_str());
  return ok ? Ok : Invariant;
}

RadialField read_profile(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  std::getline(in, line);
  if (line.rfind("r,u", 0) != 0) throw ParseError(path + ":1: expected a header starting with 'r,u'");
  RadialField f;
  for (int n = 2; std::getline(in, line); ++n) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string r, u;
    std::getline(row, r, ',');
    std::getline(row, u, ',');
    try {
      f.r.push_back(std::stod(r));
      f.u.push_back(std::stod(u));
    } catch (const std::exception&) {
      throw ParseError(path + ":" + std::to_string(n) + ": expected numeric r,u");
    }
  }
  if (f.r.size() < 2) throw ParseError(path + ": need at least two rows");
  return f;
}

struct EvolveArgs {
  double chi = 2, R = 5, M = kDefaultMass;
  int cells = 400;
  double t_end = 40, dt = 1e-3, dt_max = 0.05;
  std::string scheme = "potential_upwind", stepping = "implicit", initial = "perturbed";
  bool parabolic_v = false;
  double steady_tol = 0;
  int snapshot_every = 200;
  double match_tol = 1e-3;
  std::string out = "evolve_out";
};

std::string snapshot_csv(const RadialField& f) {
  std::string out = "r,u,v\n";
  for (std::size_t i = 0; i < f.r.size(); ++i)
    out += format_number(f.r[i]) + "," + format_number(f.u[i]) + "," + format_number(f.v[i]) + "\n";
  return out;
}

int cmd_evolve(const EvolveArgs& a) {
  EvolveConfig cfg;
  cfg.params.chi = a.chi;
  cfg.params.R = a.R;
  cfg.params.M = a.M;
  cfg.cells = a.cells;
  cfg.t_end = a.t_end;
  cfg.dt_initial = a.dt;
  cfg.dt_max = a.dt_max;
  cfg.scheme = a.scheme == "split" ? FluxScheme::Split : FluxScheme::PotentialUpwind;
  cfg.stepping = a.stepping == "explicit" ? TimeStepping::Explicit : TimeStepping::LinearlyImplicit;
  cfg.parabolic_v = a.parabolic_v;
  cfg.steady_tol = a.steady_tol;
  cfg.snapshot_every = a.snapshot_every;
  if (!(cfg.params.chi > 0 && cfg.params.R > 0 && cfg.params.M > 0 && cfg.cells >= 4 && cfg.t_end > 0))
    throw InvalidInput("evolve needs chi, R, M, t-end > 0 and at least 4 cells");

  Evolver ev(cfg);
  EvolveState init;
  if (a.initial == "constant")
    init = ev.constant_state();
  else if (a.initial == "perturbed")
    init = ev.initial_state(perturbed_constant_profile(cfg.params.R));
  else if (a.initial == "center")
    init = ev.initial_state(center_biased_profile(cfg.params.R));
  else
    init = ev.initial_state(read_profile(a.initial));

  const Trajectory tr = ev.run(init);
  const fs::path dir(a.out);
  fs::create_directories(dir);
  for (std::size_t i = 0; i < tr.times.size(); ++i) {
    char name[64];
    std::snprintf(name, sizeof name, "profile_t%.6f.csv", tr.times[i]);
    write_file(dir / name, snapshot_csv(tr.fields[i]));
  }
  std::string energies = "t,energy,mass_drift\n";
  double drift = 0;
  for (std::size_t i = 0; i < tr.times.size(); ++i) {
    energies += format_number(tr.times[i]) + "," + format_number(tr.energies[i]) + "," +
                format_number(tr.mass_drift[i]) + "\n";
    drift = std::max(drift, std::abs(tr.mass_drift[i]));
  }
  write_file(dir / "energies.csv", energies);

  const SteadyMatch match = nearest_steady_state(ev, tr.final_state);
  const bool matched = match.distance <= a.match_tol;
  std::vector<std::string> failures;
  if (drift > 1e-10) failures.push_back("mass drift " + format_number(drift) + " exceeds 1e-10");
  if (tr.max_energy_increase > 1e-6)
    failures.push_back("energy rose by " + format_number(tr.max_energy_increase) + " of |E| in one step");

  json rep;
  rep["chi"] = cfg.params.chi;
  rep["R"] = cfg.params.R;
  rep["M"] = cfg.params.M;
  rep["cells"] = cfg.cells;
  rep["t_final"] = tr.final_state.t;
  rep["steps"] = tr.steps;
  rep["rejected_steps"] = tr.rejected_steps;
  rep["energy_final"] = tr.energies.back();
  rep["max_energy_increase"] = tr.max_energy_increase;
  rep["mass_drift"] = drift;
  rep["converged"] = matched ? match.label : "none";
  rep["nearest"] = {{"label", match.label}, {"distance", match.distance}};
  rep["failures"] = failures;
  write_file(dir / "report.json", rep.dump(2) + "\n");

  std::printf("t = %s after %ld steps, energy %s, mass drift %s\n", format_number(tr.final_state.t).c_str(),
              tr.steps, format_number(tr.energies.back()).c_str(), format_number(drift).c_str());
  if (matched)
    std::printf("converged: %s (distance %s)\n", match.label.c_str(), format_number(match.distance).c_str());
  else
    std::printf("converged: none (nearest %s at distance %s)\n", match.label.c_str(),
                format_number(match.distance).c_str());
  for (const auto& f : failures) std::printf("FAIL %s\n", f.c_str());
  return failures.empty() ? Ok : Invariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radial steady states of the quadratic-diffusion Keller-Segel model"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  int samples = 2000;
  std::string solve_out = "solution";
  auto* solve = app.add_subcommand("solve", "assemble one solution, write <out>.json and <out>.csv");
  add_model_flags(solve, solve_args);
  solve->add_option("--chi", solve_args.chi, "chemotactic sensitivity")->capture_default_str();
  solve->add_option("--samples", samples, "rows of the profile CSV")->capture_default_str();
  solve->add_option("--out", solve_out, "output path prefix")->capture_default_str();

  SolveArgs sweep_args;
  SweepSpec spec;
  std::string observable = "supnorm", sweep_out;
  auto* sw = app.add_subcommand("sweep", "observable of one family across a chi grid");
  add_model_flags(sw, sweep_args);
  sw->add_option("--chi-min", spec.chi_min)->required();
  sw->add_option("--chi-max", spec.chi_max)->required();
  sw->add_option("--points", spec.points)->capture_default_str();
  sw->add_flag("--log", spec.log_spacing, "logarithmic chi spacing");
  sw->add_option("--observable", observable)
      ->check(CLI::IsMember({"supnorm", "support", "energy", "knots"}))
      ->capture_default_str();
  sw->add_option("--jobs", spec.jobs, "concurrent points")->capture_default_str();
  sw->add_option("--out", sweep_out, "CSV path (stdout when omitted)");

  std::string verify_file, verify_report;
  int grid = 10000;
  auto* ver = app.add_subcommand("verify", "check a descriptor, write a JSON report");
  ver->add_option("descriptor", verify_file)->required();
  ver->add_option("--report", verify_report, "report path (default <descriptor>.report.json)");
  ver->add_option("--grid", grid, "sample points")->capture_default_str();

  EvolveArgs ea;
  auto* evo = app.add_subcommand("evolve", "time-march the radial system, write snapshots and a report");
  evo->add_option("--chi", ea.chi)->capture_default_str();
  evo->add_option("--R", ea.R)->capture_default_str();
  evo->add_option("--M", ea.M)->capture_default_str();
  evo->add_option("--cells", ea.cells)->capture_default_str();
  evo->add_option("--t-end", ea.t_end)->capture_default_str();
  evo->add_option("--dt", ea.dt, "initial step")->capture_default_str();
  evo->add_option("--dt-max", ea.dt_max, "step cap for implicit stepping")->capture_default_str();
  evo->add_option("--scheme", ea.scheme)
      ->check(CLI::IsMember({"potential_upwind", "split"}))
      ->capture_default_str();
  evo->add_option("--stepping", ea.stepping)->check(CLI::IsMember({"implicit", "explicit"}))->capture_default_str();
  evo->add_flag("--parabolic-v", ea.parabolic_v, "advance v parabolically instead of solving the elliptic problem");
  evo->add_option("--initial", ea.initial, "constant, perturbed, center, or a CSV with r,u columns")
      ->capture_default_str();
  evo->add_option("--steady-tol", ea.steady_tol, "stop once the relative rate of change falls below")
      ->capture_default_str();
  evo->add_option("--snapshot-every", ea.snapshot_every, "steps between snapshots")->capture_default_str();
  evo->add_option("--match-tol", ea.match_tol, "relative distance for the converged label")->capture_default_str();
  evo->add_option("--out", ea.out, "output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return Parse;
  }

  try {
    if (*solve) return cmd_solve(solve_args, samples, solve_out);
    if (*sw) return cmd_sweep(sweep_args, spec, observable, sweep_out);
    if (*ver) return cmd_verify(verify_file, verify_report, grid);
    if (*evo) return cmd_evolve(ea);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return Parse;
  } catch (const InvalidInput& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return Parse;
  } catch (const Error& e) {
    std::fprintf(stderr, "not admissible: %s\n", e.what());
    return Admissibility;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return Invariant;
  }
  return Ok;
}
