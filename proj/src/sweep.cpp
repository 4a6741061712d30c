#include "chemo/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "chemo/energy.hpp"
#include "chemo/errors.hpp"

namespace chemo {

std::string_view to_string(Observable o) {
  switch (o) {
    case Observable::SupNorm: return "supnorm";
    case Observable::Support: return "support";
    case Observable::Energy: return "energy";
    case Observable::Knots: return "knots";
  }
  return "";
}

Observable observable_from_string(std::string_view s) {
  for (Observable o : {Observable::SupNorm, Observable::Support, Observable::Energy, Observable::Knots})
    if (to_string(o) == s) return o;
  throw ParseError("unknown observable '" + std::string(s) + "' (expected supnorm, support, energy, knots)");
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0 ? 0.0 : x);
  return buf;
}

double sup_norm(const PiecewiseRadialSolution& s) {
  constexpr int n = 2000;
  double m = 0;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const Segment& seg = s.segments[i];
    if (!seg.supports_density()) continue;
    for (int j = 0; j <= n; ++j) {
      const double r = seg.lo + (seg.hi - seg.lo) * j / n;
      m = std::max(m, s.eval_segment(i, r).u);
    }
  }
  return m;
}

double support_length(const PiecewiseRadialSolution& s) {
  double len = 0;
  for (const auto& c : s.components) len += c.hi - c.lo;
  return len;
}

std::string observe(const PiecewiseRadialSolution& s, Observable o) {
  switch (o) {
    case Observable::SupNorm: return format_number(sup_norm(s));
    case Observable::Support: return format_number(support_length(s));
    case Observable::Energy: return format_number(energy(s).total);
    case Observable::Knots: {
      std::string out;
      for (double k : s.knots()) out += (out.empty() ? "" : ";") + format_number(k);
      return out;
    }
  }
  return "";
}

std::vector<double> chi_grid(const SweepSpec& spec) {
  if (spec.points < 1) throw InvalidInput("sweep needs at least one point");
  if (!(spec.chi_max >= spec.chi_min)) throw InvalidInput("sweep needs chi_max >= chi_min");
  if (spec.log_spacing && !(spec.chi_min > 0)) throw InvalidInput("log spacing needs chi_min > 0");
  std::vector<double> g(spec.points);
  for (int i = 0; i < spec.points; ++i) {
    const double t = spec.points == 1 ? 0.0 : double(i) / (spec.points - 1);
    g[i] = spec.log_spacing ? std::exp(std::log(spec.chi_min) + t * std::log(spec.chi_max / spec.chi_min))
                            : spec.chi_min + t * (spec.chi_max - spec.chi_min);
  }
  g.back() = spec.chi_max;
  return g;
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
  const std::vector<double> grid = chi_grid(spec);
  std::vector<SweepRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < grid.size();) {
      SweepRow& row = rows[i];
      row.chi = grid[i];
      SolveRequest req = spec.request;
      req.params.chi = grid[i];
      try {
        row.value = observe(build(req), spec.observable);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  const int jobs = std::clamp<int>(spec.jobs, 1, static_cast<int>(grid.size()));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace chemo
