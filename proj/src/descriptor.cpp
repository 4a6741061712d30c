#include "chemo/descriptor.hpp"

#include <cmath>
#include <limits>

#include "json.hpp"

#include "chemo/errors.hpp"

namespace chemo {

using json = nlohmann::ordered_json;

std::pair<std::string, std::string> form_expressions(Form f) {
  switch (f) {
    case Form::Flat:
      return {"u_level", "v_level"};
    case Form::BesselMode:
      return {"u_level + chi eps J0(kappa r)", "v_level + eps J0(kappa r)"};
    case Form::CylinderMode:
      return {"u_level + chi eps Z0(r; A)", "v_level + eps Z0(r; A)"};
    case Form::JCap:
      return {"amp (J0(w r) - J0(w rho))", "amp (J0(w r)/chi - J0(w rho))"};
    case Form::SCap:
      return {"amp (Z0(r; A) - Z0(A - rho; A))", "amp (Z0(r; A)/chi - Z0(A - rho; A))"};
    case Form::IGap:
      return {"0", "amp I0(r)"};
    case Form::KGap:
      return {"0", "amp K0(r)"};
    case Form::TGap:
      return {"0", "amp (K1(A) I0(r) + I1(A) K0(r))"};
    case Form::LogCap:
      return {"amp J0(sqrt(chi) r)", "amp J0(sqrt(chi) r)/chi"};
    case Form::LogGap:
      return {"0", "-c log(r / r_ref)"};
  }
  return {"", ""};
}

namespace {

json radius(double r) { return std::isinf(r) ? json(nullptr) : json(r); }

std::string_view construction(Family f) {
  switch (f) {
    case Family::Constant: return "uniform state u = M / area, v = u";
    case Family::BifurcationDisk: return "constant plus J0 mode at chi = chi_k";
    case Family::InnerRing: return "J0 cap on [0, r1) matched to T0 gap";
    case Family::OuterRing: return "I0 gap matched to anchored cylinder cap at the wall";
    case Family::AnnulusDecreasing: return "anchored cylinder cap at the inner wall matched to T0 gap";
    case Family::AnnulusIncreasing: return "T0 gap from the inner wall matched to cylinder cap at the outer wall";
    case Family::AnnulusBifurcation: return "constant plus anchored cylinder mode at chi = chi_ab";
    case Family::MexicanHat: return "J0 cap, T0 gap centred at R0, cylinder cap at the wall; masses split by the cap weights";
    case Family::VolcanoAttached: return "I0 gap and cylinder cap anchored at R0_upper reaching the wall";
    case Family::VolcanoDetached: return "I0 gap, cylinder cap centred at R0*, T0 gap to the wall";
    case Family::AiryHat: return "J0 cap, T0 gap, cylinder cap anchored at the next ratio-matching radius";
    case Family::AiryVolcano: return "I0 gap and cylinder cap anchored at the k0-th ratio-matching radius";
    case Family::WholeSpace: return "J0 cap on [0, r*) with K0 exterior, truncated";
    case Family::LogPotential: return "J0(sqrt(chi) r) cap with logarithmic exterior potential";
  }
  return "";
}

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw ParseError("descriptor field '" + path + "': " + what);
}

const json& need(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) field_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) field_error(path + "." + key, "missing");
  return *it;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) field_error(path, "expected a number");
  return j.get<double>();
}

double radius_value(const json& j, const std::string& path) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return number(j, path);
}

int integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) field_error(path, "expected an integer");
  return j.get<int>();
}

std::pair<double, double> interval(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) field_error(path, "expected [lo, hi]");
  return {radius_value(j[0], path + "[0]"), radius_value(j[1], path + "[1]")};
}

}  // namespace

std::string to_descriptor(const PiecewiseRadialSolution& s) {
  json d;
  d["schema_version"] = kDescriptorSchema;
  d["kind"] = std::string(to_string(s.tag.family));
  d["params"] = {{"chi", s.params.chi}, {"R", radius(s.params.R)}, {"M", s.params.M}};
  d["tag"] = {{"k", s.tag.k},         {"k0", s.tag.k0}, {"epsilon", s.tag.epsilon},
              {"R0", s.tag.R0},       {"a", s.tag.a},   {"b", s.tag.b}};
  json knots = json::array();
  for (double k : s.knots()) knots.push_back(k);
  d["knots"] = knots;
  json segs = json::array();
  for (const auto& seg : s.segments) {
    auto [uf, vf] = form_expressions(seg.form);
    json c = json::object();
    for (const auto& co : seg.coeffs) c[co.name] = co.value;
    segs.push_back({{"interval", {seg.lo, seg.hi}},
                    {"form", std::string(to_string(seg.form))},
                    {"u_form", uf},
                    {"v_form", vf},
                    {"coefficients", c}});
  }
  d["segments"] = segs;
  json comps = json::array();
  for (const auto& c : s.components)
    comps.push_back({{"interval", {c.lo, c.hi}}, {"lambda", c.lambda}, {"mass", c.mass}});
  d["components"] = comps;
  d["provenance"] = {{"construction", std::string(construction(s.tag.family))},
                     {"lambda", "u - chi v on each support component"},
                     {"energy", "(1/chi) sum lambda_i m_i"}};
  return d.dump(2) + "\n";
}

ParsedDescriptor parse_descriptor(const std::string& text) {
  json d;
  try {
    d = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("descriptor is not valid JSON: ") + e.what());
  }
  ParsedDescriptor out;
  auto& s = out.solution;
  const int schema = integer(need(d, "schema_version", "$"), "$.schema_version");
  if (schema != kDescriptorSchema)
    field_error("$.schema_version", "unsupported version " + std::to_string(schema));
  const json& kind = need(d, "kind", "$");
  if (!kind.is_string()) field_error("$.kind", "expected a string");
  s.tag.family = family_from_string(kind.get<std::string>());

  const json& p = need(d, "params", "$");
  s.params.chi = number(need(p, "chi", "$.params"), "$.params.chi");
  s.params.R = radius_value(need(p, "R", "$.params"), "$.params.R");
  s.params.M = number(need(p, "M", "$.params"), "$.params.M");

  const json& t = need(d, "tag", "$");
  s.tag.k = integer(need(t, "k", "$.tag"), "$.tag.k");
  s.tag.k0 = integer(need(t, "k0", "$.tag"), "$.tag.k0");
  s.tag.epsilon = number(need(t, "epsilon", "$.tag"), "$.tag.epsilon");
  s.tag.R0 = number(need(t, "R0", "$.tag"), "$.tag.R0");
  s.tag.a = number(need(t, "a", "$.tag"), "$.tag.a");
  s.tag.b = number(need(t, "b", "$.tag"), "$.tag.b");

  const json& knots = need(d, "knots", "$");
  if (!knots.is_array()) field_error("$.knots", "expected an array");
  for (std::size_t i = 0; i < knots.size(); ++i)
    out.declared_knots.push_back(number(knots[i], "$.knots[" + std::to_string(i) + "]"));

  const json& segs = need(d, "segments", "$");
  if (!segs.is_array() || segs.empty()) field_error("$.segments", "expected a non-empty array");
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const std::string path = "$.segments[" + std::to_string(i) + "]";
    Segment seg;
    std::tie(seg.lo, seg.hi) = interval(need(segs[i], "interval", path), path + ".interval");
    const json& form = need(segs[i], "form", path);
    if (!form.is_string()) field_error(path + ".form", "expected a string");
    try {
      seg.form = form_from_string(form.get<std::string>());
    } catch (const ParseError& e) {
      field_error(path + ".form", e.what());
    }
    const json& co = need(segs[i], "coefficients", path);
    if (!co.is_object()) field_error(path + ".coefficients", "expected an object");
    for (auto it = co.begin(); it != co.end(); ++it)
      seg.coeffs.push_back({it.key(), number(it.value(), path + ".coefficients." + it.key())});
    if (static_cast<int>(seg.coeffs.size()) != coefficient_count(seg.form))
      field_error(path + ".coefficients", "form '" + form.get<std::string>() + "' takes " +
                                              std::to_string(coefficient_count(seg.form)) +
                                              " coefficients");
    s.segments.push_back(std::move(seg));
  }

  const json& comps = need(d, "components", "$");
  if (!comps.is_array()) field_error("$.components", "expected an array");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string path = "$.components[" + std::to_string(i) + "]";
    Component c;
    std::tie(c.lo, c.hi) = interval(need(comps[i], "interval", path), path + ".interval");
    c.lambda = number(need(comps[i], "lambda", path), path + ".lambda");
    c.mass = number(need(comps[i], "mass", path), path + ".mass");
    s.components.push_back(c);
  }
  return out;
}

VerificationReport verify_descriptor(const ParsedDescriptor& d, int grid_size,
                                     const VerifyTolerances& tol) {
  VerificationReport rep = verify(d.solution, grid_size, tol);
  const std::vector<double> actual = d.solution.knots();
  if (actual.size() != d.declared_knots.size()) {
    rep.failures.push_back("knots: " + std::to_string(d.declared_knots.size()) + " declared, " +
                           std::to_string(actual.size()) + " segment boundaries");
  } else {
    for (std::size_t i = 0; i < actual.size(); ++i)
      if (actual[i] != d.declared_knots[i])
        rep.failures.push_back("knots: declared knot " + std::to_string(i) +
                               " does not match the segment boundary");
  }
  return rep;
}

}  // namespace chemo
