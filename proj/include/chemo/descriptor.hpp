#pragma once

// JSON descriptor of a PiecewiseRadialSolution. Keys keep insertion order and doubles are
// written in shortest round-trip form, so serialize -> parse -> serialize is byte-identical.

#include <string>
#include <utility>
#include <vector>

#include "chemo/solution.hpp"
#include "chemo/verify.hpp"

namespace chemo {

inline constexpr int kDescriptorSchema = 1;

std::string to_descriptor(const PiecewiseRadialSolution& s);

struct ParsedDescriptor {
  PiecewiseRadialSolution solution;
  std::vector<double> declared_knots;
};

// Throws ParseError naming the offending line/column or field path.
ParsedDescriptor parse_descriptor(const std::string& text);

// verify() on the parsed solution plus agreement of the declared knot list with the
// segment boundaries.
VerificationReport verify_descriptor(const ParsedDescriptor& d, int grid_size = 10000,
                                     const VerifyTolerances& tol = {});

// Human-readable expressions for the u and v parts of a segment form.
std::pair<std::string, std::string> form_expressions(Form f);

}  // namespace chemo
