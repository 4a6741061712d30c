#include "doctest.h"

#include "common.hpp"

#include "chemo/errors.hpp"
#include "chemo/sweep.hpp"
#include "chemo/thresholds.hpp"

using namespace chemo;

namespace {

std::vector<double> values(const std::vector<SweepRow>& rows) {
  std::vector<double> out;
  for (const auto& r : rows) {
    REQUIRE(r.value);
    out.push_back(std::stod(*r.value));
  }
  return out;
}

SweepSpec spec_for(const std::string& kind, Observable o, double lo, double hi, int n, int jobs = 1) {
  SweepSpec s;
  s.request.kind = kind;
  s.request.params = testing::disk(2);
  s.chi_min = lo;
  s.chi_max = hi;
  s.points = n;
  s.observable = o;
  s.jobs = jobs;
  return s;
}

}  // namespace

TEST_SUITE("sweep") {
  TEST_CASE("inner ring peak rises and support shrinks") {
    const auto sup = values(sweep(spec_for("inner", Observable::SupNorm, 1.7, 200, 25, 4)));
    const auto len = values(sweep(spec_for("inner", Observable::Support, 1.7, 200, 25, 4)));
    for (std::size_t i = 1; i < sup.size(); ++i) {
      CHECK(sup[i] > sup[i - 1]);
      CHECK(len[i] < len[i - 1]);
    }
  }

  TEST_CASE("energy ordering across the sweep") {
    const double lo = chi_k(5, 1) * 1.01;
    const auto c = values(sweep(spec_for("constant", Observable::Energy, lo, 500, 20, 2)));
    const auto in = values(sweep(spec_for("inner", Observable::Energy, lo, 500, 20, 2)));
    const auto out = values(sweep(spec_for("outer", Observable::Energy, lo, 500, 20, 2)));
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(in[i] < out[i]);
      CHECK(out[i] < c[i]);
    }
  }

  TEST_CASE("failed points are empty cells") {
    const auto rows = sweep(spec_for("volcano", Observable::Knots, 2, 4, 3));
    CHECK_FALSE(rows[0].value);
    CHECK_FALSE(rows[0].error.empty());
    REQUIRE(rows[2].value);
    CHECK(rows[2].value->find(';') != std::string::npos);
  }

  TEST_CASE("results do not depend on the job count") {
    const auto a = sweep(spec_for("outer", Observable::SupNorm, 2, 50, 16, 1));
    const auto b = sweep(spec_for("outer", Observable::SupNorm, 2, 50, 16, 8));
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(*a[i].value == *b[i].value);
  }

  TEST_CASE("grid") {
    auto s = spec_for("inner", Observable::SupNorm, 10, 1000, 3);
    s.log_spacing = true;
    const auto g = chi_grid(s);
    CHECK(g[1] == doctest::Approx(100));
    CHECK(g[2] == 1000);
    s.points = 0;
    CHECK_THROWS_AS(chi_grid(s), InvalidInput);
    CHECK_THROWS_AS(observable_from_string("mass"), ParseError);
  }

  TEST_CASE("numbers carry 17 significant digits") {
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(-0.0) == "0");
  }
}
