#include "doctest.h"

#include "common.hpp"

#include "chemo/assembler.hpp"
#include "chemo/thresholds.hpp"
#include "chemo/verify.hpp"

using namespace chemo;
using testing::disk;

namespace {

bool names(const VerificationReport& r, const std::string& key) {
  for (const auto& f : r.failures)
    if (f.rfind(key, 0) == 0) return true;
  return false;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("constant state is exact") {
    const auto r = verify(constant(disk(2)));
    CHECK(r.passed());
    CHECK(r.v_residual_max < 1e-14);
    CHECK(r.flux_constancy < 1e-14);
    CHECK(r.mass_error < 1e-14);
  }

  TEST_CASE("inner ring residual") {
    const auto r = verify(inner_ring(disk(10)));
    CHECK(r.passed());
    CHECK(r.v_residual_max <= 1e-8);
  }

  TEST_CASE("corrupted cap amplitude is caught") {
    auto s = inner_ring(disk(10));
    s.segments.at(0).coeffs.at(0).value *= 1.01;
    const auto r = verify(s);
    CHECK_FALSE(r.passed());
    CHECK(names(r, "flux_constancy"));
  }

  TEST_CASE("segments must tile the domain") {
    auto s = outer_ring(disk(10));
    s.segments.at(0).hi *= 0.999;
    CHECK_FALSE(verify(s).passed());
  }

  TEST_CASE("component intervals must match the support") {
    auto s = inner_ring(disk(10));
    s.components.at(0).hi *= 1.01;
    CHECK_FALSE(verify(s).passed());
  }

  TEST_CASE("sampling includes knots") {
    const auto s = mexican_hat(disk(10), 2.5);
    const auto f = sample(s, 100);
    for (double k : s.knots()) {
      bool found = false;
      for (double r : f.r) found = found || r == k || (k == 0 && r < 1e-8);
      CHECK(found);
    }
  }

  TEST_CASE("structure") {
    const auto hat = structure_check(mexican_hat(disk(10), 2.5));
    CHECK(hat.components == 2);
    CHECK(hat.dv_sign_changes == 1);
    CHECK(hat.touches_origin);
    CHECK(hat.touches_boundary);
    const auto outer = structure_check(outer_ring(disk(10)));
    CHECK(outer.components == 1);
    CHECK(outer.touches_boundary);
    CHECK_FALSE(outer.touches_origin);
    const auto airy4 = structure_check(airy(disk(26), 4, AiryVariant::Hat));
    CHECK(airy4.dv_sign_changes == 3);
    CHECK(airy4.passed());
  }

  TEST_CASE("mass between") {
    const auto s = constant(disk(2));
    CHECK(mass_between(s, 0, 1) == doctest::Approx(testing::pi).epsilon(1e-12));
  }
}
