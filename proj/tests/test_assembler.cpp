#include "doctest.h"

#include "common.hpp"
#include "oracles/oracle_values.hpp"

#include "chemo/assembler.hpp"
#include "chemo/compound.hpp"
#include "chemo/errors.hpp"
#include "chemo/specfun.hpp"
#include "chemo/supports.hpp"
#include "chemo/thresholds.hpp"
#include "chemo/verify.hpp"

using namespace chemo;
using testing::disk;
using testing::kM;
using testing::pi;
using testing::plane;
using testing::rel;

namespace {

double min_u(const PiecewiseRadialSolution& s) {
  double m = INFINITY;
  const double lo = s.domain_lo(), hi = s.domain_hi();
  for (int i = 0; i <= 200000; ++i) m = std::min(m, s.u(lo + (hi - lo) * i / 200000));
  return m;
}

const Segment& first(const PiecewiseRadialSolution& s, Form f) {
  for (const auto& seg : s.segments)
    if (seg.form == f) return seg;
  FAIL("form not present");
  return s.segments.front();
}

}  // namespace

TEST_SUITE("assembler") {
  TEST_CASE("constant") {
    const auto s = constant(disk(2));
    CHECK(s.u(1.3) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.v(4.9) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.components.at(0).mass == kM);
  }

  TEST_CASE("bifurcation family") {
    for (int k = 1; k <= 3; ++k) {
      CAPTURE(k);
      ModelParams p = disk(chi_k(5, k));
      const auto [lo, hi] = bifurcation_epsilon_range(p, k);
      CHECK(lo < 0);
      CHECK(hi > 0);
      const auto zero = bifurcation_family(p, k, 0);
      CHECK(zero.u(2.2) == doctest::Approx(1.0).epsilon(1e-14));
      const auto top = bifurcation_family(p, k, hi);
      CHECK(std::abs(min_u(top)) < 1e-9);
      CHECK(verify(top).passed());
      CHECK(verify(bifurcation_family(p, k, lo)).passed());
      CHECK_THROWS_AS(bifurcation_family(p, k, hi * 1.01), PositivityError);
    }
    // the first mode's upper endpoint is about 2.482 ubar / chi_k
    ModelParams p = disk(chi_k(5, 2));
    CHECK(bifurcation_epsilon_range(p, 2).second * p.chi == doctest::Approx(2.482).epsilon(1e-3));
    CHECK_THROWS_AS(bifurcation_family(disk(3), 2, 0.1), AdmissibilityError);
  }

  TEST_CASE("inner ring") {
    for (const auto& o : oracle::kInner) {
      CAPTURE(o.chi);
      const auto s = inner_ring(disk(o.chi));
      const Segment& gap = first(s, Form::TGap);
      CHECK(rel(gap.c(0), o.coeff) < 1e-9);
      CHECK(rel(s.u(0), o.umax) < 1e-9);
      CHECK(verify(s).passed());
    }
    const auto s = inner_ring(disk(1e5));
    CHECK(first(s, Form::TGap).c(0) == doctest::Approx(kM / (2 * pi * I1(5))).epsilon(1e-4));
    for (double chi : {1e3, 1e4}) {
      const double ratio = inner_ring(disk(chi)).u(0) / chi;
      CHECK(rel(ratio, kM / (2 * pi * j01() * J1(j01()))) < 0.02);
    }
  }

  TEST_CASE("outer ring") {
    for (const auto& o : oracle::kOuter) {
      CAPTURE(o.chi);
      const auto s = outer_ring(disk(o.chi));
      CHECK(rel(first(s, Form::IGap).c(0), o.coeff) < 1e-9);
      CHECK(rel(s.u(5), o.umax) < 1e-9);
      CHECK(verify(s).passed());
    }
    // boundary peak grows like M sqrt(chi) / (2 pi R)
    const auto s = outer_ring(disk(1e4));
    CHECK(rel(s.u(5), kM * std::sqrt(1e4) / (2 * pi * 5)) < 0.02);
    CHECK(s.u(5) > s.u(4.99));
  }

  TEST_CASE("annulus modes") {
    const auto dec = annulus_mode(disk(10), 2.5, 5, AnnulusDirection::Decreasing);
    const auto inc = annulus_mode(disk(10), 2.5, 5, AnnulusDirection::Increasing);
    CHECK(verify(dec).passed());
    CHECK(verify(inc).passed());
    CHECK(rel(mass_between(dec, 2.5, 5), kM) < 1e-10);
    // decreasing mode: density at the gap edge lies below v there
    const double knot = dec.segments.at(0).hi;
    CHECK(dec.u(knot) < dec.v(knot));
    const auto degenerate = annulus_mode(disk(10), 0, 5, AnnulusDirection::Increasing);
    const auto outer = outer_ring(disk(10));
    CHECK(rel(degenerate.u(4.9), outer.u(4.9)) < 1e-14);
  }

  TEST_CASE("annulus bifurcation") {
    const double a = 2, b = 5, w = omega_ab(a, b);
    ModelParams p = disk(w * w + 1);
    const auto [lo, hi] = annulus_bifurcation_epsilon_range(p, a, b);
    const auto flat = annulus_bifurcation(p, a, b, 0);
    CHECK(flat.u(3) == doctest::Approx(kM / (pi * (b * b - a * a))).epsilon(1e-14));
    for (double e : {lo, 0.5 * lo, 0.5 * hi, hi}) {
      const auto s = annulus_bifurcation(p, a, b, e);
      CHECK(verify(s).passed());
      CHECK(rel(mass_between(s, a, b), kM) < 1e-10);
    }
    CHECK(std::abs(min_u(annulus_bifurcation(p, a, b, hi))) < 1e-9);
    CHECK(std::abs(min_u(annulus_bifurcation(p, a, b, lo))) < 1e-9);
  }

  TEST_CASE("Mexican hat") {
    ModelParams p = disk(10);
    const auto [lo, hi] = hat_center_range(p);
    CHECK(rel(lo, j11() / 3) < 1e-14);
    for (double R0 : {lo, 0.5 * (lo + hi), hi}) {
      const auto s = mexican_hat(p, R0);
      CHECK(verify(s).passed());
      CHECK(structure_check(s).passed());
    }
    const auto s = mexican_hat(p, 2.5);
    CHECK(std::abs(s.v(2.5 + 1e-7) - s.v(2.5 - 1e-7)) < 1e-9);
    // T-anchor at R0 makes v' vanish there
    CHECK(std::abs(s.eval(2.5).dv) < 1e-12 * std::max(1.0, s.eval(2.5).v));
    CHECK_THROWS_AS(mexican_hat(p, 0.5 * lo), AdmissibilityError);
    // lower end: inner mass share shrinks with chi
    const auto r2 = mexican_hat(disk(1e2), hat_center_range(disk(1e2)).first);
    const auto r3 = mexican_hat(disk(1e3), hat_center_range(disk(1e3)).first);
    const double q2 = r2.components.front().mass / r2.components.back().mass;
    const double q3 = r3.components.front().mass / r3.components.back().mass;
    CHECK(q3 < q2);
  }

  TEST_CASE("volcano") {
    CHECK_THROWS_AS(volcano(disk(2)), AdmissibilityError);
    const double c2 = chi2_star(5);
    const auto at = volcano(disk(c2), c2);
    CHECK(std::abs(at.u(5)) < 1e-8 * at.u(0.5 * (at.components.front().lo + 5)));
    CHECK(at.tag.family == Family::VolcanoAttached);
    const auto det = volcano(disk(1e4), c2);
    CHECK(det.tag.family == Family::VolcanoDetached);
    CHECK(verify(det).passed());
    const auto five = volcano(disk(5));
    CHECK(rel(five.tag.R0, oracle::volcano_center_chi5) < 1e-10);
    CHECK(five.tag.R0 == doctest::Approx(3.3831).epsilon(2e-4));
  }

  TEST_CASE("Airy patterns") {
    ModelParams p = disk(10);
    const auto [lo, hi] = hat_center_range(p);
    const double R0 = 0.5 * (lo + hi);
    const auto a2 = airy(p, 2, AiryVariant::Hat, R0);
    const auto h = mexican_hat(p, R0);
    REQUIRE(a2.segments.size() == h.segments.size());
    for (double r : {0.2, 1.5, 3.0, 4.9}) CHECK(rel(a2.u(r) + 1, h.u(r) + 1) < 1e-14);
    for (int k0 = 3; k0 <= 6; ++k0) {
      CAPTURE(k0);
      const auto s = airy(disk(26), k0, AiryVariant::Hat);
      CHECK(verify(s).passed());
      const auto st = structure_check(s);
      CHECK(st.dv_sign_changes == k0 - 1);
      CHECK(st.passed());
    }
    CHECK_THROWS_AS(airy(disk(26), 3, AiryVariant::Volcano), PositivityError);
    const auto v3 = airy(disk(6), 3, AiryVariant::Volcano);
    CHECK(verify(v3).passed());
    CHECK(structure_check(v3).dv_sign_changes == 2);
  }

  TEST_CASE("whole plane") {
    const auto s = whole_space(plane(2, 1));
    CHECK(verify(s).passed());
    const auto big = whole_space(plane(1e5, kM));
    for (double r : {3.0, 6.0}) CHECK(rel(big.v(r), kM / (2 * pi) * K0(r)) < 1e-2);
    const double q3 = whole_space(plane(1e3, kM)).u(0) / 1e3;
    const double q4 = whole_space(plane(1e4, kM)).u(0) / 1e4;
    CHECK(rel(q3, q4) < 0.05);
    CHECK(std::isinf(whole_space(disk(2)).params.R));
  }

  TEST_CASE("logarithmic potential") {
    const auto s = log_potential(plane(4, 1));
    CHECK(rel(s.components.at(0).hi, j01() / 2) < 1e-15);
    for (double r : {2.0, 7.5}) CHECK(rel(s.eval(r).dv, -1 / (2 * pi * r)) < 1e-12);
    CHECK(rel(mass_between(s, 0, s.components.at(0).hi), 1.0) < 1e-12);
    CHECK(verify(s).passed());
  }
}
