#include "doctest.h"

#include <random>

#include "common.hpp"
#include "oracles/oracle_values.hpp"

#include "chemo/assembler.hpp"
#include "chemo/energy.hpp"
#include "chemo/errors.hpp"
#include "chemo/specfun.hpp"
#include "chemo/supports.hpp"
#include "chemo/thresholds.hpp"

using namespace chemo;
using testing::disk;
using testing::kM;
using testing::pi;
using testing::rel;

TEST_SUITE("energy") {
  TEST_CASE("constant state") {
    const auto e = energy(constant(disk(2)));
    CHECK(rel(e.total, -12.5 * pi) < 1e-14);
    CHECK(rel(e.total, oracle::constant_energy_chi2) < 1e-14);
    CHECK(e.discrepancy < 1e-10 * std::abs(e.total));
  }

  TEST_CASE("bifurcation branch shares the constant energy") {
    ModelParams p = disk(chi_k(5, 2));
    const double base = energy(constant(p)).total;
    const auto [lo, hi] = bifurcation_epsilon_range(p, 2);
    for (double eps : {lo, 0.3 * hi, hi}) CHECK(rel(energy(bifurcation_family(p, 2, eps)).total, base) < 1e-12);
  }

  TEST_CASE("rings against the oracle and the closed form") {
    for (const auto& o : oracle::kInner) {
      const auto e = energy(inner_ring(disk(o.chi)));
      CHECK(rel(e.total, o.energy) < 1e-9);
      const double w = std::sqrt(o.chi - 1), r1 = solve_r1(w, 5);
      const double closed = w * w * kM * kM / (o.chi * pi) * w * J0(w * r1) /
                            (2 * r1 * J1(w * r1) - w * r1 * r1 * J0(w * r1));
      CHECK(rel(e.total, closed) < 1e-9);
      CHECK(e.discrepancy < 1e-8 * std::abs(e.total));
    }
    for (const auto& o : oracle::kOuter) CHECK(rel(energy(outer_ring(disk(o.chi))).total, o.energy) < 1e-9);
  }

  TEST_CASE("quadrature agrees with the stored constants") {
    for (const auto& s : {mexican_hat(disk(10), 2.5), volcano(disk(10)), airy(disk(26), 3, AiryVariant::Hat),
                          annulus_mode(disk(10), 1, 5, AnnulusDirection::Decreasing)}) {
      const auto e = energy(s);
      CHECK(std::abs(e.quadrature - e.total) < 1e-8 * std::abs(e.total));
    }
  }

  TEST_CASE("log potential has no finite energy") {
    ModelParams p = testing::plane(4, 1);
    CHECK_THROWS_AS(energy(log_potential(p)), InvalidInput);
  }

  TEST_CASE("hierarchy") {
    for (double chi : {2.0, 10.0, 300.0}) {
      ModelParams p = disk(chi);
      const auto h = hierarchy({constant(p), inner_ring(p), outer_ring(p)});
      CHECK(h.ordered());
      REQUIRE(h.sorted.size() == 3);
      CHECK(h.sorted[0].family == Family::InnerRing);
      CHECK(h.sorted[2].family == Family::Constant);
    }
    // a mislabelled ordering is reported
    ModelParams p = disk(10);
    auto fake_inner = outer_ring(p);
    fake_inner.tag.family = Family::InnerRing;
    auto fake_outer = inner_ring(p);
    fake_outer.tag.family = Family::OuterRing;
    CHECK_FALSE(hierarchy({constant(p), fake_inner, fake_outer}).ordered());
    CHECK_FALSE(hierarchy({constant(p), inner_ring(disk(11))}).ordered());
  }

  TEST_CASE("large-chi rates") {
    const double e3 = energy(inner_ring(disk(1e3))).total;
    const double e5 = energy(inner_ring(disk(1e5))).total;
    const double slope = (e5 - e3) / (std::log(1e5) - std::log(1e3));
    CHECK(rel(slope, -kM * kM / (4 * pi)) < 0.05);
    const double limit = -kM * kM * I0(5) / (2 * pi * 5 * I1(5));
    CHECK(rel(energy(outer_ring(disk(1e5))).total, limit) < 1e-2);
  }

  TEST_CASE("partition bound") {
    CHECK(partition_bound({kM}, {5}) == doctest::Approx(kM * kM / 25));
    CHECK(rel(partition_bound({kM / 2, kM / 2}, {2.5, 5}), 4.0 / 3 * kM * kM / 25) < 1e-14);
    CHECK_THROWS_AS(partition_bound({1, 2}, {3}), InvalidInput);
    CHECK_THROWS_AS(partition_bound({1, 2}, {3, 2}), InvalidInput);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(0, 1);
    for (int t = 0; t < 100; ++t) {
      const int k = 2 + t % 7;
      std::vector<double> w(k), r(k);
      double sw = 0;
      for (auto& x : w) sw += x = 0.01 + U(rng);
      for (auto& x : w) x *= kM / sw;
      for (int i = 0; i < k - 1; ++i) r[i] = U(rng) * 5;
      r[k - 1] = 5;
      std::sort(r.begin(), r.end());
      CHECK(partition_bound(w, r) > kM * kM / 25);
    }
  }

  TEST_CASE("outer ring and hat swap order once") {
    const auto x = outer_hat_crossing(5, kM, 3.0, 6.0);
    REQUIRE(x);
    CHECK(*x == doctest::Approx(3.906458).epsilon(1e-5));
  }
}
