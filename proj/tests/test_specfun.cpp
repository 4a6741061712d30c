#include "doctest.h"

#include "common.hpp"
#include "oracles/oracle_values.hpp"

#include "chemo/errors.hpp"
#include "chemo/specfun.hpp"

using namespace chemo;
using testing::pi;
using testing::rel;

TEST_SUITE("specfun") {
  TEST_CASE("values against the high-precision oracle") {
    for (const auto& o : oracle::kBessel) {
      CAPTURE(o.x);
      CHECK(rel(J0(o.x), o.j0) < 1e-12);
      CHECK(rel(J1(o.x), o.j1) < 1e-12);
      CHECK(rel(Y0(o.x), o.y0) < 1e-12);
      CHECK(rel(Y1(o.x), o.y1) < 1e-12);
      CHECK(rel(I0(o.x), o.i0) < 1e-13);
      CHECK(rel(I1(o.x), o.i1) < 1e-13);
      CHECK(rel(K0(o.x), o.k0) < 1e-13);
      CHECK(rel(K1(o.x), o.k1) < 1e-13);
    }
  }

  TEST_CASE("scaled forms match the unscaled ones") {
    for (double x : {0.3, 4.0, 25.0}) {
      CHECK(rel(I0s(x), std::exp(-x) * I0(x)) < 1e-14);
      CHECK(rel(K1s(x), std::exp(x) * K1(x)) < 1e-14);
    }
    CHECK(std::isfinite(I0s(2000.0)));
  }

  TEST_CASE("origin values") {
    CHECK(J0(0) == 1);
    CHECK(J1(0) == 0);
    CHECK(I1(0) == 0);
    CHECK(I0(0) == 1);
  }

  TEST_CASE("singular kinds reject the origin") {
    CHECK_THROWS_AS(Y0(0), DomainError);
    CHECK_THROWS_AS(K1(0), DomainError);
    CHECK_THROWS_AS(K0(-1), DomainError);
  }

  TEST_CASE("zeros") {
    CHECK(rel(j01(), oracle::j01) < 1e-15);
    CHECK(rel(j11(), oracle::j11) < 1e-15);
    CHECK(rel(j1k(2), oracle::j12) < 1e-15);
    CHECK(rel(j1k(3), oracle::j13) < 1e-15);
    CHECK(rel(j1k(4), oracle::j14) < 1e-15);
    CHECK(nth_root(RootKind::J0, 1) == doctest::Approx(2.4048).epsilon(1e-4));
    CHECK(nth_root(RootKind::J1, 5) == doctest::Approx(16.4706).epsilon(1e-5));
    CHECK(nth_root(RootKind::Y1, 2) == doctest::Approx(5.4296810407941).epsilon(1e-12));
    CHECK(std::abs(J1(j11())) < 1e-15);
  }

  TEST_CASE("root tables increase, satisfy the equation and interlace") {
    const auto j = root_table(RootKind::J1, 30);
    const auto y = root_table(RootKind::Y1, 31);
    for (std::size_t k = 0; k < j.roots.size(); ++k) {
      if (k > 0) CHECK(j.roots[k] > j.roots[k - 1]);
      const double x = j.roots[k];
      // d/dx J1 = J0 - J1/x
      CHECK(std::abs(J1(x)) <= 1e-12 * std::max(1.0, std::abs(J0(x) - J1(x) / x)));
      CHECK(y.roots[k] < x);
      CHECK(x < y.roots[k + 1]);
    }
  }

  TEST_CASE("Wronskian at 2.5") {
    const double s = 2.5;
    CHECK(rel(Y1(s) * J0(s) - J1(s) * Y0(s), -2 / (pi * s)) < 1e-13);
  }
}
