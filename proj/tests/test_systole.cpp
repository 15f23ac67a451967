#include "doctest.h"

#include <cmath>

#include "teichflow/errors.hpp"
#include "teichflow/systole.hpp"

using teich::BersBox;
using teich::Chart;
using teich::CurveClass;
using teich::FNPoint;
using teich::ShortSet;
using teich::SystoleResult;

TEST_SUITE("systole") {

TEST_CASE("floors: interior self-intersection bound and collar bound") {
  CHECK(teich::pants_interior_floor() == doctest::Approx(3.5254943480781722).epsilon(1e-15));
  // Collar floor grows without bound as the crossed curve shrinks and
  // decays as it grows; monotone decreasing in l.
  CHECK(teich::crossing_floor(0.5) > teich::crossing_floor(1.0));
  CHECK(teich::crossing_floor(1e-3) > 10.0);
  // Thin chart: the interior floor is the binding one.
  FNPoint thin{{0.03}, {0.02}};
  CHECK(teich::transverse_floor(thin) == teich::pants_interior_floor());
  // Thick chart: the collar floor binds.
  FNPoint thick{{3.6}, {0.0}};
  CHECK(teich::transverse_floor(thick) == teich::crossing_floor(3.6));
}

TEST_CASE("thin points take the certificate path") {
  Chart chart = teich::make_chart({1, 1});
  FNPoint x{{0.03}, {0.021}};
  SystoleResult s = teich::systole(chart, x, 12);
  CHECK(s.certified);
  CHECK(s.lambda == 0.03);
  REQUIRE(s.realizers.size() == 1);
  CHECK(s.realizers[0].kind == CurveClass::PANTS);
  CHECK(s.realizers[0].index == 0);

  // The certificate also answers the truncation predicate without any
  // holonomy work.
  CHECK(teich::in_truncated(chart, x, 0.02, 12));
  CHECK(teich::in_truncated(chart, x, 0.03, 12));
  CHECK_FALSE(teich::in_truncated(chart, x, 0.05, 12));
  // Boundary slack: a systole exactly at eps - 1e-12 still counts.
  CHECK(teich::in_truncated(chart, x, 0.03 + 5e-13, 12));
}

TEST_CASE("certified short set lists only the short pants coordinates") {
  Chart chart = teich::make_chart({2, 0});
  FNPoint x{{0.03, 0.12, 0.6}, {0.01, 0.0, -0.2}};
  ShortSet ss = teich::short_set(chart, x, 0.15, 8);
  CHECK_FALSE(ss.enumerated);
  REQUIRE(ss.entries.size() == 2);
  CHECK(ss.entries[0].length == 0.03);
  CHECK(ss.entries[0].cls.index == 0);
  CHECK(ss.entries[1].length == 0.12);
  CHECK(ss.entries[1].cls.index == 1);
}

TEST_CASE("certificate agrees with explicit enumeration where both apply") {
  Chart chart = teich::make_chart({1, 1});
  FNPoint x{{1.1}, {0.33}};
  SystoleResult s = teich::systole(chart, x, 12);
  CHECK(s.certified);
  CHECK(s.lambda == 1.1);

  // Enumerate right up to the collar floor: every transverse class the
  // search finds must clear it, so the pants coordinate wins.
  double floor = teich::transverse_floor(x);
  teich::Holonomy h = teich::build_holonomy(chart, x);
  ShortSet ss = teich::enumerate_short_geodesics(h, floor, 12);
  for (const auto& e : ss.entries) {
    if (e.cls.kind == CurveClass::WORD) {
      CHECK(e.length >= floor - teich::kTieTol);
    }
  }
  CHECK(ss.entries.front().length == 1.1);
}

TEST_CASE("thick points enumerate and report consistent realizers") {
  Chart chart = teich::make_chart({1, 1});
  FNPoint x{{2.5}, {1.25}};
  SystoleResult s = teich::systole(chart, x, 12);
  CHECK_FALSE(s.certified);
  CHECK(s.lambda <= 2.5 + teich::kTieTol);
  // The collar bound is a true lower bound for the result.
  CHECK(s.lambda >= teich::transverse_floor(x) - teich::kTieTol);
  REQUIRE(!s.realizers.empty());
  teich::Holonomy h = teich::build_holonomy(chart, x);
  for (const CurveClass& c : s.realizers) {
    CHECK(teich::curve_length(h, c) <= s.lambda + teich::kTieTol);
  }
}

TEST_CASE("bers box membership is per coordinate") {
  BersBox box{0.05, 0.3, 0.5};
  CHECK(teich::in_bers_box({{0.1}, {0.4}}, box));
  CHECK(teich::in_bers_box({{0.05}, {-0.5}}, box));
  CHECK_FALSE(teich::in_bers_box({{0.04}, {0.0}}, box));
  CHECK_FALSE(teich::in_bers_box({{0.31}, {0.0}}, box));
  CHECK_FALSE(teich::in_bers_box({{0.1}, {0.51}}, box));
  CHECK_FALSE(teich::in_bers_box({{0.1, 0.1}, {0.0, 0.6}}, box));
}

TEST_CASE("point validation propagates through systole entry points") {
  Chart chart = teich::make_chart({1, 1});
  CHECK_THROWS_AS(teich::systole(chart, {{-1.0}, {0.0}}, 12), teich::SchemaError);
  CHECK_THROWS_AS(teich::short_set(chart, {{0.5, 0.5}, {0.0, 0.0}}, 1.0, 12), teich::SchemaError);
}

}  // TEST_SUITE("systole")
