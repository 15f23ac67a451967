#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "teichflow/dd.hpp"
#include "teichflow/errors.hpp"
#include "teichflow/fn_chart.hpp"
#include "teichflow/holonomy.hpp"

using teich::Chart;
using teich::CurveClass;
using teich::dd;
using teich::FNPoint;
using teich::Holonomy;
using teich::ShortSet;
using teich::Word;

namespace {

CurveClass word_class(const Word& w) { return {CurveClass::WORD, 0, w}; }

// Entry length for a given transverse word, or -1 if absent.
double entry_length(const ShortSet& ss, const Word& w) {
  for (const auto& e : ss.entries) {
    if (e.cls.kind == CurveClass::WORD && e.cls.word == w) return e.length;
  }
  return -1.0;
}

int word_entry_count(const ShortSet& ss) {
  int n = 0;
  for (const auto& e : ss.entries) n += (e.cls.kind == CurveClass::WORD);
  return n;
}

double dist_to_signed_identity_d(const teich::Mat2& m) {
  auto dist = [&](double s) {
    return std::max({std::abs(m.a - s), std::abs(m.b), std::abs(m.c), std::abs(m.d - s)});
  };
  return std::min(dist(1.0), dist(-1.0));
}

}  // namespace

TEST_SUITE("holonomy") {

TEST_CASE("once-punctured torus traces at a reference point") {
  Chart chart = teich::make_chart({1, 1});
  Holonomy h = teich::build_holonomy(chart, {{1.2}, {0.4}});

  dd trA = h.eval(Word{0}).trace();
  dd trB = h.eval(Word{2}).trace();
  dd trAB = h.eval(Word{0, 2}).trace();
  CHECK(trA.to_double() == doctest::Approx(2.3709304364845352).epsilon(1e-15));
  CHECK(trA.to_double() == doctest::Approx(2.0 * std::cosh(0.6)).epsilon(1e-15));
  CHECK(trB.to_double() == doctest::Approx(3.7426868200397618).epsilon(1e-14));
  CHECK(trAB.to_double() == doctest::Approx(4.1993366515851083).epsilon(1e-14));

  // Character-variety identity for a cusped torus: x^2 + y^2 + z^2 = xyz.
  dd fricke = trA * trA + trB * trB + trAB * trAB - trA * trB * trAB;
  CHECK(std::abs(fricke.to_double()) <= 1e-18);

  // Cusp word evaluates to trace -2 to construction precision.
  dd cusp = h.eval(chart.peripheral_words[0]).trace();
  CHECK(std::abs((cusp + dd(2.0)).to_double()) <= 1e-18);

  // Lengths through the matrices match the frozen values; the pants
  // coordinate round-trips through its own word.
  CHECK(teich::curve_length(h, word_class({2})) ==
        doctest::Approx(2.4785396756998055).epsilon(1e-13));
  CHECK(teich::curve_length(h, word_class({0, 2})) ==
        doctest::Approx(2.7453590284860532).epsilon(1e-13));
  CHECK(teich::curve_length_via_matrices(h, {CurveClass::PANTS, 0, {}}) ==
        doctest::Approx(1.2).epsilon(1e-13));
  CHECK(teich::curve_length(h, {CurveClass::PANTS, 0, {}}) == 1.2);
}

TEST_CASE("once-punctured torus short spectrum with and without twist") {
  Chart chart = teich::make_chart({1, 1});

  Holonomy h = teich::build_holonomy(chart, {{1.2}, {0.4}});
  ShortSet ss = teich::enumerate_short_geodesics(h, 3.0, 12);
  REQUIRE(ss.entries.size() == 4);
  CHECK(ss.degenerate.empty());
  CHECK(ss.entries[0].cls.kind == CurveClass::PANTS);
  CHECK(ss.entries[0].length == 1.2);
  CHECK(ss.entries[1].length == doctest::Approx(2.4785396756998055).epsilon(1e-13));
  CHECK(ss.entries[1].cls.word == Word{2});
  CHECK(ss.entries[2].length == doctest::Approx(2.7453590284860532).epsilon(1e-13));
  CHECK(ss.entries[2].cls.word == Word{0, 2});
  CHECK(ss.entries[3].length == doctest::Approx(2.9856161680139768).epsilon(1e-13));

  // At zero twist the trace relations force exact length ties between
  // distinct classes; both members must be kept.
  Holonomy h0 = teich::build_holonomy(chart, {{1.2}, {0.0}});
  ShortSet ss0 = teich::enumerate_short_geodesics(h0, 3.3, 12);
  REQUIRE(ss0.entries.size() == 5);
  double lb = entry_length(ss0, {2});
  double lab = entry_length(ss0, {0, 2});
  CHECK(lb == doctest::Approx(2.5709436796403158).epsilon(1e-13));
  CHECK(std::abs(lb - lab) <= 1e-12);
  double laab = entry_length(ss0, {0, 0, 2});
  double labi = entry_length(ss0, {0, 3});
  CHECK(laab == doctest::Approx(3.2750499460840485).epsilon(1e-13));
  CHECK(std::abs(laab - labi) <= 1e-12);
}

TEST_CASE("four-punctured sphere: pants trace sign and short words") {
  Chart chart = teich::make_chart({0, 4});
  Holonomy h = teich::build_holonomy(chart, {{0.8}, {0.37}});

  // The pants curve c1 c2 carries the negative trace branch.
  dd tr = h.eval(Word{0, 2}).trace();
  CHECK(tr.to_double() == doctest::Approx(-2.1621447436769117).epsilon(1e-15));
  CHECK(std::abs(tr.to_double()) == doctest::Approx(2.0 * std::cosh(0.4)).epsilon(1e-15));

  // All four cusp classes are parabolic to construction precision.
  for (const Word& w : chart.peripheral_words) {
    CHECK(std::abs((teich::abs(h.eval(w).trace()) - dd(2.0)).to_double()) <= 1e-18);
  }

  ShortSet ss = teich::enumerate_short_geodesics(h, 3.6, 8);
  CHECK(ss.degenerate.empty());
  REQUIRE(word_entry_count(ss) == 2);
  CHECK(entry_length(ss, {0, 3}) == doctest::Approx(3.5819679292415221).epsilon(1e-12));
  CHECK(entry_length(ss, {0, 2, 4, 4}) == doctest::Approx(3.5819679292415305).epsilon(1e-12));
  CHECK(ss.entries.front().length == 0.8);  // the pants curve itself
}

TEST_CASE("twice-punctured torus: equal-length twins and the depth guard") {
  Chart chart = teich::make_chart({1, 2});
  FNPoint x{{0.74, 0.31}, {0.22, -0.4}};
  Holonomy h = teich::build_holonomy(chart, x);

  // The shortest transverse pair differs by rotation symmetry only: a
  // 3-letter and a 5-letter word with the same ideal length. The 5-letter
  // member is invisible at half depth, so the stabilization guard must
  // reject this window...
  CHECK_THROWS_AS(teich::enumerate_short_geodesics(h, 3.6, 6, true), teich::NumericalError);

  // ...while the unguarded run returns both twins.
  ShortSet ss = teich::enumerate_short_geodesics(h, 3.6, 6, false);
  REQUIRE(word_entry_count(ss) == 2);
  double l_long = entry_length(ss, {0, 5, 2, 2, 4});
  double l_short = entry_length(ss, {0, 2, 2});
  CHECK(l_long == doctest::Approx(3.590346111599775).epsilon(1e-12));
  CHECK(l_short == doctest::Approx(3.5903461116001552).epsilon(1e-12));
  CHECK(std::abs(l_long - l_short) <= 1e-9);

  // Both cusp words stay parabolic in dd even though the double-rounded
  // matrices would miss by ~1e-13 here.
  for (const Word& w : chart.peripheral_words) {
    CHECK(std::abs((teich::abs(h.eval(w).trace()) - dd(2.0)).to_double()) <= 1e-18);
  }
}

TEST_CASE("closed genus 2: spectrum head and surface relation") {
  Chart chart = teich::make_chart({2, 0});
  FNPoint x{{0.63, 0.44, 0.81}, {0.1, -0.25, 0.33}};
  Holonomy h = teich::build_holonomy(chart, x);

  ShortSet ss = teich::enumerate_short_geodesics(h, 3.55, 6);
  CHECK(ss.degenerate.empty());
  REQUIRE(ss.entries.size() == 6);
  CHECK(ss.entries[0].length == 0.44);  // separating curve coordinate
  CHECK(ss.entries[0].cls.index == 1);
  CHECK(ss.entries[1].length == 0.63);
  CHECK(ss.entries[2].length == 0.81);
  CHECK(entry_length(ss, {6}) == doctest::Approx(3.248552566676131).epsilon(1e-12));
  CHECK(entry_length(ss, {4, 7}) == doctest::Approx(3.317000082172024).epsilon(1e-12));
  CHECK(entry_length(ss, {4, 6}) == doctest::Approx(3.5178198200858843).epsilon(1e-12));

  // The relator evaluates to +/-I far beyond the 1e-9 acceptance gate.
  teich::Mat2dd R = h.eval(*chart.relator);
  double dev = std::min(teich::dist_to_signed_identity(R, 1.0),
                        teich::dist_to_signed_identity(R, -1.0));
  CHECK(dev <= 1e-18);
}

TEST_CASE("thin genus 2 needs dd: double evaluation breaks the relation") {
  Chart chart = teich::make_chart({2, 0});
  FNPoint x{{0.03, 0.05, 0.03}, {0.009, -0.0125, 0.0099}};
  Holonomy h = teich::build_holonomy(chart, x);  // passes the 1e-9 dd gate

  teich::Mat2dd R = h.eval(*chart.relator);
  double dd_dev = std::min(teich::dist_to_signed_identity(R, 1.0),
                           teich::dist_to_signed_identity(R, -1.0));
  CHECK(dd_dev <= 1e-12);

  // The same product over double-rounded generators: conjugating frames
  // carry ~1/l^2 norms, so rounding noise blows past 1e-10. This is the
  // measured reason holonomy is stored in dd.
  double d_dev = dist_to_signed_identity_d(h.eval_d(*chart.relator));
  CHECK(d_dev >= 1e-10);
}

TEST_CASE("length from |trace| round-trips the seeds") {
  for (double l : {1e-4, 0.02, 1.2, 10.0}) {
    dd lam(std::exp(0.5 * l));
    dd tr = lam + dd(1.0) / lam;
    double back = teich::length_from_abs_trace(tr);
    CHECK(std::abs(back - l) <= 1e-12 * std::max(1.0, l));
  }
  CHECK(teich::length_from_abs_trace(dd(2.0)) == 0.0);
  CHECK(teich::length_from_abs_trace(dd(1.5)) == 0.0);
}

TEST_CASE("non-hyperbolic classes are rejected by the length query") {
  Chart chart = teich::make_chart({1, 1});
  Holonomy h = teich::build_holonomy(chart, {{1.2}, {0.4}});
  // The cusp class is parabolic: no geodesic length.
  CHECK_THROWS_AS(teich::curve_length_via_matrices(h, word_class(chart.peripheral_words[0])),
                  teich::NumericalError);
}

TEST_CASE("enumeration input guards") {
  Chart chart = teich::make_chart({1, 1});
  Holonomy h = teich::build_holonomy(chart, {{1.2}, {0.4}});
  CHECK_THROWS_AS(teich::enumerate_short_geodesics(h, 3.0, 0), teich::SchemaError);
  CHECK_THROWS_AS(teich::enumerate_short_geodesics(h, -1.0, 8), teich::SchemaError);
}

}  // TEST_SUITE("holonomy")
