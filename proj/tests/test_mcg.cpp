#include "doctest.h"

#include <cmath>

#include "teichflow/errors.hpp"
#include "teichflow/mcg_action.hpp"

using teich::Chart;
using teich::CurveClass;
using teich::FlowConfig;
using teich::FNPoint;
using teich::MappingClass;
using teich::Word;

TEST_SUITE("mcg") {

TEST_CASE("twists act by theta += k*l and compose at the integer level") {
  Chart chart = teich::make_chart({1, 2});
  FNPoint x{{0.25, 0.5}, {0.5, -0.75}};

  FNPoint t1 = teich::apply_mapping_class(chart, {{0, 1}}, x);
  CHECK(t1.theta[0] == 0.5 + 0.25);
  CHECK(t1.theta[1] == -0.75);
  CHECK(t1.l == x.l);

  // Dyadic coordinates make the round trip bitwise.
  FNPoint back = teich::apply_mapping_class(chart, {{0, -1}}, t1);
  CHECK(back == x);

  // Composition happens on integer counts, so these are identical even in
  // floating point.
  FNPoint a = teich::apply_mapping_class(chart, {{0, 1}, {1, 2}, {0, 2}}, x);
  FNPoint b = teich::apply_mapping_class(chart, {{0, 3}, {1, 2}}, x);
  CHECK(a == b);

  // Net-zero factors leave the point untouched, including at generic
  // non-dyadic coordinates.
  FNPoint gen{{0.31, 0.47}, {0.123, 0.456}};
  FNPoint c = teich::apply_mapping_class(chart, {{0, 5}, {1, -3}, {0, -5}, {1, 3}}, gen);
  CHECK(c == gen);
}

TEST_CASE("twist curve indices are validated") {
  Chart chart = teich::make_chart({1, 1});
  FNPoint x{{0.5}, {0.0}};
  CHECK_THROWS_AS(teich::apply_mapping_class(chart, {{1, 1}}, x), teich::SchemaError);
  CHECK_THROWS_AS(teich::apply_mapping_class(chart, {{-1, 1}}, x), teich::SchemaError);
}

TEST_CASE("retraction commutes with twists on a thin start") {
  Chart chart = teich::make_chart({1, 2});
  FNPoint x{{0.02, 0.025}, {0.3 * 0.02, -0.6 * 0.025}};
  FlowConfig cfg;
  cfg.eps = 0.05;
  MappingClass mc{{0, 1}, {1, -2}};

  teich::EquivarianceResult r = teich::equivariance_check(chart, x, mc, cfg);
  CHECK(r.discrepancy <= 1e-6);
  CHECK(r.lambda_invariant);

  // Both endpoints are genuine retraction images.
  CHECK(r.twisted_then_retracted.l[0] >= cfg.eps - 1e-6);
  CHECK(r.retracted_then_twisted.l[0] >= cfg.eps - 1e-6);
}

TEST_CASE("twists fix the systole exactly even on thick starts") {
  Chart chart = teich::make_chart({1, 1});
  FNPoint x{{0.2}, {0.11}};
  FlowConfig cfg;
  cfg.eps = 0.05;
  teich::EquivarianceResult r = teich::equivariance_check(chart, x, {{0, 4}}, cfg);
  // Thick start: both orders reduce to the same twist of the fixed point.
  CHECK(r.discrepancy == 0.0);
  CHECK(r.lambda_invariant);
}

TEST_CASE("equal-length pants locus survives the flow") {
  Chart chart = teich::make_chart({1, 2});
  FNPoint x0{{0.02, 0.02}, {0.3 * 0.02, -0.7 * 0.02}};
  FlowConfig cfg;
  cfg.eps = 0.05;
  std::vector<std::pair<CurveClass, CurveClass>> rel{
      {{CurveClass::PANTS, 0, {}}, {CurveClass::PANTS, 1, {}}}};
  teich::LocusCheckResult res = teich::symmetric_locus_check(chart, x0, rel, cfg);
  CHECK(res.start_ok);
  CHECK(res.preserved);
  CHECK(res.max_gap <= 1e-9);
}

TEST_CASE("zero-twist torus locus: transverse pair stays tied") {
  // At theta = 0 on the once-punctured torus the classes b and ab have
  // equal length; the flow moves only (l, theta) with theta staying 0, so
  // the tie is preserved to measurement precision.
  Chart chart = teich::make_chart({1, 1});
  FNPoint x0{{0.02}, {0.0}};
  FlowConfig cfg;
  cfg.eps = 0.05;
  std::vector<std::pair<CurveClass, CurveClass>> rel{
      {{CurveClass::WORD, 0, Word{2}}, {CurveClass::WORD, 0, Word{0, 2}}}};
  teich::LocusCheckResult res = teich::symmetric_locus_check(chart, x0, rel, cfg);
  CHECK(res.start_ok);
  CHECK(res.preserved);
  CHECK(res.max_gap <= 1e-9);
}

}  // TEST_SUITE("mcg")
