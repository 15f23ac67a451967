#pragma once

// Dehn twists along pants curves act on the chart by theta_i += k * l_i.
// The retraction commutes with them because MODEL_WP length gradients
// preserve twist fractions; equivariance_check measures the discrepancy
// end to end, and symmetric_locus_check verifies that length equalities
// defining symmetric families survive the flow.

#include <utility>
#include <vector>

#include "teichflow/fn_chart.hpp"
#include "teichflow/retraction_flow.hpp"

namespace teich {

struct TwistFactor {
  int curve = 0;   // pants curve index
  int power = 0;   // signed twist count
};

using MappingClass = std::vector<TwistFactor>;

// Net twist counts are accumulated per curve first, so composition and
// inverses are exact at the integer level; each theta_i changes by a
// single floating add of (net_i * l_i).
FNPoint apply_mapping_class(const Chart& chart, const MappingClass& mc, const FNPoint& x);

struct EquivarianceResult {
  double discrepancy = 0.0;     // max-abs coordinate gap
  bool lambda_invariant = false;  // systole unchanged by the twist, exact compare
  FNPoint twisted_then_retracted;
  FNPoint retracted_then_twisted;
};

EquivarianceResult equivariance_check(const Chart& chart, const FNPoint& x,
                                      const MappingClass& mc, const FlowConfig& cfg);

struct LocusCheckResult {
  bool start_ok = false;     // relations hold at x0 within start_tol
  double max_gap = 0.0;      // worst |l_a - l_b| over samples and relations
  bool preserved = false;    // max_gap <= along_tol
};

// Flow from x0 and verify each length equality l_a = l_b along the
// recorded samples. Transverse classes are measured through the
// holonomy matrices at each sample.
LocusCheckResult symmetric_locus_check(const Chart& chart, const FNPoint& x0,
                                       const std::vector<std::pair<CurveClass, CurveClass>>& relations,
                                       const FlowConfig& cfg, double start_tol = 1e-9,
                                       double along_tol = 1e-6);

} // namespace teich
