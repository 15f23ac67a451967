#include "teichflow/mcg_action.hpp"

#include <cmath>

#include "teichflow/errors.hpp"
#include "teichflow/holonomy.hpp"
#include "teichflow/systole.hpp"

namespace teich {

FNPoint apply_mapping_class(const Chart& chart, const MappingClass& mc, const FNPoint& x) {
  validate_point(chart, x);
  std::vector<long long> net(chart.dim, 0);
  for (const TwistFactor& f : mc) {
    if (f.curve < 0 || f.curve >= chart.dim) {
      throw SchemaError("twist references pants curve " + std::to_string(f.curve) +
                        " outside chart dimension " + std::to_string(chart.dim));
    }
    net[f.curve] += f.power;
  }
  FNPoint out = x;
  for (int i = 0; i < chart.dim; ++i) out.theta[i] += double(net[i]) * x.l[i];
  return out;
}

EquivarianceResult equivariance_check(const Chart& chart, const FNPoint& x,
                                      const MappingClass& mc, const FlowConfig& cfg) {
  const int m = cfg.max_word_length > 0 ? cfg.max_word_length : default_word_length(chart);
  EquivarianceResult out;
  FNPoint tx = apply_mapping_class(chart, mc, x);

  out.twisted_then_retracted = retract(chart, tx, cfg).endpoint();
  out.retracted_then_twisted = apply_mapping_class(chart, mc, retract(chart, x, cfg).endpoint());

  double g = 0.0;
  for (int i = 0; i < chart.dim; ++i) {
    g = std::max(g, std::abs(out.twisted_then_retracted.l[i] - out.retracted_then_twisted.l[i]));
    g = std::max(g, std::abs(out.twisted_then_retracted.theta[i] - out.retracted_then_twisted.theta[i]));
  }
  out.discrepancy = g;
  out.lambda_invariant = systole(chart, tx, m).lambda == systole(chart, x, m).lambda;
  return out;
}

LocusCheckResult symmetric_locus_check(const Chart& chart, const FNPoint& x0,
                                       const std::vector<std::pair<CurveClass, CurveClass>>& relations,
                                       const FlowConfig& cfg, double start_tol, double along_tol) {
  LocusCheckResult out;
  auto gap_at = [&](const FNPoint& x) {
    Holonomy h = build_holonomy(chart, x);
    double g = 0.0;
    for (const auto& [a, b] : relations) {
      g = std::max(g, std::abs(curve_length(h, a) - curve_length(h, b)));
    }
    return g;
  };
  out.start_ok = gap_at(x0) <= start_tol;

  Trajectory traj = flow(chart, x0, cfg);
  for (const TrajectorySample& s : traj.samples) {
    out.max_gap = std::max(out.max_gap, gap_at(s.x));
  }
  out.preserved = out.max_gap <= along_tol;
  return out;
}

} // namespace teich
