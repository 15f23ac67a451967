#pragma once

// Integration of the steering field: adaptive Dormand-Prince RK45 on the
// chart coordinates, trajectory recording with the systole and its rate
// at every accepted step, and the retraction onto the truncated part
// (flow for duration eps; points already eps-thick are exact fixed
// points).

#include <vector>

#include "teichflow/fn_chart.hpp"
#include "teichflow/gradient_field.hpp"

namespace teich {

struct FlowConfig {
  double eps = 0.05;
  double duration = -1.0;          // < 0: defaults to eps
  BlendMode mode = BlendMode::BLENDED;
  MetricModel metric;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double init_step = 1e-3;
  int max_steps = 200000;
  int max_word_length = 0;         // 0: chart default (12 if dim == 1 else 8)
};

int default_word_length(const Chart& chart);

struct TrajectorySample {
  double t = 0.0;
  FNPoint x;
  double lambda = 0.0;
  double rate = 0.0;                 // analytic d/dt of the minimal length at x
  std::vector<CurveClass> active;    // classes with length <= 3 eps
};

struct Trajectory {
  std::vector<TrajectorySample> samples;   // t = 0 first, endpoint last
  int steps_accepted = 0;
  int steps_rejected = 0;

  const FNPoint& endpoint() const { return samples.back().x; }
};

// Integrate for cfg.duration. Post: the systole along the recorded samples
// is nondecreasing within 1e-6 (violation throws NumericalError).
Trajectory flow(const Chart& chart, const FNPoint& x0, const FlowConfig& cfg);

// Flow for duration eps; returns x0 exactly (single-sample trajectory)
// when Lambda(x0) >= 3 eps already. Post: endpoint is eps-thick.
Trajectory retract(const Chart& chart, const FNPoint& x0, const FlowConfig& cfg);

} // namespace teich
