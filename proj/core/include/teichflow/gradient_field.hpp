#pragma once

// Length differentials, metric models, Gram systems, and the steering
// vector field V used by the retraction flow.
//
// Metric models on the chart:
//  - EUCLID_FN: the literal Euclidean metric on raw (l, theta); simple
//    but not twist-equivariant.
//  - MODEL_WP: diag(2 l_i / pi) in the twist-aligned coframe
//    (dl_i, l_i d(theta_i/l_i)); length gradients then preserve twist
//    fractions theta_i/l_i, which is what makes the flow commute with
//    Dehn twists. The twist block can be rescaled (twist_scale), which
//    does not affect length gradients.
//
// V = phi(Lambda, eps) * sum_sigma kappa_sigma grad l_sigma over the
// active set S = {classes with length <= 3 eps}, with kappa solving
// Gram(S) kappa = r. NAIVE mode: r = 1. BLENDED mode: r_sigma =
// ramp(l_sigma) so curves leaving the thin part are released smoothly
// (this is what removes the active-set discontinuity).

#include <vector>

#include "teichflow/fn_chart.hpp"
#include "teichflow/holonomy.hpp"

namespace teich {

enum class MetricModelKind { EUCLID_FN, MODEL_WP };

struct MetricModel {
  MetricModelKind kind = MetricModelKind::MODEL_WP;
  double twist_scale = 1.0;  // scale of the twist block; cosmetic for length flows
};

struct Covector {
  std::vector<double> dl, dtheta;
};

struct TangentVector {
  std::vector<double> dl, dtheta;
};

enum class BlendMode { NAIVE, BLENDED };

// Differential of the length function of a curve class at x. Pants curves
// are exact unit covectors in their coordinate; transverse words use
// central differences with one Richardson step on the dd matrix lengths
// (relative accuracy ~1e-7; requires lengths > 2h).
Covector length_differential(const Holonomy& h, const CurveClass& c);

// Co-metric pairing of two covectors at x.
double inner_product(const MetricModel& m, const FNPoint& x, const Covector& a, const Covector& b);

// Raise a covector to a tangent vector.
TangentVector raise_covector(const MetricModel& m, const FNPoint& x, const Covector& a);

// Gram matrix of length gradients of S (row-major |S| x |S|). All classes
// must be pants curves; a transverse class throws ChartViolation.
std::vector<double> gram_matrix(const MetricModel& m, const FNPoint& x,
                                const std::vector<CurveClass>& S);

struct KappaSolve {
  std::vector<double> kappa;
  double residual = 0.0;   // inf-norm, checked <= 1e-9
  double condition = 0.0;  // 1-norm estimate, guarded <= 1e12
};

// Solve Gram * kappa = r with residual and conditioning guards.
KappaSolve solve_kappa(const std::vector<double>& gram, const std::vector<double>& r);

struct FieldEval {
  TangentVector V;                  // zero-sized -> zero field (lambda >= 3 eps)
  double lambda = 0.0;
  double phi = 0.0;
  std::vector<CurveClass> active;   // short set, sorted by length
  std::vector<double> lengths;
  std::vector<double> targets;      // r
  std::vector<double> kappa;
  std::vector<double> gram;         // row-major
  double residual = 0.0;
  double condition = 0.0;
};

// Evaluate V at x. Certificate-aware: on the thin part no holonomy is
// built at all, which keeps flow right-hand sides cheap.
FieldEval vector_field(const Chart& chart, const FNPoint& x, double eps, BlendMode mode,
                       const MetricModel& metric, int max_word_length);

} // namespace teich
