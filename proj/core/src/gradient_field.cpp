#include "teichflow/gradient_field.hpp"

#include <cmath>
#include <numbers>

#include "teichflow/blending.hpp"
#include "teichflow/errors.hpp"
#include "teichflow/linalg.hpp"
#include "teichflow/systole.hpp"

namespace teich {

namespace {

// Weight of coordinate i in the twist-aligned coframe.
double wp_weight(const FNPoint& x, int i) { return 2.0 * x.l[i] / std::numbers::pi; }

double word_length_at(const Chart& chart, FNPoint x, const Word& w) {
  Holonomy h = build_holonomy(chart, x);
  return length_from_abs_trace(abs(h.eval(w).trace()));
}

} // namespace

Covector length_differential(const Holonomy& h, const CurveClass& c) {
  const Chart& chart = *h.chart;
  const int d = chart.dim;
  Covector out;
  out.dl.assign(d, 0.0);
  out.dtheta.assign(d, 0.0);
  if (c.kind == CurveClass::PANTS) {
    out.dl[c.index] = 1.0;
    return out;
  }
  // Central difference with one Richardson step per coordinate.
  auto deriv = [&](bool is_theta, int j) {
    double base = is_theta ? h.x.theta[j] : h.x.l[j];
    double hstep = is_theta ? 1e-3 : std::min(1e-3, h.x.l[j] / 4.0);
    auto fd = [&](double step) {
      FNPoint xp = h.x, xm = h.x;
      (is_theta ? xp.theta[j] : xp.l[j]) = base + step;
      (is_theta ? xm.theta[j] : xm.l[j]) = base - step;
      return (word_length_at(chart, xp, c.word) - word_length_at(chart, xm, c.word)) /
             (2.0 * step);
    };
    double d1 = fd(hstep);
    double d2 = fd(0.5 * hstep);
    return (4.0 * d2 - d1) / 3.0;
  };
  for (int j = 0; j < d; ++j) {
    out.dl[j] = deriv(false, j);
    out.dtheta[j] = deriv(true, j);
  }
  return out;
}

double inner_product(const MetricModel& m, const FNPoint& x, const Covector& a, const Covector& b) {
  const int d = int(x.l.size());
  double s = 0.0;
  if (m.kind == MetricModelKind::EUCLID_FN) {
    for (int i = 0; i < d; ++i) s += a.dl[i] * b.dl[i] + a.dtheta[i] * b.dtheta[i];
    return s;
  }
  for (int i = 0; i < d; ++i) {
    double ua = a.dl[i] + (x.theta[i] / x.l[i]) * a.dtheta[i];
    double ub = b.dl[i] + (x.theta[i] / x.l[i]) * b.dtheta[i];
    s += wp_weight(x, i) * (ua * ub + m.twist_scale * a.dtheta[i] * b.dtheta[i]);
  }
  return s;
}

TangentVector raise_covector(const MetricModel& m, const FNPoint& x, const Covector& a) {
  const int d = int(x.l.size());
  TangentVector v;
  v.dl.assign(d, 0.0);
  v.dtheta.assign(d, 0.0);
  if (m.kind == MetricModelKind::EUCLID_FN) {
    v.dl = a.dl;
    v.dtheta = a.dtheta;
    return v;
  }
  for (int i = 0; i < d; ++i) {
    // coframe components (u, v) against (dl_i, l_i d(theta_i/l_i)); the
    // dual vectors are (d/dl + (theta/l) d/dtheta, d/dtheta).
    double u = a.dl[i] + (x.theta[i] / x.l[i]) * a.dtheta[i];
    double w = wp_weight(x, i);
    v.dl[i] = w * u;
    v.dtheta[i] = w * (u * x.theta[i] / x.l[i] + m.twist_scale * a.dtheta[i]);
  }
  return v;
}

std::vector<double> gram_matrix(const MetricModel& m, const FNPoint& x,
                                const std::vector<CurveClass>& S) {
  const int n = int(S.size());
  for (const CurveClass& c : S) {
    if (c.kind != CurveClass::PANTS) {
      throw ChartViolation("active set contains transverse class " + curve_label(c) +
                           "; the chart cannot steer it");
    }
  }
  std::vector<double> G(size_t(n) * n, 0.0);
  const int d = int(x.l.size());
  for (int i = 0; i < n; ++i) {
    Covector a;
    a.dl.assign(d, 0.0);
    a.dtheta.assign(d, 0.0);
    a.dl[S[i].index] = 1.0;
    for (int j = i; j < n; ++j) {
      Covector b;
      b.dl.assign(d, 0.0);
      b.dtheta.assign(d, 0.0);
      b.dl[S[j].index] = 1.0;
      double v = inner_product(m, x, a, b);
      G[size_t(i) * n + j] = v;
      G[size_t(j) * n + i] = v;
    }
  }
  return G;
}

KappaSolve solve_kappa(const std::vector<double>& gram, const std::vector<double>& r) {
  const int n = int(r.size());
  SpdSolveResult s = solve_spd(n, gram, r);
  if (!s.ok) throw NumericalError("Gram matrix is not numerically SPD");
  if (s.condition > 1e12) {
    throw NumericalError("Gram matrix condition " + std::to_string(s.condition) +
                         " exceeds 1e12 guard");
  }
  if (s.residual > 1e-9) {
    throw NumericalError("Gram solve residual " + std::to_string(s.residual) + " exceeds 1e-9");
  }
  KappaSolve out;
  out.kappa = std::move(s.x);
  out.residual = s.residual;
  out.condition = s.condition;
  return out;
}

FieldEval vector_field(const Chart& chart, const FNPoint& x, double eps, BlendMode mode,
                       const MetricModel& metric, int max_word_length) {
  validate_point(chart, x);
  const int d = chart.dim;
  FieldEval out;
  out.V.dl.assign(d, 0.0);
  out.V.dtheta.assign(d, 0.0);

  SystoleResult sys = systole(chart, x, max_word_length);
  out.lambda = sys.lambda;
  out.phi = cutoff_phi(sys.lambda, eps);
  if (out.phi == 0.0) return out;  // lambda >= 3 eps: field vanishes

  ShortSet ss = short_set(chart, x, 3.0 * eps, max_word_length);
  if (ss.entries.empty()) return out;
  for (const ShortEntry& e : ss.entries) {
    out.active.push_back(e.cls);
    out.lengths.push_back(e.length);
  }

  out.gram = gram_matrix(metric, x, out.active);  // throws ChartViolation on word classes
  out.targets.assign(out.active.size(), 1.0);
  if (mode == BlendMode::BLENDED) {
    for (size_t i = 0; i < out.lengths.size(); ++i) out.targets[i] = blend_ramp(out.lengths[i], eps);
  }
  KappaSolve ks = solve_kappa(out.gram, out.targets);
  out.kappa = ks.kappa;
  out.residual = ks.residual;
  out.condition = ks.condition;

  for (size_t s = 0; s < out.active.size(); ++s) {
    Covector dls;
    dls.dl.assign(d, 0.0);
    dls.dtheta.assign(d, 0.0);
    dls.dl[out.active[s].index] = 1.0;
    TangentVector g = raise_covector(metric, x, dls);
    double w = out.phi * out.kappa[s];
    for (int i = 0; i < d; ++i) {
      out.V.dl[i] += w * g.dl[i];
      out.V.dtheta[i] += w * g.dtheta[i];
    }
  }
  return out;
}

} // namespace teich
