#include "teichflow/retraction_flow.hpp"

#include <algorithm>
#include <cmath>

#include "teichflow/errors.hpp"
#include "teichflow/systole.hpp"

namespace teich {

int default_word_length(const Chart& chart) { return chart.dim == 1 ? 12 : 8; }

namespace {

using State = std::vector<double>;  // (l_0..l_{d-1}, theta_0..theta_{d-1})

State pack(const FNPoint& x) {
  State y(x.l);
  y.insert(y.end(), x.theta.begin(), x.theta.end());
  return y;
}

FNPoint unpack(const State& y) {
  const size_t d = y.size() / 2;
  FNPoint x;
  x.l.assign(y.begin(), y.begin() + d);
  x.theta.assign(y.begin() + d, y.end());
  return x;
}

// Dormand-Prince 5(4) tableau.
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                 A64 = 49.0 / 176, A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784,
                 B6 = 11.0 / 84;
// 4th-order weights for the embedded error estimate.
constexpr double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920,
                 E5 = -17253.0 / 339200, E6 = 22.0 / 525, E7 = -1.0 / 40;

struct FieldRhs {
  const Chart& chart;
  const FlowConfig& cfg;
  int m;

  FieldEval eval_full(const State& y) const {
    return vector_field(chart, unpack(y), cfg.eps, cfg.mode, cfg.metric, m);
  }

  State operator()(const State& y) const {
    FieldEval fe = eval_full(y);
    State dy(fe.V.dl);
    dy.insert(dy.end(), fe.V.dtheta.begin(), fe.V.dtheta.end());
    return dy;
  }
};

void record_sample(std::vector<TrajectorySample>& samples, double t, const State& y,
                   const FieldEval& fe) {
  TrajectorySample s;
  s.t = t;
  s.x = unpack(y);
  s.lambda = fe.lambda;
  s.active = fe.active;
  // analytic rate of the minimal length: l-component of V at its argmin
  int argmin = 0;
  for (size_t i = 1; i < s.x.l.size(); ++i) {
    if (s.x.l[i] < s.x.l[argmin]) argmin = int(i);
  }
  s.rate = fe.V.dl.empty() ? 0.0 : fe.V.dl[argmin];
  samples.push_back(std::move(s));
}

} // namespace

Trajectory flow(const Chart& chart, const FNPoint& x0, const FlowConfig& cfg) {
  validate_point(chart, x0);
  const int m = cfg.max_word_length > 0 ? cfg.max_word_length : default_word_length(chart);
  const double t_end = cfg.duration >= 0.0 ? cfg.duration : cfg.eps;
  FieldRhs rhs{chart, cfg, m};

  Trajectory traj;
  State y = pack(x0);
  const size_t n = y.size();
  double t = 0.0;

  FieldEval fe0 = rhs.eval_full(y);
  record_sample(traj.samples, t, y, fe0);
  if (t_end == 0.0) return traj;

  State k1(fe0.V.dl);
  k1.insert(k1.end(), fe0.V.dtheta.begin(), fe0.V.dtheta.end());

  double h = std::min(cfg.init_step, t_end);
  State k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n);

  int steps = 0;
  while (t < t_end) {
    if (++steps > cfg.max_steps) {
      throw NumericalError("flow exceeded max_steps = " + std::to_string(cfg.max_steps));
    }
    h = std::min(h, t_end - t);
    if (h < 1e-14 * std::max(1.0, std::abs(t))) {
      throw NumericalError("flow step size underflow at t = " + std::to_string(t));
    }

    for (size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * A21 * k1[i];
    k2 = rhs(ytmp);
    for (size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * (A31 * k1[i] + A32 * k2[i]);
    k3 = rhs(ytmp);
    for (size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * (A41 * k1[i] + A42 * k2[i] + A43 * k3[i]);
    k4 = rhs(ytmp);
    for (size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (A51 * k1[i] + A52 * k2[i] + A53 * k3[i] + A54 * k4[i]);
    k5 = rhs(ytmp);
    for (size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (A61 * k1[i] + A62 * k2[i] + A63 * k3[i] + A64 * k4[i] + A65 * k5[i]);
    k6 = rhs(ytmp);
    for (size_t i = 0; i < n; ++i)
      ynew[i] = y[i] + h * (B1 * k1[i] + B3 * k3[i] + B4 * k4[i] + B5 * k5[i] + B6 * k6[i]);

    FieldEval fe_new = rhs.eval_full(ynew);  // FSAL stage, reused as next k1
    k7 = State(fe_new.V.dl);
    k7.insert(k7.end(), fe_new.V.dtheta.begin(), fe_new.V.dtheta.end());

    double err = 0.0;
    for (size_t i = 0; i < n; ++i) {
      double e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
      double sc = cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err += (e / sc) * (e / sc);
    }
    err = std::sqrt(err / double(n));

    if (err <= 1.0) {
      t += h;
      y = ynew;
      k1 = k7;
      record_sample(traj.samples, t, y, fe_new);
      ++traj.steps_accepted;
    } else {
      ++traj.steps_rejected;
    }
    double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    h *= std::clamp(fac, 0.2, 5.0);
  }

  // Post: systole nondecreasing along samples within 1e-6.
  for (size_t i = 1; i < traj.samples.size(); ++i) {
    if (traj.samples[i].lambda < traj.samples[i - 1].lambda - 1e-6) {
      throw NumericalError("systole decreased along flow at t = " +
                           std::to_string(traj.samples[i].t));
    }
  }
  return traj;
}

Trajectory retract(const Chart& chart, const FNPoint& x0, const FlowConfig& cfg) {
  validate_point(chart, x0);
  const int m = cfg.max_word_length > 0 ? cfg.max_word_length : default_word_length(chart);
  SystoleResult sys = systole(chart, x0, m);
  if (sys.lambda >= 3.0 * cfg.eps) {
    // Already deep in the thick part: exact fixed point.
    Trajectory traj;
    TrajectorySample s;
    s.t = 0.0;
    s.x = x0;
    s.lambda = sys.lambda;
    s.rate = 0.0;
    traj.samples.push_back(std::move(s));
    return traj;
  }
  FlowConfig run = cfg;
  run.duration = cfg.eps;
  Trajectory traj = flow(chart, x0, run);
  double lam_end = systole(chart, traj.endpoint(), m).lambda;
  if (lam_end < cfg.eps - 1e-6) {
    throw NumericalError("retraction endpoint systole " + std::to_string(lam_end) +
                         " below eps - 1e-6");
  }
  return traj;
}

} // namespace teich
