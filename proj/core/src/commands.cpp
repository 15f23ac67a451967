#include "teichflow/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "teichflow/blending.hpp"
#include "teichflow/errors.hpp"
#include "teichflow/gradient_field.hpp"
#include "teichflow/holonomy.hpp"
#include "teichflow/mcg_action.hpp"
#include "teichflow/retraction_flow.hpp"
#include "teichflow/rng.hpp"
#include "teichflow/systole.hpp"

namespace teich {

using json = nlohmann::json;

namespace {

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct ArtifactWriter {
  const RunConfig& cfg;
  std::vector<std::string> written;

  std::string path(const std::string& name) const {
    return (std::filesystem::path(cfg.out_dir) / name).string();
  }

  void write_json(const std::string& name, json j) {
    std::filesystem::create_directories(cfg.out_dir);
    j["command"] = cfg.command;
    j["config_hash"] = cfg.config_hash_hex();
    j["surface"] = {{"genus", cfg.surface.genus}, {"punctures", cfg.surface.punctures}};
    std::ofstream out(path(name));
    if (!out) throw SchemaError("cannot write artifact " + path(name));
    out << j.dump(2) << "\n";
    written.push_back(path(name));
  }

  void write_csv(const std::string& name, const std::string& header,
                 const std::vector<std::string>& rows) {
    std::filesystem::create_directories(cfg.out_dir);
    std::ofstream out(path(name));
    if (!out) throw SchemaError("cannot write artifact " + path(name));
    out << "# config_hash=" << cfg.config_hash_hex() << "\n" << header << "\n";
    for (const auto& r : rows) out << r << "\n";
    written.push_back(path(name));
  }
};

const FNPoint& require_point(const RunConfig& cfg) {
  if (!cfg.point) throw SchemaError("config: command \"" + cfg.command + "\" requires a point");
  return *cfg.point;
}

int word_length(const RunConfig& cfg, const Chart& chart) {
  return cfg.max_word_length > 0 ? cfg.max_word_length : default_word_length(chart);
}

json point_json(const FNPoint& x) {
  return {{"lengths", x.l}, {"twists", x.theta}};
}

json entries_json(const std::vector<ShortEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries) {
    out.push_back({{"label", curve_label(e.cls)},
                   {"kind", e.cls.kind == CurveClass::PANTS ? "pants" : "word"},
                   {"length", e.length}});
  }
  return out;
}

std::string traj_header(int d) {
  std::string h = "time";
  for (int i = 0; i < d; ++i) h += ",l_" + std::to_string(i + 1);
  for (int i = 0; i < d; ++i) h += ",theta_" + std::to_string(i + 1);
  h += ",lambda,rate,active";
  return h;
}

std::vector<std::string> traj_rows(const Trajectory& traj) {
  std::vector<std::string> rows;
  for (const auto& s : traj.samples) {
    std::string r = g17(s.t);
    for (double v : s.x.l) r += "," + g17(v);
    for (double v : s.x.theta) r += "," + g17(v);
    r += "," + g17(s.lambda) + "," + g17(s.rate) + ",";
    for (size_t i = 0; i < s.active.size(); ++i) {
      if (i) r += ";";
      r += curve_label(s.active[i]);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---- commands -----------------------------------------------------------

void cmd_systole(const RunConfig& cfg, ArtifactWriter& w) {
  Chart chart = make_chart(cfg.surface);
  const FNPoint& x = require_point(cfg);
  int m = word_length(cfg, chart);
  SystoleResult sys = systole(chart, x, m);
  ShortSet ss = short_set(chart, x, 3.0 * cfg.eps, m);

  json j;
  j["point"] = point_json(x);
  j["epsilon"] = cfg.eps;
  j["lambda"] = sys.lambda;
  j["certified"] = sys.certified;
  j["in_truncated"] = sys.lambda >= cfg.eps - 1e-12;
  json realizers = json::array();
  for (const auto& c : sys.realizers) realizers.push_back(curve_label(c));
  j["realizers"] = realizers;
  j["short_set"] = {{"threshold", ss.threshold},
                    {"enumerated", ss.enumerated},
                    {"max_word_length", ss.max_word_length},
                    {"entries", entries_json(ss.entries)}};
  w.write_json("systole.json", j);

  std::vector<std::string> rows;
  for (const auto& e : ss.entries) {
    rows.push_back(curve_label(e.cls) + "," +
                   (e.cls.kind == CurveClass::PANTS ? "pants" : "word") + "," + g17(e.length));
  }
  w.write_csv("systole.csv", "label,kind,length", rows);
}

void cmd_flow(const RunConfig& cfg, ArtifactWriter& w) {
  Chart chart = make_chart(cfg.surface);
  const FNPoint& x = require_point(cfg);
  Trajectory traj = flow(chart, x, cfg.flow);

  w.write_csv("trajectory.csv", traj_header(chart.dim), traj_rows(traj));

  const auto& first = traj.samples.front();
  const auto& last = traj.samples.back();
  double rate_min = 0.0, rate_max = 0.0;
  bool any = false;
  for (const auto& s : traj.samples) {
    if (s.lambda <= 2.0 * cfg.eps) {
      if (!any) {
        rate_min = rate_max = s.rate;
        any = true;
      }
      rate_min = std::min(rate_min, s.rate);
      rate_max = std::max(rate_max, s.rate);
    }
  }
  json j;
  j["start"] = point_json(first.x);
  j["end"] = point_json(last.x);
  j["duration"] = last.t;
  j["lambda_start"] = first.lambda;
  j["lambda_end"] = last.lambda;
  j["steps_accepted"] = traj.steps_accepted;
  j["steps_rejected"] = traj.steps_rejected;
  j["unit_speed_window"] = {{"applicable", any}, {"rate_min", rate_min}, {"rate_max", rate_max}};
  w.write_json("flow_summary.json", j);
}

void cmd_retract(const RunConfig& cfg, ArtifactWriter& w) {
  Chart chart = make_chart(cfg.surface);
  const FNPoint& x = require_point(cfg);
  int m = word_length(cfg, chart);
  Trajectory traj = retract(chart, x, cfg.flow);

  w.write_csv("trajectory.csv", traj_header(chart.dim), traj_rows(traj));

  json j;
  j["start"] = point_json(x);
  j["end"] = point_json(traj.endpoint());
  j["fixed_point"] = traj.samples.size() == 1;
  j["lambda_start"] = traj.samples.front().lambda;
  j["lambda_end"] = systole(chart, traj.endpoint(), m).lambda;
  j["in_truncated"] = in_truncated(chart, traj.endpoint(), cfg.eps, m);
  j["epsilon"] = cfg.eps;
  w.write_json("retract.json", j);
}

void cmd_gram(const RunConfig& cfg, ArtifactWriter& w) {
  Chart chart = make_chart(cfg.surface);
  const FNPoint& x = require_point(cfg);
  FieldEval fe = vector_field(chart, x, cfg.eps, cfg.mode, cfg.metric, word_length(cfg, chart));

  json j;
  j["point"] = point_json(x);
  j["epsilon"] = cfg.eps;
  j["mode"] = cfg.mode == BlendMode::BLENDED ? "BLENDED" : "NAIVE";
  j["lambda"] = fe.lambda;
  j["phi"] = fe.phi;
  json act = json::array();
  for (const auto& c : fe.active) act.push_back(curve_label(c));
  j["active"] = act;
  j["lengths"] = fe.lengths;
  const int nS = int(fe.active.size());
  json G = json::array();
  for (int i = 0; i < nS; ++i) {
    json row = json::array();
    for (int k = 0; k < nS; ++k) row.push_back(fe.gram[size_t(i) * nS + k]);
    G.push_back(row);
  }
  j["gram"] = G;
  j["targets"] = fe.targets;
  j["kappa"] = fe.kappa;
  j["residual"] = fe.residual;
  j["condition"] = fe.condition;
  j["field"] = {{"dl", fe.V.dl}, {"dtheta", fe.V.dtheta}};
  w.write_json("gram.json", j);
}

void cmd_equivariance(const RunConfig& cfg, ArtifactWriter& w) {
  Chart chart = make_chart(cfg.surface);
  const FNPoint& x = require_point(cfg);
  if (cfg.mapping_class.empty()) {
    throw SchemaError("config: equivariance requires a mapping_class");
  }
  EquivarianceResult r = equivariance_check(chart, x, cfg.mapping_class, cfg.flow);

  const double tol = 1e-6;
  bool pass = r.discrepancy <= tol && r.lambda_invariant;
  json j;
  j["point"] = point_json(x);
  j["discrepancy"] = r.discrepancy;
  j["tolerance"] = tol;
  j["lambda_invariant"] = r.lambda_invariant;
  j["twisted_then_retracted"] = point_json(r.twisted_then_retracted);
  j["retracted_then_twisted"] = point_json(r.retracted_then_twisted);
  j["pass"] = pass;
  w.write_json("equivariance.json", j);
  if (!pass) {
    throw PropertyError("equivariance discrepancy " + std::to_string(r.discrepancy) +
                        " exceeds 1e-6 or systole not twist-invariant");
  }
}

void cmd_continuity(const RunConfig& cfg, ArtifactWriter& w) {
  Chart chart = make_chart(cfg.surface);
  if (chart.dim < 2) {
    throw SchemaError("config: continuity-demo needs a chart with >= 2 pants curves");
  }
  const double eps = cfg.eps;
  const double sep = cfg.continuity.separation;
  const double l0 = cfg.continuity.straddle_l > 0.0 ? cfg.continuity.straddle_l : 3.0 * eps;
  const int m = word_length(cfg, chart);

  auto base_point = [&](double straddle) {
    FNPoint x;
    x.l.assign(chart.dim, cfg.continuity.companion_l);
    x.theta.assign(chart.dim, 0.0);
    x.l[0] = straddle;
    return x;
  };
  auto norm_inf = [](const TangentVector& v) {
    double r = 0.0;
    for (double a : v.dl) r = std::max(r, std::abs(a));
    for (double a : v.dtheta) r = std::max(r, std::abs(a));
    return r;
  };
  auto diff_inf = [](const TangentVector& a, const TangentVector& b) {
    double r = 0.0;
    for (size_t i = 0; i < a.dl.size(); ++i) r = std::max(r, std::abs(a.dl[i] - b.dl[i]));
    for (size_t i = 0; i < a.dtheta.size(); ++i)
      r = std::max(r, std::abs(a.dtheta[i] - b.dtheta[i]));
    return r;
  };

  // The headline pair straddles the release threshold l_0 = 3 eps.
  FNPoint xm = base_point(l0 - 0.5 * sep);
  FNPoint xp = base_point(l0 + 0.5 * sep);
  FieldEval nm = vector_field(chart, xm, eps, BlendMode::NAIVE, cfg.metric, m);
  FieldEval np = vector_field(chart, xp, eps, BlendMode::NAIVE, cfg.metric, m);
  FieldEval bm = vector_field(chart, xm, eps, BlendMode::BLENDED, cfg.metric, m);
  FieldEval bp = vector_field(chart, xp, eps, BlendMode::BLENDED, cfg.metric, m);

  double naive_jump = diff_inf(nm.V, np.V);
  double naive_norm = std::max(norm_inf(nm.V), norm_inf(np.V));
  double blended_delta = diff_inf(bm.V, bp.V);
  const double K = cfg.continuity.lipschitz_bound;

  // Sweep: nearby pairs across the transition zone must stay K-Lipschitz
  // for the blended field.
  Rng rng(cfg.seed);
  double max_ratio = 0.0;
  int violations = 0;
  std::vector<std::string> rows;
  for (int i = 0; i < cfg.samples.count; ++i) {
    double base = rng.uniform(1.5 * eps, 3.0 * eps + 2.0 * sep);
    FNPoint a = base_point(base);
    FNPoint b = base_point(base + sep);
    for (int k = 0; k < chart.dim; ++k) {
      double frac = rng.uniform(-1.0, 1.0);
      a.theta[k] = frac * a.l[k];
      b.theta[k] = frac * b.l[k];
    }
    FieldEval fa = vector_field(chart, a, eps, BlendMode::BLENDED, cfg.metric, m);
    FieldEval fb = vector_field(chart, b, eps, BlendMode::BLENDED, cfg.metric, m);
    double ratio = diff_inf(fa.V, fb.V) / sep;
    max_ratio = std::max(max_ratio, ratio);
    if (ratio > K) ++violations;
    rows.push_back(std::to_string(i) + "," + g17(base) + "," + g17(ratio));
  }

  bool naive_jumps = naive_jump > 0.1 * naive_norm;
  bool blended_ok = blended_delta <= K * sep && violations == 0;

  json j;
  j["epsilon"] = eps;
  j["separation"] = sep;
  j["straddle_l"] = l0;
  j["naive_jump"] = naive_jump;
  j["naive_field_norm"] = naive_norm;
  j["blended_delta"] = blended_delta;
  j["lipschitz_bound"] = K;
  j["sweep"] = {{"pairs", cfg.samples.count},
                {"max_ratio", max_ratio},
                {"violations", violations}};
  j["naive_discontinuous"] = naive_jumps;
  j["blended_lipschitz"] = blended_ok;
  j["pass"] = naive_jumps && blended_ok;
  w.write_json("continuity.json", j);
  w.write_csv("continuity_pairs.csv", "pair,straddle_l,lipschitz_ratio", rows);

  if (!(naive_jumps && blended_ok)) {
    throw PropertyError("continuity-demo expectations unmet: naive_jump = " +
                        std::to_string(naive_jump) + ", blended_delta = " +
                        std::to_string(blended_delta));
  }
}

void cmd_cover(const RunConfig& cfg, ArtifactWriter& w) {
  Chart chart = make_chart(cfg.surface);
  if (cfg.boxes.empty()) throw SchemaError("config: cover-check requires boxes or boxes_file");
  const int m = word_length(cfg, chart);

  Rng rng(cfg.seed);
  int covered = 0;
  std::vector<std::string> rows;
  json uncovered = json::array();
  for (int s = 0; s < cfg.samples.count; ++s) {
    FNPoint x;
    x.l.resize(chart.dim);
    x.theta.resize(chart.dim);
    for (int i = 0; i < chart.dim; ++i) {
      x.l[i] = rng.log_uniform(cfg.samples.l_min, cfg.samples.l_max);
      x.theta[i] = rng.uniform(-cfg.samples.twist_frac_max, cfg.samples.twist_frac_max) * x.l[i];
    }
    if (!in_truncated(chart, x, cfg.eps, m)) {
      throw PropertyError("cover-check sample escaped the eps-truncated part; tighten samples.l_min");
    }
    int box = -1;
    for (size_t b = 0; b < cfg.boxes.size(); ++b) {
      if (in_bers_box(x, cfg.boxes[b])) {
        box = int(b);
        break;
      }
    }
    if (box >= 0) ++covered;
    else uncovered.push_back(point_json(x));
    std::string r = std::to_string(s);
    for (double v : x.l) r += "," + g17(v);
    for (double v : x.theta) r += "," + g17(v);
    r += "," + std::to_string(box);
    rows.push_back(std::move(r));
  }

  json j;
  j["epsilon"] = cfg.eps;
  j["samples"] = cfg.samples.count;
  j["covered"] = covered;
  j["uncovered"] = uncovered;
  j["boxes"] = json::array();
  for (const auto& b : cfg.boxes) {
    j["boxes"].push_back({{"l_min", b.l_min}, {"l_max", b.l_max}, {"theta_abs", b.theta_abs}});
  }
  j["pass"] = covered == cfg.samples.count;
  w.write_json("cover.json", j);

  std::string header = "sample";
  for (int i = 0; i < chart.dim; ++i) header += ",l_" + std::to_string(i + 1);
  for (int i = 0; i < chart.dim; ++i) header += ",theta_" + std::to_string(i + 1);
  header += ",box";
  w.write_csv("cover.csv", header, rows);

  if (covered != cfg.samples.count) {
    throw PropertyError("cover-check: " + std::to_string(cfg.samples.count - covered) +
                        " samples not covered by the box family");
  }
}

} // namespace

std::vector<std::string> run_command(const RunConfig& cfg) {
  ArtifactWriter w{cfg, {}};
  if (cfg.command == "systole") cmd_systole(cfg, w);
  else if (cfg.command == "flow") cmd_flow(cfg, w);
  else if (cfg.command == "retract") cmd_retract(cfg, w);
  else if (cfg.command == "gram") cmd_gram(cfg, w);
  else if (cfg.command == "equivariance") cmd_equivariance(cfg, w);
  else if (cfg.command == "continuity-demo") cmd_continuity(cfg, w);
  else if (cfg.command == "cover-check") cmd_cover(cfg, w);
  else throw SchemaError("unknown command \"" + cfg.command + "\"");
  return w.written;
}

} // namespace teich
