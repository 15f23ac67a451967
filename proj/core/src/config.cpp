#include "teichflow/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "teichflow/errors.hpp"

namespace teich {

using json = nlohmann::json;

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string RunConfig::config_hash_hex() const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "0x%016llx", (unsigned long long)config_hash);
  return buf;
}

namespace {

[[noreturn]] void fail(const std::string& msg) { throw SchemaError("config: " + msg); }

double get_num(const json& j, const char* key, double dflt, double lo, double hi) {
  if (!j.contains(key)) return dflt;
  if (!j[key].is_number()) fail(std::string(key) + " must be a number");
  double v = j[key].get<double>();
  if (!(v >= lo && v <= hi)) {
    fail(std::string(key) + " = " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
         std::to_string(hi) + "]");
  }
  return v;
}

int get_int(const json& j, const char* key, int dflt, int lo, int hi) {
  if (!j.contains(key)) return dflt;
  if (!j[key].is_number_integer()) fail(std::string(key) + " must be an integer");
  long long v = j[key].get<long long>();
  if (v < lo || v > hi) fail(std::string(key) + " outside valid range");
  return int(v);
}

const std::vector<std::string> kCommands = {"systole",     "flow",           "retract",
                                            "gram",        "equivariance",   "continuity-demo",
                                            "cover-check"};

RunConfig from_json(const json& j, const ConfigOverrides& ov) {
  if (!j.is_object()) fail("top level must be an object");
  RunConfig c;

  if (ov.command) {
    c.command = *ov.command;
  } else if (j.contains("command")) {
    if (!j["command"].is_string()) fail("command must be a string");
    c.command = j["command"].get<std::string>();
  } else {
    fail("no command given (config \"command\" or --command)");
  }
  bool known = false;
  for (const auto& k : kCommands) known = known || (k == c.command);
  if (!known) fail("unknown command \"" + c.command + "\"");

  if (!j.contains("surface") || !j["surface"].is_object()) fail("surface object required");
  c.surface.genus = get_int(j["surface"], "genus", -1, 0, 8);
  c.surface.punctures = get_int(j["surface"], "punctures", -1, 0, 16);
  if (c.surface.genus < 0 || c.surface.punctures < 0) fail("surface needs genus and punctures");

  c.eps = get_num(j, "epsilon", 0.05, 1e-6, 0.1);

  if (j.contains("mode")) {
    std::string m = j["mode"].is_string() ? j["mode"].get<std::string>() : "";
    if (m == "BLENDED") c.mode = BlendMode::BLENDED;
    else if (m == "NAIVE") c.mode = BlendMode::NAIVE;
    else fail("mode must be \"BLENDED\" or \"NAIVE\"");
  }

  if (j.contains("metric")) {
    const json& mj = j["metric"];
    if (!mj.is_object()) fail("metric must be an object");
    std::string model = mj.value("model", std::string("MODEL_WP"));
    if (model == "MODEL_WP") c.metric.kind = MetricModelKind::MODEL_WP;
    else if (model == "EUCLID_FN") c.metric.kind = MetricModelKind::EUCLID_FN;
    else fail("metric.model must be \"MODEL_WP\" or \"EUCLID_FN\"");
    c.metric.twist_scale = get_num(mj, "twist_scale", 1.0, 1e-6, 1e6);
  }

  const json fj = j.contains("flow") ? j["flow"] : json::object();
  if (!fj.is_object()) fail("flow must be an object");
  c.flow.duration = get_num(fj, "duration", -1.0, -1.0, 1e3);
  c.flow.rel_tol = get_num(fj, "rel_tol", 1e-10, 1e-14, 1e-2);
  c.flow.abs_tol = get_num(fj, "abs_tol", 1e-12, 1e-16, 1e-2);
  c.flow.init_step = get_num(fj, "init_step", 1e-3, 1e-12, 1.0);
  c.flow.max_steps = get_int(fj, "max_steps", 200000, 10, 100000000);

  c.max_word_length = get_int(j, "max_word_length", 0, 0, 16);

  if (j.contains("point")) {
    const json& pj = j["point"];
    if (!pj.is_object() || !pj.contains("lengths") || !pj.contains("twists") ||
        !pj["lengths"].is_array() || !pj["twists"].is_array()) {
      fail("point must be {\"lengths\": [...], \"twists\": [...]}");
    }
    FNPoint p;
    for (const auto& v : pj["lengths"]) {
      if (!v.is_number()) fail("point.lengths entries must be numbers");
      p.l.push_back(v.get<double>());
    }
    for (const auto& v : pj["twists"]) {
      if (!v.is_number()) fail("point.twists entries must be numbers");
      p.theta.push_back(v.get<double>());
    }
    c.point = p;
  }

  if (j.contains("mapping_class")) {
    if (!j["mapping_class"].is_array()) fail("mapping_class must be an array of [curve, power]");
    for (const auto& e : j["mapping_class"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        fail("mapping_class entries must be [curve, power] integer pairs");
      }
      c.mapping_class.push_back({e[0].get<int>(), e[1].get<int>()});
    }
  }

  if (j.contains("samples")) {
    const json& sj = j["samples"];
    if (!sj.is_object()) fail("samples must be an object");
    c.samples.count = get_int(sj, "count", c.samples.count, 1, 1000000);
    c.samples.l_min = get_num(sj, "l_min", c.samples.l_min, 1e-6, kMaxLength);
    c.samples.l_max = get_num(sj, "l_max", c.samples.l_max, 1e-6, kMaxLength);
    c.samples.twist_frac_max = get_num(sj, "twist_frac_max", c.samples.twist_frac_max, 0.0, 64.0);
    c.samples.thin_l_max = get_num(sj, "thin_l_max", c.samples.thin_l_max, 1e-6, kMaxLength);
    if (c.samples.l_min > c.samples.l_max) fail("samples.l_min > samples.l_max");
  }

  if (j.contains("continuity")) {
    const json& cj = j["continuity"];
    if (!cj.is_object()) fail("continuity must be an object");
    c.continuity.separation = get_num(cj, "separation", c.continuity.separation, 1e-9, 1e-1);
    c.continuity.lipschitz_bound =
        get_num(cj, "lipschitz_bound", c.continuity.lipschitz_bound, 1e-3, 1e9);
    c.continuity.straddle_l = get_num(cj, "straddle_l", 0.0, 0.0, kMaxLength);
    c.continuity.companion_l = get_num(cj, "companion_l", c.continuity.companion_l, 1e-4, kMaxLength);
  }

  json boxes = json::array();
  if (j.contains("boxes_file")) {
    if (!j["boxes_file"].is_string()) fail("boxes_file must be a path string");
    std::ifstream in(j["boxes_file"].get<std::string>());
    if (!in) fail("cannot open boxes_file " + j["boxes_file"].get<std::string>());
    json bf;
    try {
      in >> bf;
    } catch (const json::exception& e) {
      fail("boxes_file parse error: " + std::string(e.what()));
    }
    if (!bf.is_object() || !bf.contains("boxes")) fail("boxes_file must contain a boxes array");
    boxes = bf["boxes"];
  } else if (j.contains("boxes")) {
    boxes = j["boxes"];
  }
  if (!boxes.is_array()) fail("boxes must be an array");
  for (const auto& b : boxes) {
    if (!b.is_object()) fail("each box must be an object");
    BersBox box;
    box.l_min = get_num(b, "l_min", -1.0, 0.0, kMaxLength);
    box.l_max = get_num(b, "l_max", -1.0, 0.0, kMaxLength);
    box.theta_abs = get_num(b, "theta_abs", -1.0, 0.0, 1e6);
    if (box.l_min < 0 || box.l_max < 0 || box.theta_abs < 0 || box.l_min > box.l_max) {
      fail("box requires 0 <= l_min <= l_max and theta_abs >= 0");
    }
    c.boxes.push_back(box);
  }

  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer()) fail("seed must be an integer");
    c.seed = j["seed"].get<uint64_t>();
  }
  if (ov.seed) c.seed = *ov.seed;

  if (j.contains("out")) {
    if (!j["out"].is_string()) fail("out must be a path string");
    c.out_dir = j["out"].get<std::string>();
  }
  if (ov.out_dir) c.out_dir = *ov.out_dir;

  // Keep the flow config self-contained.
  c.flow.eps = c.eps;
  c.flow.mode = c.mode;
  c.flow.metric = c.metric;
  c.flow.max_word_length = c.max_word_length;

  // Canonical effective config (defaults materialized; out excluded).
  json eff;
  eff["command"] = c.command;
  eff["surface"] = {{"genus", c.surface.genus}, {"punctures", c.surface.punctures}};
  eff["epsilon"] = c.eps;
  eff["mode"] = (c.mode == BlendMode::BLENDED) ? "BLENDED" : "NAIVE";
  eff["metric"] = {{"model", c.metric.kind == MetricModelKind::MODEL_WP ? "MODEL_WP" : "EUCLID_FN"},
                   {"twist_scale", c.metric.twist_scale}};
  eff["flow"] = {{"duration", c.flow.duration}, {"rel_tol", c.flow.rel_tol},
                 {"abs_tol", c.flow.abs_tol},   {"init_step", c.flow.init_step},
                 {"max_steps", c.flow.max_steps}};
  eff["max_word_length"] = c.max_word_length;
  if (c.point) {
    eff["point"] = {{"lengths", c.point->l}, {"twists", c.point->theta}};
  }
  if (!c.mapping_class.empty()) {
    json mc = json::array();
    for (const auto& f : c.mapping_class) mc.push_back({f.curve, f.power});
    eff["mapping_class"] = mc;
  }
  eff["samples"] = {{"count", c.samples.count},
                    {"l_min", c.samples.l_min},
                    {"l_max", c.samples.l_max},
                    {"twist_frac_max", c.samples.twist_frac_max},
                    {"thin_l_max", c.samples.thin_l_max}};
  eff["continuity"] = {{"separation", c.continuity.separation},
                       {"lipschitz_bound", c.continuity.lipschitz_bound},
                       {"straddle_l", c.continuity.straddle_l},
                       {"companion_l", c.continuity.companion_l}};
  if (!c.boxes.empty()) {
    json bj = json::array();
    for (const auto& b : c.boxes) {
      bj.push_back({{"l_min", b.l_min}, {"l_max", b.l_max}, {"theta_abs", b.theta_abs}});
    }
    eff["boxes"] = bj;
  }
  eff["seed"] = c.seed;

  c.canonical_json = eff.dump();
  c.config_hash = fnv1a64(c.canonical_json);
  return c;
}

} // namespace

RunConfig parse_config(const std::string& json_text, const ConfigOverrides& ov) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("config: JSON parse error: ") + e.what());
  }
  return from_json(j, ov);
}

RunConfig load_config(const std::string& path, const ConfigOverrides& ov) {
  std::ifstream in(path);
  if (!in) throw SchemaError("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), ov);
}

} // namespace teich
