#pragma once

// Run configuration: JSON in, validated struct out, with a canonical
// re-serialization of the effective configuration (defaults materialized,
// CLI overrides applied) hashed by FNV-1a 64 and stamped into every
// artifact. The output directory is deliberately excluded from the hash
// so identical runs into different directories produce identical bytes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "teichflow/fn_chart.hpp"
#include "teichflow/mcg_action.hpp"
#include "teichflow/retraction_flow.hpp"
#include "teichflow/systole.hpp"

namespace teich {

struct SampleSpec {
  int count = 100;
  double l_min = 0.05;
  double l_max = 2.5;
  double twist_frac_max = 1.5;   // twists sampled as fraction * length in [-max, max]
  double thin_l_max = 0.09;      // forced short-curve ceiling for thin sampling
};

struct ContinuitySpec {
  double separation = 2e-4;       // coordinate gap of each straddle pair
  double lipschitz_bound = 1000;  // pinned K for the blended field
  double straddle_l = 0.0;        // 0: defaults to 3*eps
  double companion_l = 0.02;      // length of the always-active companion curve
};

struct RunConfig {
  std::string command;
  SurfaceType surface{1, 1};
  double eps = 0.05;
  BlendMode mode = BlendMode::BLENDED;
  MetricModel metric;
  FlowConfig flow;                 // eps/mode/metric mirrored in here for convenience
  int max_word_length = 0;         // 0: chart default
  std::optional<FNPoint> point;
  MappingClass mapping_class;
  SampleSpec samples;
  ContinuitySpec continuity;
  std::vector<BersBox> boxes;
  uint64_t seed = 1;
  std::string out_dir = "out";

  std::string canonical_json;      // effective config, sorted keys, compact
  uint64_t config_hash = 0;
  std::string config_hash_hex() const;
};

uint64_t fnv1a64(const std::string& s);

struct ConfigOverrides {
  std::optional<std::string> command;
  std::optional<uint64_t> seed;
  std::optional<std::string> out_dir;
};

// Parse + validate a config file; throws SchemaError with a descriptive
// message on any shape or range problem.
RunConfig load_config(const std::string& path, const ConfigOverrides& ov);

// Same, from an in-memory JSON string (tests).
RunConfig parse_config(const std::string& json_text, const ConfigOverrides& ov);

} // namespace teich
