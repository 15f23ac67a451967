// teichflow CLI: JSON config in, artifacts out. Exit codes: 0 success,
// 2 schema/config error, 3 numerical failure, 4 property-check failure.

#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "teichflow/commands.hpp"
#include "teichflow/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"teichflow: systole-steered flows on Fenchel-Nielsen charts"};

  std::string config_path;
  std::string command;
  std::string out_dir;
  std::optional<uint64_t> seed;

  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--command", command,
                 "systole | flow | retract | gram | equivariance | continuity-demo | cover-check "
                 "(overrides config)");
  app.add_option("--out", out_dir, "output directory (overrides config)");
  app.add_option("--seed", seed, "RNG seed (overrides config)");

  CLI11_PARSE(app, argc, argv);

  teich::ConfigOverrides ov;
  if (!command.empty()) ov.command = command;
  if (!out_dir.empty()) ov.out_dir = out_dir;
  ov.seed = seed;

  try {
    teich::RunConfig cfg = teich::load_config(config_path, ov);
    std::vector<std::string> artifacts = teich::run_command(cfg);
    std::printf("config_hash %s\n", cfg.config_hash_hex().c_str());
    for (const auto& a : artifacts) std::printf("wrote %s\n", a.c_str());
    return teich::EXIT_OK;
  } catch (const teich::SchemaError& e) {
    std::fprintf(stderr, "schema error: %s\n", e.what());
    return teich::EXIT_SCHEMA;
  } catch (const teich::PropertyError& e) {
    std::fprintf(stderr, "property-check failure: %s\n", e.what());
    return teich::EXIT_PROPERTY;
  } catch (const teich::NumericalError& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return teich::EXIT_NUMERICAL;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return teich::EXIT_NUMERICAL;
  }
}
