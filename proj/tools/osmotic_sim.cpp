// Command line front end: loads a config (or the built-in defaults), runs an
// experiment suite and writes the records as CSV or JSON with an embedded
// run manifest.
//
// Exit codes: 0 success, 1 configuration error, 2 runtime error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "osmotic/config.hpp"
#include "osmotic/harness.hpp"
#include "osmotic/report.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"Fitness-based osmosis service placement simulator"};

  std::string config_path;
  std::string suite;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string format = "csv";
  std::optional<int> runs;
  bool sweep_services = false;

  app.add_option("--config", config_path,
                 "Config file path (omitted: built-in defaults)");
  app.add_option("--suite", suite,
                 "Experiment suite (distribution, probability_vs_epsilon, "
                 "allocation_time_vs_epsilon)");
  app.add_option("--seed", seed, "Base seed, overrides the config value");
  app.add_option("--out", out_path, "Output file (omitted: stdout)");
  app.add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--runs", runs, "Number of runs per epsilon multiplier");
  app.add_flag("--sweep-services", sweep_services,
               "Sweep the service count deterministically across runs instead "
               "of drawing it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  osmotic::SimulationConfig cfg;
  try {
    if (!config_path.empty()) {
      cfg = osmotic::parse_config_file(config_path);
    }
    if (!suite.empty()) cfg.suite.kind = osmotic::parse_suite_name(suite);
    if (seed) cfg.workload.seed = *seed;
    if (runs) cfg.suite.runs = *runs;
    if (sweep_services) cfg.suite.sweep_services = true;
    osmotic::validate(cfg.suite);
    osmotic::validate(cfg.workload);
    osmotic::validate(cfg.infrastructure);
    osmotic::validate(cfg.osmosis);
  } catch (const osmotic::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }

  try {
    const auto records = osmotic::run_experiment(cfg.suite, cfg.workload,
                                                 cfg.infrastructure, cfg.osmosis);
    const auto manifest = osmotic::make_manifest(cfg, format);

    bool any_error = false;
    for (const auto& r : records) {
      if (!r.error.empty()) {
        any_error = true;
        std::cerr << "run " << r.run_id << " (epsilon x" << r.epsilon_multiplier
                  << ") failed: " << r.error << "\n";
      }
    }

    if (out_path.empty()) {
      if (format == "csv") {
        osmotic::write_csv(std::cout, manifest, records);
      } else {
        osmotic::write_json(std::cout, manifest, records);
      }
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot open output file '" << out_path << "'\n";
        return 2;
      }
      if (format == "csv") {
        osmotic::write_csv(out, manifest, records);
      } else {
        osmotic::write_json(out, manifest, records);
      }
      std::cout << "wrote " << records.size() << " records to " << out_path << "\n";
    }

    std::cerr << osmotic::format_summary(
        osmotic::summarize(records, cfg.suite.bucket_width));
    return any_error ? 2 : 0;
  } catch (const osmotic::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
