#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "osmotic/osmosis.hpp"
#include "osmotic/workload.hpp"

namespace osmotic {

enum class SuiteKind {
  Distribution,           // per-run service counts and their layer split
  ProbabilityVsEpsilon,   // p_osmotic across the epsilon multipliers
  AllocationTimeVsEpsilon // track and wall clock across the epsilon multipliers
};

const char* suite_name(SuiteKind kind);
SuiteKind parse_suite_name(const std::string& name);  // throws ConfigError
std::vector<std::string> known_suite_names();

struct SuiteConfig {
  SuiteKind kind = SuiteKind::Distribution;
  int runs = 30;
  std::vector<double> epsilon_multipliers = {1.0, 2.0, 3.0};
  int bucket_width = 10;  // total-services bucket width for summaries
  bool sweep_services = false;
};

// Raw osmosis settings as they appear in the config file; resolved into an
// engine OsmosisConfig against the infrastructure.
struct OsmosisSettings {
  double epsilon = 100.0;
  double epsilon_reference = 100.0;
  double epsilon_multiplier = 2.0;
  int max_epsilon_adjustments = 10;
  bool enable_splitting = false;
  int split_parts = 2;
  bool normalize = true;
  WeightMode weights_mode = WeightMode::Dependent;
  int dominant_property = 0;  // 0 = load, 1 = energy, 2 = time
};

struct SimulationConfig {
  WorkloadConfig workload;
  InfrastructureConfig infrastructure;
  OsmosisSettings osmosis;
  SuiteConfig suite;
};

/// Parses the sectioned key-value config format. Every omitted key keeps its
/// default; unknown sections or keys are hard errors that name the key path.
SimulationConfig parse_config(std::istream& in);
SimulationConfig parse_config_file(const std::string& path);

/// Canonical text form with every key explicit; parse(serialize(c)) == c.
std::string serialize_config(const SimulationConfig& cfg);

/// Resolves the raw settings into an engine config: dependent-mode weights
/// from the dominant property, normalization scales from the osmotic server
/// spec (unit scales when normalization is off). `epsilon_scale` multiplies
/// the initial epsilon, which is how the experiment sweep varies epsilon.
OsmosisConfig make_osmosis_config(const OsmosisSettings& settings,
                                  const InfrastructureConfig& infra,
                                  double epsilon_scale = 1.0);

void validate(const OsmosisSettings& settings);
void validate(const SuiteConfig& suite);

}  // namespace osmotic
