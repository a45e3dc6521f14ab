#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "osmotic/types.hpp"

namespace osmotic {

struct DemandRange {
  double min = 0.0;
  double max = 0.0;
};

// Workload envelope: 12 to 110 requests from 10 users per run by default,
// load drawn from [1, 5] work units, a fixed 1.5 J energy cost and
// processing time from [5, 20] s.
struct WorkloadConfig {
  int num_users = 10;
  int services_min = 12;
  int services_max = 110;
  DemandRange load{1.0, 5.0};
  DemandRange energy{1.5, 1.5};
  DemandRange time{5.0, 20.0};
  double divisible_fraction = 0.0;
  std::uint64_t seed = 42;
};

// Per-server capacity specification.
struct ServerSpec {
  double load_total = 10.0;
  double energy_total = 2000.0;
  double time_total = 100.0;
  int concurrent_capacity = 10;
};

// Infrastructure: 5 osmotic and 10 public servers by default. Public servers
// carry `public_capacity_factor` times the osmotic per-server capacity, which
// keeps the public admission threshold at or above the osmotic one.
struct InfrastructureConfig {
  int num_osmotic = 5;
  int num_public = 10;
  ServerSpec osmotic_server;
  double public_capacity_factor = 2.0;
  double iteration_energy = 1.5;     // J consumed per hosted service
  double min_processing_time = 5.0;  // s, floor for generated time demands
};

/// Generates the service batch for one run. Fully determined by
/// (config, config.seed, run_index): the count is drawn uniformly from
/// [services_min, services_max], demands independently per property from the
/// configured ranges, user ids round-robin. `forced_count` overrides the count
/// draw (used by the deterministic services sweep).
std::vector<ServiceRequest> generate_services(const WorkloadConfig& cfg,
                                              std::uint64_t run_index,
                                              std::optional<int> forced_count = {});

/// Builds fresh osmotic and public layers from the infrastructure config.
/// Throws ConfigError on empty layers, non-positive capacities or a
/// capacity factor below 1.
std::pair<Layer, Layer> build_infrastructure(const InfrastructureConfig& cfg);

/// Validates a workload config, naming the offending field.
void validate(const WorkloadConfig& cfg);
/// Validates an infrastructure config, naming the offending field.
void validate(const InfrastructureConfig& cfg);

}  // namespace osmotic
