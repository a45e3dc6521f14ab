#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "osmotic/config.hpp"
#include "osmotic/osmosis.hpp"

namespace osmotic {

// One simulation run's outputs. The serialized column set is fixed; the
// epsilon multiplier and error text are internal bookkeeping.
struct ExperimentRecord {
  int run_id = 0;
  std::uint64_t seed = 0;
  double epsilon_initial = 0.0;
  double epsilon_final = 0.0;
  int total_services = 0;  // leaf services after any splitting
  int osmotic_count = 0;
  int public_count = 0;
  int unhandled_count = 0;
  std::uint64_t track = 0;
  int epsilon_adjustments = 0;
  double p_osmotic = 0.0;
  std::uint64_t wallclock_us = 0;

  double epsilon_multiplier = 1.0;  // not serialized
  std::string error;                // not serialized; empty on success
};

/// Executes runs x |epsilon_multipliers| independent simulations, ordered by
/// (multiplier, run_id). A failing run keeps its record with the error
/// attached and the suite continues.
std::vector<ExperimentRecord> run_experiment(const SuiteConfig& suite,
                                             const WorkloadConfig& workload,
                                             const InfrastructureConfig& infra,
                                             const OsmosisSettings& osmosis);

/// Re-executes a single run of an experiment exactly as run_experiment did,
/// returning the full engine state including the placement log. Determinism
/// makes this an exact replay of the recorded run.
OsmosisState replay_run(const SuiteConfig& suite, const WorkloadConfig& workload,
                        const InfrastructureConfig& infra,
                        const OsmosisSettings& osmosis, double epsilon_multiplier,
                        int run_id);

struct SummaryRow {
  double epsilon_initial = 0.0;
  int services_bucket = 0;  // inclusive lower bound of the bucket
  int count = 0;
  double p_osmotic_mean = 0.0;
  double p_osmotic_stddev = 0.0;
  double track_mean = 0.0;
  double track_stddev = 0.0;
  double wallclock_mean_us = 0.0;
  double wallclock_stddev_us = 0.0;
};

/// Aggregates records per (initial epsilon, total-services bucket).
/// Throws DomainError on empty input.
std::vector<SummaryRow> summarize(const std::vector<ExperimentRecord>& records,
                                  int bucket_width = 10);

}  // namespace osmotic
