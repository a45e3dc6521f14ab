#include "osmotic/harness.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <optional>

#include "osmotic/rng.hpp"
#include "osmotic/workload.hpp"

namespace osmotic {

namespace {

std::optional<int> sweep_count(const SuiteConfig& suite, const WorkloadConfig& workload,
                               int run_id) {
  if (!suite.sweep_services) return std::nullopt;
  if (suite.runs <= 1) return workload.services_min;
  const double t = static_cast<double>(run_id) / static_cast<double>(suite.runs - 1);
  const double span = static_cast<double>(workload.services_max - workload.services_min);
  return workload.services_min + static_cast<int>(std::lround(t * span));
}

OsmosisState execute_run(const SuiteConfig& suite, const WorkloadConfig& workload,
                         const InfrastructureConfig& infra,
                         const OsmosisSettings& osmosis, double multiplier, int run_id) {
  auto services = generate_services(workload, static_cast<std::uint64_t>(run_id),
                                    sweep_count(suite, workload, run_id));
  auto [osmotic_layer, public_layer] = build_infrastructure(infra);
  const OsmosisConfig engine_cfg = make_osmosis_config(osmosis, infra, multiplier);
  return run_osmosis(std::move(services), std::move(osmotic_layer),
                     std::move(public_layer), engine_cfg);
}

}  // namespace

std::vector<ExperimentRecord> run_experiment(const SuiteConfig& suite,
                                             const WorkloadConfig& workload,
                                             const InfrastructureConfig& infra,
                                             const OsmosisSettings& osmosis) {
  validate(suite);
  validate(workload);
  validate(infra);
  validate(osmosis);

  std::vector<ExperimentRecord> records;
  records.reserve(static_cast<std::size_t>(suite.runs) *
                  suite.epsilon_multipliers.size());

  for (double multiplier : suite.epsilon_multipliers) {
    for (int run_id = 0; run_id < suite.runs; ++run_id) {
      ExperimentRecord rec;
      rec.run_id = run_id;
      rec.seed = derive_stream_seed(workload.seed, static_cast<std::uint64_t>(run_id));
      rec.epsilon_multiplier = multiplier;
      rec.epsilon_initial = osmosis.epsilon * multiplier;
      rec.epsilon_final = rec.epsilon_initial;
      try {
        const auto start = std::chrono::steady_clock::now();
        const OsmosisState st =
            execute_run(suite, workload, infra, osmosis, multiplier, run_id);
        const auto stop = std::chrono::steady_clock::now();
        rec.epsilon_initial = st.epsilon_initial;
        rec.epsilon_final = st.epsilon;
        rec.total_services = static_cast<int>(st.leaf_services);
        rec.osmotic_count = static_cast<int>(st.osmotic.placed.size());
        rec.public_count = static_cast<int>(st.public_cloud.placed.size());
        rec.unhandled_count = static_cast<int>(st.unhandled.size());
        rec.track = st.track;
        rec.epsilon_adjustments = st.epsilon_adjustments;
        rec.p_osmotic = rec.total_services > 0
                            ? static_cast<double>(rec.osmotic_count) /
                                  static_cast<double>(rec.total_services)
                            : 0.0;
        rec.wallclock_us = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count());
      } catch (const std::exception& e) {
        rec.error = e.what();
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

OsmosisState replay_run(const SuiteConfig& suite, const WorkloadConfig& workload,
                        const InfrastructureConfig& infra,
                        const OsmosisSettings& osmosis, double epsilon_multiplier,
                        int run_id) {
  return execute_run(suite, workload, infra, osmosis, epsilon_multiplier, run_id);
}

std::vector<SummaryRow> summarize(const std::vector<ExperimentRecord>& records,
                                  int bucket_width) {
  if (records.empty()) throw DomainError("summarize: no records");
  if (bucket_width < 1) throw DomainError("summarize: bucket width must be positive");

  struct Acc {
    int count = 0;
    double p_sum = 0, p_sq = 0;
    double t_sum = 0, t_sq = 0;
    double w_sum = 0, w_sq = 0;
  };
  std::map<std::pair<double, int>, Acc> groups;
  for (const auto& r : records) {
    const int bucket = (r.total_services / bucket_width) * bucket_width;
    auto& acc = groups[{r.epsilon_initial, bucket}];
    ++acc.count;
    acc.p_sum += r.p_osmotic;
    acc.p_sq += r.p_osmotic * r.p_osmotic;
    const auto track = static_cast<double>(r.track);
    acc.t_sum += track;
    acc.t_sq += track * track;
    const auto wall = static_cast<double>(r.wallclock_us);
    acc.w_sum += wall;
    acc.w_sq += wall * wall;
  }

  const auto stddev = [](double sum, double sq, int n) {
    const double mean = sum / n;
    const double var = sq / n - mean * mean;
    return var > 0.0 ? std::sqrt(var) : 0.0;
  };

  std::vector<SummaryRow> rows;
  rows.reserve(groups.size());
  for (const auto& [key, acc] : groups) {
    SummaryRow row;
    row.epsilon_initial = key.first;
    row.services_bucket = key.second;
    row.count = acc.count;
    row.p_osmotic_mean = acc.p_sum / acc.count;
    row.p_osmotic_stddev = stddev(acc.p_sum, acc.p_sq, acc.count);
    row.track_mean = acc.t_sum / acc.count;
    row.track_stddev = stddev(acc.t_sum, acc.t_sq, acc.count);
    row.wallclock_mean_us = acc.w_sum / acc.count;
    row.wallclock_stddev_us = stddev(acc.w_sum, acc.w_sq, acc.count);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace osmotic
