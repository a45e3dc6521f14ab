#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "osmotic/config.hpp"
#include "osmotic/osmosis.hpp"
#include "osmotic/rng.hpp"
#include "osmotic/selection.hpp"
#include "osmotic/workload.hpp"

namespace {

void BM_FitnessEval(benchmark::State& state) {
  const auto w = osmotic::weights_dependent(3, 0);
  const osmotic::PropertyScales scales{10, 2000, 100};
  const osmotic::ResourceDemand d{3.2, 1.5, 12.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(osmotic::fitness(d, w, scales));
  }
}
BENCHMARK(BM_FitnessEval);

void BM_GenerateServices(benchmark::State& state) {
  osmotic::WorkloadConfig cfg;
  cfg.services_min = cfg.services_max = static_cast<int>(state.range(0));
  std::uint64_t run = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(osmotic::generate_services(cfg, run++));
  }
}
BENCHMARK(BM_GenerateServices)->Arg(12)->Arg(110);

void BM_RunOsmosis(benchmark::State& state) {
  osmotic::SimulationConfig cfg;
  cfg.workload.services_min = cfg.workload.services_max = static_cast<int>(state.range(0));
  const auto services = osmotic::generate_services(cfg.workload, 0);
  const auto engine = osmotic::make_osmosis_config(cfg.osmosis, cfg.infrastructure);
  for (auto _ : state) {
    auto [osm, pub] = osmotic::build_infrastructure(cfg.infrastructure);
    benchmark::DoNotOptimize(
        osmotic::run_osmosis(services, std::move(osm), std::move(pub), engine));
  }
}
BENCHMARK(BM_RunOsmosis)->Arg(12)->Arg(110);

void BM_RouletteSample(benchmark::State& state) {
  std::vector<double> fitnesses;
  std::mt19937_64 seed_rng(7);
  for (int i = 0; i < 1000; ++i) {
    fitnesses.push_back(osmotic::uniform_double(seed_rng, 0.01, 1.0));
  }
  const auto dist =
      osmotic::roulette_distribution(std::span<const double>(fitnesses));
  std::mt19937_64 rng(11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(osmotic::sample(dist, rng));
  }
}
BENCHMARK(BM_RouletteSample);

}  // namespace

BENCHMARK_MAIN();
