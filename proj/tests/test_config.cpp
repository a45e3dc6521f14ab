#include <sstream>

#include "doctest.h"
#include "osmotic/config.hpp"

using namespace osmotic;

TEST_CASE("an empty config yields the built-in defaults") {
  std::istringstream in("");
  const auto cfg = parse_config(in);
  CHECK(cfg.workload.num_users == 10);
  CHECK(cfg.workload.services_min == 12);
  CHECK(cfg.workload.services_max == 110);
  CHECK(cfg.workload.load.min == 1.0);
  CHECK(cfg.workload.load.max == 5.0);
  CHECK(cfg.workload.energy.min == 1.5);
  CHECK(cfg.workload.energy.max == 1.5);
  CHECK(cfg.workload.time.min == 5.0);
  CHECK(cfg.workload.time.max == 20.0);
  CHECK(cfg.workload.seed == 42);
  CHECK(cfg.infrastructure.num_osmotic == 5);
  CHECK(cfg.infrastructure.num_public == 10);
  CHECK(cfg.infrastructure.osmotic_server.load_total == 10.0);
  CHECK(cfg.infrastructure.osmotic_server.energy_total == 2000.0);
  CHECK(cfg.infrastructure.osmotic_server.time_total == 100.0);
  CHECK(cfg.infrastructure.osmotic_server.concurrent_capacity == 10);
  CHECK(cfg.infrastructure.public_capacity_factor == 2.0);
  CHECK(cfg.infrastructure.iteration_energy == 1.5);
  CHECK(cfg.infrastructure.min_processing_time == 5.0);
  CHECK(cfg.osmosis.epsilon == 100.0);
  CHECK(cfg.osmosis.epsilon_reference == 100.0);
  CHECK(cfg.osmosis.epsilon_multiplier == 2.0);
  CHECK(cfg.osmosis.max_epsilon_adjustments == 10);
  CHECK_FALSE(cfg.osmosis.enable_splitting);
  CHECK(cfg.osmosis.normalize);
  CHECK(cfg.osmosis.weights_mode == WeightMode::Dependent);
  CHECK(cfg.osmosis.dominant_property == 0);
  CHECK(cfg.suite.kind == SuiteKind::Distribution);
  CHECK(cfg.suite.runs == 30);
  CHECK(cfg.suite.epsilon_multipliers == std::vector<double>{1.0, 2.0, 3.0});
  CHECK(cfg.suite.bucket_width == 10);
  CHECK_FALSE(cfg.suite.sweep_services);
}

TEST_CASE("keys override defaults and lists parse") {
  std::istringstream in(
      "[experiment]\n"
      "suite = probability_vs_epsilon\n"
      "epsilon_multipliers = 1, 2, 3\n"
      "runs = 7\n"
      "\n"
      "[osmosis]\n"
      "epsilon = 50\n"
      "dominant_property = time\n");
  const auto cfg = parse_config(in);
  CHECK(cfg.suite.kind == SuiteKind::ProbabilityVsEpsilon);
  CHECK(cfg.suite.epsilon_multipliers == std::vector<double>{1.0, 2.0, 3.0});
  CHECK(cfg.suite.runs == 7);
  CHECK(cfg.osmosis.epsilon == 50.0);
  CHECK(cfg.osmosis.dominant_property == 2);
}

TEST_CASE("config errors name the offending key") {
  SUBCASE("constraint violation") {
    std::istringstream in("[infrastructure]\nnum_osmotic = 0\n");
    try {
      parse_config(in);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("num_osmotic") != std::string::npos);
    }
  }
  SUBCASE("unknown key") {
    std::istringstream in("[osmosis]\nfoo = 1\n");
    try {
      parse_config(in);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("[osmosis] foo") != std::string::npos);
    }
  }
  SUBCASE("unknown section") {
    std::istringstream in("[nope]\nx = 1\n");
    CHECK_THROWS_AS(parse_config(in), ConfigError);
  }
  SUBCASE("malformed line") {
    std::istringstream in("[workload]\nnum_users\n");
    CHECK_THROWS_AS(parse_config(in), ConfigError);
  }
  SUBCASE("key before any section") {
    std::istringstream in("num_users = 3\n");
    CHECK_THROWS_AS(parse_config(in), ConfigError);
  }
  SUBCASE("bad number") {
    std::istringstream in("[workload]\nnum_users = many\n");
    CHECK_THROWS_AS(parse_config(in), ConfigError);
  }
  SUBCASE("unknown suite lists the valid ones") {
    std::istringstream in("[experiment]\nsuite = wrong\n");
    try {
      parse_config(in);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      const std::string msg = e.what();
      CHECK(msg.find("distribution") != std::string::npos);
      CHECK(msg.find("probability_vs_epsilon") != std::string::npos);
      CHECK(msg.find("allocation_time_vs_epsilon") != std::string::npos);
    }
  }
  SUBCASE("time floor below the minimum processing time") {
    std::istringstream in("[workload]\ntime_min = 2\n");
    CHECK_THROWS_AS(parse_config(in), ConfigError);
  }
  SUBCASE("epsilon multiplier must enlarge") {
    std::istringstream in("[osmosis]\nepsilon_multiplier = 1.0\n");
    CHECK_THROWS_AS(parse_config(in), ConfigError);
  }
}

TEST_CASE("missing config files are reported") {
  CHECK_THROWS_AS(parse_config_file("/nonexistent/osmotic.conf"), ConfigError);
}

TEST_CASE("serialize and parse round-trip") {
  SimulationConfig cfg;
  cfg.workload.seed = 777;
  cfg.workload.services_min = 20;
  cfg.workload.services_max = 60;
  cfg.workload.divisible_fraction = 0.25;
  cfg.infrastructure.num_osmotic = 3;
  cfg.infrastructure.public_capacity_factor = 2.5;
  cfg.osmosis.epsilon = 12.5;
  cfg.osmosis.enable_splitting = true;
  cfg.osmosis.weights_mode = WeightMode::Independent;
  cfg.osmosis.dominant_property = 1;
  cfg.suite.kind = SuiteKind::AllocationTimeVsEpsilon;
  cfg.suite.runs = 5;
  cfg.suite.epsilon_multipliers = {1.0, 3.0};
  cfg.suite.sweep_services = true;

  const auto text = serialize_config(cfg);
  std::istringstream in(text);
  const auto back = parse_config(in);
  CHECK(serialize_config(back) == text);
  CHECK(back.workload.seed == 777);
  CHECK(back.osmosis.enable_splitting);
  CHECK(back.osmosis.weights_mode == WeightMode::Independent);
  CHECK(back.suite.epsilon_multipliers == std::vector<double>{1.0, 3.0});
  CHECK(back.suite.sweep_services);
}

TEST_CASE("engine config resolution") {
  SimulationConfig cfg;
  SUBCASE("normalized mode scales by the osmotic server totals") {
    const auto engine = make_osmosis_config(cfg.osmosis, cfg.infrastructure);
    CHECK(engine.scales.load == 10.0);
    CHECK(engine.scales.energy == 2000.0);
    CHECK(engine.scales.time == 100.0);
    CHECK(engine.normalized);
    CHECK(engine.weights.alphas == std::vector<double>{0.5, 0.25, 0.25});
    CHECK(engine.epsilon_initial == 100.0);
  }
  SUBCASE("raw mode keeps unit scales") {
    cfg.osmosis.normalize = false;
    const auto engine = make_osmosis_config(cfg.osmosis, cfg.infrastructure);
    CHECK(engine.scales.load == 1.0);
    CHECK_FALSE(engine.normalized);
  }
  SUBCASE("the epsilon scale multiplies the initial epsilon only") {
    const auto engine = make_osmosis_config(cfg.osmosis, cfg.infrastructure, 3.0);
    CHECK(engine.epsilon_initial == 300.0);
    CHECK(engine.epsilon_reference == 100.0);
  }
  SUBCASE("independent mode flags the engine") {
    cfg.osmosis.weights_mode = WeightMode::Independent;
    const auto engine = make_osmosis_config(cfg.osmosis, cfg.infrastructure);
    CHECK(engine.independent_weights);
  }
}
