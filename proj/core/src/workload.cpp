#include "osmotic/workload.hpp"

#include <string>

#include "osmotic/rng.hpp"

namespace osmotic {

namespace {

void check_range(const DemandRange& r, const char* key) {
  if (r.min < 0.0 || r.max < 0.0 || r.min > r.max) {
    throw ConfigError(std::string("[workload] ") + key +
                      ": range must satisfy 0 <= min <= max");
  }
}

double draw(std::mt19937_64& rng, const DemandRange& r) {
  return r.min == r.max ? r.min : uniform_double(rng, r.min, r.max);
}

}  // namespace

void validate(const WorkloadConfig& cfg) {
  if (cfg.num_users < 1) {
    throw ConfigError("[workload] num_users: must be at least 1");
  }
  if (cfg.services_min < 0 || cfg.services_min > cfg.services_max) {
    throw ConfigError("[workload] services_min/services_max: need 0 <= min <= max");
  }
  check_range(cfg.load, "load");
  check_range(cfg.energy, "energy");
  check_range(cfg.time, "time");
  if (cfg.divisible_fraction < 0.0 || cfg.divisible_fraction > 1.0) {
    throw ConfigError("[workload] divisible_fraction: must lie in [0, 1]");
  }
  if (cfg.load.max == 0.0 && cfg.energy.max == 0.0 && cfg.time.max == 0.0) {
    throw ConfigError("[workload] demand ranges: at least one property must be positive");
  }
}

void validate(const InfrastructureConfig& cfg) {
  if (cfg.num_osmotic < 1) {
    throw ConfigError("[infrastructure] num_osmotic: must be at least 1");
  }
  if (cfg.num_public < 1) {
    throw ConfigError("[infrastructure] num_public: must be at least 1");
  }
  if (cfg.osmotic_server.load_total <= 0.0 || cfg.osmotic_server.energy_total <= 0.0 ||
      cfg.osmotic_server.time_total <= 0.0) {
    throw ConfigError(
        "[infrastructure] load_total/energy_total/time_total: must be positive");
  }
  if (cfg.osmotic_server.concurrent_capacity < 1) {
    throw ConfigError("[infrastructure] concurrent_capacity: must be at least 1");
  }
  // Factor < 1 would put the public admission threshold below the osmotic one.
  if (cfg.public_capacity_factor < 1.0) {
    throw ConfigError("[infrastructure] public_capacity_factor: must be at least 1");
  }
  if (cfg.iteration_energy <= 0.0) {
    throw ConfigError("[infrastructure] iteration_energy: must be positive");
  }
  if (cfg.min_processing_time < 0.0) {
    throw ConfigError("[infrastructure] min_processing_time: must be non-negative");
  }
}

std::vector<ServiceRequest> generate_services(const WorkloadConfig& cfg,
                                              std::uint64_t run_index,
                                              std::optional<int> forced_count) {
  validate(cfg);
  std::mt19937_64 rng(derive_stream_seed(cfg.seed, run_index));

  int count;
  if (forced_count) {
    count = *forced_count;
    if (count < 0) throw DomainError("generate_services: negative forced count");
  } else {
    count = static_cast<int>(uniform_int(rng, cfg.services_min, cfg.services_max));
  }

  std::vector<ServiceRequest> services;
  services.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    ServiceRequest svc;
    svc.id = "s" + std::to_string(i + 1);
    svc.user_id = i % cfg.num_users;
    svc.demand.load = draw(rng, cfg.load);
    svc.demand.energy = draw(rng, cfg.energy);
    svc.demand.time = draw(rng, cfg.time);
    svc.divisible = cfg.divisible_fraction > 0.0 &&
                    uniform_unit(rng) < cfg.divisible_fraction;
    services.push_back(std::move(svc));
  }
  return services;
}

std::pair<Layer, Layer> build_infrastructure(const InfrastructureConfig& cfg) {
  validate(cfg);

  const auto make_server = [](int id, const ServerSpec& spec) {
    ServerNode s;
    s.id = id;
    s.load_total = spec.load_total;
    s.energy_total = spec.energy_total;
    s.time_total = spec.time_total;
    s.concurrent_capacity = spec.concurrent_capacity;
    return s;
  };

  Layer osmotic;
  osmotic.kind = LayerKind::Osmotic;
  for (int i = 0; i < cfg.num_osmotic; ++i) {
    osmotic.servers.push_back(make_server(i, cfg.osmotic_server));
  }

  ServerSpec public_spec = cfg.osmotic_server;
  public_spec.load_total *= cfg.public_capacity_factor;
  public_spec.energy_total *= cfg.public_capacity_factor;
  public_spec.time_total *= cfg.public_capacity_factor;

  Layer public_cloud;
  public_cloud.kind = LayerKind::Public;
  for (int i = 0; i < cfg.num_public; ++i) {
    public_cloud.servers.push_back(make_server(cfg.num_osmotic + i, public_spec));
  }
  return {std::move(osmotic), std::move(public_cloud)};
}

}  // namespace osmotic
