#include "osmotic/osmosis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>
#include <utility>

namespace osmotic {

namespace {

ResourceDemand clamp_non_negative(ResourceDemand d) {
  d.load = std::max(d.load, 0.0);
  d.energy = std::max(d.energy, 0.0);
  d.time = std::max(d.time, 0.0);
  return d;
}

double layer_fitness_with(const Layer& layer, const ResourceDemand& extra,
                          const FitnessWeights& weights, bool normalized) {
  const ResourceDemand consumed = clamp_non_negative(layer.consumed() + extra);
  if (!normalized) return fitness(consumed, weights);
  const ResourceDemand cap = layer.capacity();
  PropertyScales scales{cap.load, cap.energy, cap.time};
  return fitness(consumed, weights, scales);
}

// Largest demand fitness a single server of the layer can still admit. A
// server without a free concurrent slot admits nothing and contributes zero.
double layer_capacity_threshold(const Layer& layer, const FitnessWeights& weights,
                                const PropertyScales& scales) {
  double best = 0.0;
  for (const auto& server : layer.servers) {
    if (!server.has_free_slot()) continue;
    const double f = fitness(clamp_non_negative(server.remaining()), weights, scales);
    best = std::max(best, f);
  }
  return best;
}

void validate_weights(const FitnessWeights& w) {
  if (w.alphas.size() != 3) {
    throw ConfigError("weights: expected one alpha per resource property (3)");
  }
  double sum = 0.0;
  for (double a : w.alphas) {
    if (a < 0.0 || a > 1.0) {
      throw ConfigError("weights: every alpha must lie in [0, 1]");
    }
    sum += a;
  }
  if (w.mode == WeightMode::Dependent && std::fabs(sum - 1.0) > kFitnessTolerance) {
    throw ConfigError("weights: dependent-mode alphas must sum to 1");
  }
}

void validate_layer(const Layer& layer, const char* name) {
  if (layer.servers.empty()) {
    throw ConfigError(std::string(name) + " layer has no servers");
  }
  for (const auto& s : layer.servers) {
    if (s.load_total <= 0.0 || s.energy_total <= 0.0 || s.time_total <= 0.0) {
      throw ConfigError(std::string(name) + " layer: server " + std::to_string(s.id) +
                        " needs positive capacity totals");
    }
    if (s.concurrent_capacity < 1) {
      throw ConfigError(std::string(name) + " layer: server " + std::to_string(s.id) +
                        " needs a positive concurrent capacity");
    }
  }
}

// Independent weights derive from consumption ratios; an idle layer yields a
// zero weight sum, which the fitness function rejects, so bootstrap with
// equal weights until any consumption exists.
FitnessWeights independent_layer_weights(const Layer& layer) {
  FitnessWeights w = weights_independent(layer.consumed(), layer.capacity());
  double sum = 0.0;
  for (double a : w.alphas) sum += a;
  if (sum <= 0.0) w.alphas = {1.0, 1.0, 1.0};
  return w;
}

}  // namespace

double layer_fitness(const Layer& layer, const FitnessWeights& weights,
                     bool normalized) {
  if (layer.servers.empty()) {
    throw ConfigError("layer_fitness: layer has no servers");
  }
  return layer_fitness_with(layer, ResourceDemand{}, weights, normalized);
}

ThresholdPair capacity_thresholds(const Layer& osmotic, const Layer& public_cloud,
                                  const FitnessWeights& weights,
                                  const PropertyScales& scales) {
  if (osmotic.servers.empty() || public_cloud.servers.empty()) {
    throw ConfigError("capacity_thresholds: both layers need at least one server");
  }
  return {layer_capacity_threshold(osmotic, weights, scales),
          layer_capacity_threshold(public_cloud, weights, scales)};
}

double threshold_sum(const Layer& layer, const FitnessWeights& weights,
                     const PropertyScales& scales) {
  double sum = 0.0;
  for (const auto& server : layer.servers) {
    sum += fitness(clamp_non_negative(server.remaining()), weights, scales);
  }
  return sum;
}

Classification classify(double service_fitness, const ThresholdPair& thresholds) {
  if (service_fitness <= thresholds.osmotic + kFitnessTolerance) {
    return Classification::ToOsmotic;
  }
  if (service_fitness <= thresholds.public_cloud + kFitnessTolerance) {
    return Classification::ToPublic;
  }
  return Classification::Unhandleable;
}

std::optional<int> place(Layer& layer, const ServiceRequest& service,
                         const FitnessWeights& weights, const PropertyScales& scales) {
  std::size_t best = layer.servers.size();
  double best_score = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < layer.servers.size(); ++i) {
    const ServerNode& server = layer.servers[i];
    if (!server.can_host(service.demand)) continue;
    const double score =
        fitness(clamp_non_negative(server.remaining()), weights, scales);
    const bool better =
        score < best_score ||
        (score == best_score && best < layer.servers.size() &&
         server.id < layer.servers[best].id);
    if (better) {
      best = i;
      best_score = score;
    }
  }
  if (best == layer.servers.size()) return std::nullopt;
  ServerNode& chosen = layer.servers[best];
  chosen.host(service.id, service.demand);
  layer.placed.push_back(service.id);
  return chosen.id;
}

void adjust_epsilon(OsmosisState& state, const OsmosisConfig& cfg) {
  if (state.epsilon_adjustments >= cfg.max_epsilon_adjustments) {
    throw DomainError("adjust_epsilon: adjustment budget exhausted");
  }
  state.epsilon *= cfg.epsilon_multiplier;
  ++state.epsilon_adjustments;
  // The reset: unhandled services go back to the pending queue in order.
  for (auto& svc : state.unhandled) {
    state.pending.push_back(std::move(svc));
  }
  state.unhandled.clear();
}

std::vector<ServiceRequest> split_service(const ServiceRequest& service, int parts) {
  if (!service.divisible) {
    throw DomainError("split_service: service " + service.id + " is not divisible");
  }
  if (parts < 2) {
    throw DomainError("split_service: need at least two parts");
  }
  std::vector<ServiceRequest> children;
  children.reserve(static_cast<std::size_t>(parts));
  const ResourceDemand share = service.demand.scaled(1.0 / static_cast<double>(parts));
  for (int i = 1; i <= parts; ++i) {
    ServiceRequest child;
    child.id = service.id + "." + std::to_string(i);
    child.user_id = service.user_id;
    child.demand = share;
    child.divisible = service.divisible;
    child.parent_id = service.id;
    children.push_back(std::move(child));
  }
  return children;
}

OsmosisState run_osmosis(std::vector<ServiceRequest> services, Layer osmotic,
                         Layer public_cloud, const OsmosisConfig& cfg) {
  if (cfg.epsilon_initial <= 0.0) throw ConfigError("osmosis: epsilon must be positive");
  if (cfg.epsilon_reference <= 0.0) {
    throw ConfigError("osmosis: epsilon reference must be positive");
  }
  if (cfg.epsilon_multiplier <= 1.0) {
    throw ConfigError("osmosis: epsilon multiplier must enlarge epsilon");
  }
  if (cfg.max_epsilon_adjustments < 0) {
    throw ConfigError("osmosis: max epsilon adjustments must be non-negative");
  }
  if (cfg.enable_splitting && cfg.split_parts < 2) {
    throw ConfigError("osmosis: split parts must be at least 2");
  }
  validate_weights(cfg.weights);
  validate_layer(osmotic, "osmotic");
  validate_layer(public_cloud, "public");

  std::unordered_set<ServiceId> seen;
  for (const auto& svc : services) {
    if (!svc.demand.valid_for_service()) {
      throw DomainError("service " + svc.id + " has an invalid demand");
    }
    if (!seen.insert(svc.id).second) {
      throw DomainError("duplicate service id " + svc.id);
    }
  }

  OsmosisState st;
  st.epsilon = st.epsilon_initial = cfg.epsilon_initial;
  st.osmotic = std::move(osmotic);
  st.public_cloud = std::move(public_cloud);
  st.leaf_services = services.size();
  for (auto& svc : services) st.pending.push_back(std::move(svc));

  const auto weights_for = [&](const Layer& layer) -> FitnessWeights {
    if (cfg.independent_weights) return independent_layer_weights(layer);
    return cfg.weights;
  };

  // Threshold ordering must hold before the run starts.
  {
    const auto initial = capacity_thresholds(st.osmotic, st.public_cloud,
                                             weights_for(st.osmotic), cfg.scales);
    if (initial.public_cloud < initial.osmotic - kFitnessTolerance) {
      throw ConfigError(
          "osmosis: public threshold below osmotic threshold; provision public "
          "servers with at least the osmotic per-server capacity");
    }
  }

  while (true) {
    const FitnessWeights w_osm = weights_for(st.osmotic);
    const FitnessWeights w_pub = weights_for(st.public_cloud);
    st.fitness_osmotic = layer_fitness(st.osmotic, w_osm, cfg.normalized);
    st.fitness_public = layer_fitness(st.public_cloud, w_pub, cfg.normalized);

    if (st.pending.empty()) {
      if (std::fabs(st.fitness_osmotic - st.fitness_public) <=
          st.epsilon + kFitnessTolerance) {
        break;  // equalized within the band
      }
      // With unhandled services the band contract is void; stop as-is.
      if (!st.unhandled.empty()) break;
      if (st.epsilon_adjustments >= cfg.max_epsilon_adjustments) break;
      // All services placed but the gap exceeds the band: widen epsilon
      // until the final fitness gap fits.
      adjust_epsilon(st, cfg);
      continue;
    }

    ServiceRequest svc = std::move(st.pending.front());
    st.pending.pop_front();
    ++st.track;

    ExaminationEvent ev;
    ev.pass = st.track;
    ev.service_id = svc.id;
    ev.demand = svc.demand;
    ev.fitness_osmotic_before = st.fitness_osmotic;
    ev.fitness_public_before = st.fitness_public;
    ev.epsilon = st.epsilon;

    // A weight pinned at 1 blocks any shift; the service stays on the layer
    // whose weights pin it. In dependent mode one weight set serves both
    // layers, so a pin defaults to the osmotic side.
    const bool osm_pinned = is_shift_blocked(w_osm);
    const bool pub_pinned = !osm_pinned && is_shift_blocked(w_pub);
    if (osm_pinned || pub_pinned) {
      Layer& target = osm_pinned ? st.osmotic : st.public_cloud;
      const FitnessWeights& w = osm_pinned ? w_osm : w_pub;
      ev.service_fitness = fitness(svc.demand, w, cfg.scales);
      ev.service_fitness_public = ev.service_fitness;
      ev.classification = osm_pinned ? Classification::ToOsmotic : Classification::ToPublic;
      if (auto sid = place(target, svc, w, cfg.scales)) {
        ev.outcome = osm_pinned ? PlacementOutcome::PinnedOsmotic
                                : PlacementOutcome::PinnedPublic;
        ev.server_id = *sid;
      } else {
        ev.outcome = PlacementOutcome::UnhandledOverflow;
        st.unhandled.push_back(std::move(svc));
      }
      st.log.push_back(std::move(ev));
      continue;
    }

    const double f_osm_basis = fitness(svc.demand, w_osm, cfg.scales);
    const double f_pub_basis = fitness(svc.demand, w_pub, cfg.scales);

    ThresholdPair th{
        layer_capacity_threshold(st.osmotic, w_osm, cfg.scales),
        layer_capacity_threshold(st.public_cloud, w_pub, cfg.scales)};
    // Above the reference epsilon, public admission relaxes by the ratio.
    th.public_cloud *= std::max(1.0, st.epsilon / cfg.epsilon_reference);
    const double f_osm_after =
        layer_fitness_with(st.osmotic, svc.demand, w_osm, cfg.normalized);
    // Equalization gate: osmotic closes for a service whose placement would
    // push the osmotic layer fitness more than epsilon above the public one.
    const bool band_closed =
        f_osm_after > st.fitness_public + st.epsilon + kFitnessTolerance;
    // Fill gate (normalized mode): the osmotic layer may not absorb beyond a
    // fill level of epsilon_reference/epsilon.
    const bool fill_closed =
        cfg.normalized &&
        f_osm_after > cfg.epsilon_reference / st.epsilon + kFitnessTolerance;
    if (band_closed || fill_closed) {
      th.osmotic = 0.0;
    }

    ev.service_fitness = f_osm_basis;
    ev.service_fitness_public = f_pub_basis;
    ev.threshold_osmotic = th.osmotic;
    ev.threshold_public = th.public_cloud;

    Classification cls;
    if (f_osm_basis <= th.osmotic + kFitnessTolerance) {
      cls = Classification::ToOsmotic;
    } else if (f_pub_basis <= th.public_cloud + kFitnessTolerance) {
      cls = Classification::ToPublic;
    } else {
      cls = Classification::Unhandleable;
    }
    ev.classification = cls;

    bool needs_adjustment = false;
    switch (cls) {
      case Classification::ToOsmotic: {
        if (auto sid = place(st.osmotic, svc, w_osm, cfg.scales)) {
          ev.outcome = PlacementOutcome::PlacedOsmotic;
          ev.server_id = *sid;
        } else if (f_pub_basis <= th.public_cloud + kFitnessTolerance) {
          // No osmotic server fits: reroute through the public threshold.
          if (auto sid = place(st.public_cloud, svc, w_pub, cfg.scales)) {
            ev.outcome = PlacementOutcome::PlacedPublicOverflow;
            ev.server_id = *sid;
          } else {
            ev.outcome = PlacementOutcome::UnhandledOverflow;
            st.unhandled.push_back(svc);
          }
        } else {
          ev.outcome = PlacementOutcome::UnhandledOverflow;
          st.unhandled.push_back(svc);
        }
        break;
      }
      case Classification::ToPublic: {
        if (auto sid = place(st.public_cloud, svc, w_pub, cfg.scales)) {
          ev.outcome = PlacementOutcome::PlacedPublic;
          ev.server_id = *sid;
        } else {
          // The osmotic threshold already refused this fitness, so there is
          // no admissible layer left.
          ev.outcome = PlacementOutcome::UnhandledOverflow;
          st.unhandled.push_back(svc);
        }
        break;
      }
      case Classification::Unhandleable: {
        if (cfg.enable_splitting && svc.divisible) {
          auto children = split_service(svc, cfg.split_parts);
          st.leaf_services += children.size() - 1;
          for (auto& child : children) st.pending.push_back(std::move(child));
          ev.outcome = PlacementOutcome::Split;
        } else {
          ev.outcome = PlacementOutcome::UnhandleableClassified;
          st.unhandled.push_back(svc);
          needs_adjustment = true;
        }
        break;
      }
    }
    st.log.push_back(std::move(ev));

    if (needs_adjustment) {
      if (st.epsilon_adjustments >= cfg.max_epsilon_adjustments) {
        // Budget exhausted: the run terminates and everything still waiting
        // is reported unhandled.
        while (!st.pending.empty()) {
          st.unhandled.push_back(std::move(st.pending.front()));
          st.pending.pop_front();
        }
        break;
      }
      adjust_epsilon(st, cfg);
    }
  }

  const FitnessWeights w_osm = weights_for(st.osmotic);
  const FitnessWeights w_pub = weights_for(st.public_cloud);
  st.fitness_osmotic = layer_fitness(st.osmotic, w_osm, cfg.normalized);
  st.fitness_public = layer_fitness(st.public_cloud, w_pub, cfg.normalized);
  return st;
}

}  // namespace osmotic
