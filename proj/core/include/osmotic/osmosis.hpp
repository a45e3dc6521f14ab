#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "osmotic/fitness.hpp"
#include "osmotic/types.hpp"

namespace osmotic {

// Fitness-based osmosis: services flow between an osmotic (fog) layer and a
// public cloud layer until the two layer fitness values sit within a band of
// width epsilon of each other.
//
// Per pass, one pending service is examined:
//   f <= threshold_osmotic           -> placed on the osmotic layer
//   threshold_osmotic < f <= public  -> placed on the public layer
//   f > threshold_public             -> cannot be handled at current epsilon;
//                                       epsilon is enlarged and the service retried
//
// Thresholds are recomputed every pass from remaining server capacity and
// depend on epsilon. Osmotic admission closes for a service whose placement
// would push the osmotic layer fitness more than epsilon above the public
// layer fitness (the equalization gate), and, in normalized mode, for a
// service that would raise the osmotic fill level above
// epsilon_reference/epsilon: raising epsilon above the reference throttles
// how much concentration the osmotic layer may absorb. Public admission
// relaxes by epsilon/epsilon_reference, so enlarging epsilon lets services
// that failed both thresholds be handled.
//
// A service that passes classification but fits no server of its layer
// (capacity or concurrency exhausted) is rerouted to the other layer if that
// layer's threshold admits it, and is otherwise recorded as unhandled.
// Physical overflow does not trigger an epsilon adjustment.

struct OsmosisConfig {
  double epsilon_initial = 100.0;
  // Anchor for the epsilon-dependent gates above: the osmotic fill limit is
  // epsilon_reference/epsilon and the public threshold relaxation is
  // epsilon/epsilon_reference.
  double epsilon_reference = 100.0;
  // Factor applied to epsilon on each adjustment; must be > 1.
  double epsilon_multiplier = 2.0;
  int max_epsilon_adjustments = 10;
  // When enabled, an unhandleable divisible service is split into
  // split_parts equal children instead of triggering an adjustment.
  bool enable_splitting = false;
  int split_parts = 2;
  // Recompute weights from layer consumption ratios every pass instead of
  // using the fixed dependent-mode weights.
  bool independent_weights = false;
  FitnessWeights weights = {WeightMode::Dependent, {0.5, 0.25, 0.25}, 0};
  // Normalized mode: service demands and remaining capacity are divided by
  // `scales`, layer fitness by the layer's aggregate capacity. Disabled, all
  // fitness values keep the raw mixed units.
  bool normalized = true;
  PropertyScales scales;
};

enum class Classification { ToOsmotic, ToPublic, Unhandleable };

enum class PlacementOutcome {
  PlacedOsmotic,
  PlacedPublic,
  PlacedPublicOverflow,    // admitted osmotic, no osmotic server fit, public took it
  UnhandledOverflow,       // no server on either admissible layer fit
  UnhandleableClassified,  // fitness above the public threshold
  Split,                   // replaced by equal-demand children
  PinnedOsmotic,           // a weight pinned at 1 forced the layer
  PinnedPublic,
};

struct ThresholdPair {
  double osmotic = 0.0;
  double public_cloud = 0.0;
};

// One examined service: everything needed to replay the decision.
struct ExaminationEvent {
  std::uint64_t pass = 0;  // track value when the service was examined
  ServiceId service_id;
  ResourceDemand demand;
  double service_fitness = 0.0;         // basis used against the osmotic threshold
  double service_fitness_public = 0.0;  // basis used against the public threshold
  double threshold_osmotic = 0.0;       // effective values at examination time
  double threshold_public = 0.0;
  double fitness_osmotic_before = 0.0;
  double fitness_public_before = 0.0;
  double epsilon = 0.0;
  Classification classification = Classification::ToOsmotic;
  PlacementOutcome outcome = PlacementOutcome::PlacedOsmotic;
  int server_id = -1;
};

struct OsmosisState {
  double epsilon = 0.0;
  double epsilon_initial = 0.0;
  int epsilon_adjustments = 0;  // x
  std::uint64_t track = 0;      // services examined, one per pass
  std::deque<ServiceRequest> pending;
  Layer osmotic;
  Layer public_cloud;
  std::vector<ServiceRequest> unhandled;
  // Leaf services: generated services plus net children created by splitting.
  std::size_t leaf_services = 0;
  double fitness_osmotic = 0.0;
  double fitness_public = 0.0;
  std::vector<ExaminationEvent> log;
};

/// Layer fitness: the fitness function over the layer's aggregate consumed
/// resources. When normalized, consumption is divided by the layer's own
/// aggregate capacity, so the value is the layer's absorbed-work concentration.
/// Throws ConfigError for a layer with no servers.
double layer_fitness(const Layer& layer, const FitnessWeights& weights,
                     bool normalized = true);

/// Capacity thresholds: per layer, the fitness of the largest demand a single
/// server can still admit, i.e. the max over servers of the remaining-capacity
/// vector through the fitness function (normalized by `scales`).
ThresholdPair capacity_thresholds(const Layer& osmotic, const Layer& public_cloud,
                                  const FitnessWeights& weights,
                                  const PropertyScales& scales);

/// Sum of per-server remaining-capacity fitness across a layer. Used by the
/// selection-probability analysis.
double threshold_sum(const Layer& layer, const FitnessWeights& weights,
                     const PropertyScales& scales);

/// Pure classification of a service fitness against a threshold pair.
/// A tie at the osmotic threshold goes to the osmotic layer.
Classification classify(double service_fitness, const ThresholdPair& thresholds);

/// Best-fit placement: among servers that can host the demand (all three
/// components plus a free concurrent slot), pick the one whose remaining
/// capacity has the smallest fitness; ties go to the lowest server id.
/// Returns the chosen server id, or nullopt when no server fits.
std::optional<int> place(Layer& layer, const ServiceRequest& service,
                         const FitnessWeights& weights, const PropertyScales& scales);

/// Enlarges epsilon by the configured multiplier, counts the adjustment and
/// requeues unhandled services (the reset). Throws DomainError when the
/// adjustment budget is already exhausted.
void adjust_epsilon(OsmosisState& state, const OsmosisConfig& cfg);

/// Splits a divisible service into `parts` children with demand/parts each.
/// Children carry suffixed ids and the parent id.
std::vector<ServiceRequest> split_service(const ServiceRequest& service, int parts);

/// Runs the osmosis loop over a batch of services. Layers are taken by value;
/// the returned state owns the final layers, counters and placement log.
OsmosisState run_osmosis(std::vector<ServiceRequest> services, Layer osmotic,
                         Layer public_cloud, const OsmosisConfig& cfg);

}  // namespace osmotic
