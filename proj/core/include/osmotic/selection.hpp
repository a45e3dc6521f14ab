#pragma once

#include <random>
#include <span>
#include <vector>

#include "osmotic/types.hpp"

namespace osmotic {

struct SelectionEntry {
  ServiceId id;
  double probability = 0.0;
};

// Fitness-proportionate selection probabilities; entries sum to 1.
struct SelectionDistribution {
  std::vector<SelectionEntry> entries;
};

/// Roulette-wheel distribution: P(s_i) = f_i / sum(f).
/// Throws DomainError on negative fitness or an all-zero fitness vector
/// (no silent uniform fallback).
SelectionDistribution roulette_distribution(std::span<const double> fitnesses,
                                            std::span<const ServiceId> ids = {});

// Per-layer selection scores for one service. The raw values f/sum(thresholds)
// can exceed 1; capped values clamp them into [0, 1] where a probability is
// semantically required. Both are reported.
struct LayerSelectionProbabilities {
  double osmotic_raw = 0.0;
  double public_raw = 0.0;
  double osmotic = 0.0;  // capped at 1
  double public_cloud = 0.0;
};

/// Scores a service fitness against the layer threshold sums:
/// P(o,s) = f / sum of osmotic per-server thresholds, P(p,s) likewise.
/// Throws DomainError when a threshold sum is zero.
LayerSelectionProbabilities layer_selection_probabilities(double service_fitness,
                                                          double threshold_sum_osmotic,
                                                          double threshold_sum_public);

enum class Theorem1Result {
  Holds,
  Violated,
  NotApplicable,  // outside the regime th_pub_sum >= sum(f) >= th_osm_sum
};

/// Checks the selection-probability sandwich f/th_pub_sum <= f/sum(f) <=
/// f/th_osm_sum for every service. Outside the valid regime the check reports
/// NotApplicable rather than failure.
Theorem1Result check_theorem1_bounds(std::span<const double> fitnesses,
                                     double threshold_sum_osmotic,
                                     double threshold_sum_public);

/// Draws one entry index with probability proportional to its weight.
/// Deterministic given the generator state.
std::size_t sample(const SelectionDistribution& dist, std::mt19937_64& rng);

/// Same draw, returning the selected service id.
const ServiceId& sample_id(const SelectionDistribution& dist, std::mt19937_64& rng);

}  // namespace osmotic
