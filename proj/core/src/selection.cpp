#include "osmotic/selection.hpp"

#include <algorithm>
#include <string>

#include "osmotic/rng.hpp"

namespace osmotic {

SelectionDistribution roulette_distribution(std::span<const double> fitnesses,
                                            std::span<const ServiceId> ids) {
  if (fitnesses.empty()) {
    throw DomainError("roulette_distribution: no fitness values");
  }
  if (!ids.empty() && ids.size() != fitnesses.size()) {
    throw DomainError("roulette_distribution: id count does not match fitness count");
  }
  double total = 0.0;
  for (double f : fitnesses) {
    if (f < 0.0) throw DomainError("roulette_distribution: negative fitness");
    total += f;
  }
  if (total <= 0.0) {
    throw DomainError(
        "roulette_distribution: all fitness values are zero, distribution is degenerate");
  }
  SelectionDistribution dist;
  dist.entries.reserve(fitnesses.size());
  for (std::size_t i = 0; i < fitnesses.size(); ++i) {
    SelectionEntry e;
    e.id = ids.empty() ? "s" + std::to_string(i + 1) : ids[i];
    e.probability = fitnesses[i] / total;
    dist.entries.push_back(std::move(e));
  }
  return dist;
}

LayerSelectionProbabilities layer_selection_probabilities(double service_fitness,
                                                          double threshold_sum_osmotic,
                                                          double threshold_sum_public) {
  if (threshold_sum_osmotic <= 0.0 || threshold_sum_public <= 0.0) {
    throw DomainError("layer_selection_probabilities: threshold sums must be positive");
  }
  if (service_fitness < 0.0) {
    throw DomainError("layer_selection_probabilities: negative service fitness");
  }
  LayerSelectionProbabilities p;
  p.osmotic_raw = service_fitness / threshold_sum_osmotic;
  p.public_raw = service_fitness / threshold_sum_public;
  p.osmotic = std::min(p.osmotic_raw, 1.0);
  p.public_cloud = std::min(p.public_raw, 1.0);
  return p;
}

Theorem1Result check_theorem1_bounds(std::span<const double> fitnesses,
                                     double threshold_sum_osmotic,
                                     double threshold_sum_public) {
  double total = 0.0;
  for (double f : fitnesses) total += f;
  if (total <= 0.0 || threshold_sum_osmotic <= 0.0 || threshold_sum_public <= 0.0) {
    return Theorem1Result::NotApplicable;
  }
  if (!(threshold_sum_public >= total && total >= threshold_sum_osmotic)) {
    return Theorem1Result::NotApplicable;
  }
  for (double f : fitnesses) {
    const double p = f / total;
    const double lower = f / threshold_sum_public;
    const double upper = f / threshold_sum_osmotic;
    if (p < lower - kFitnessTolerance || p > upper + kFitnessTolerance) {
      return Theorem1Result::Violated;
    }
  }
  return Theorem1Result::Holds;
}

std::size_t sample(const SelectionDistribution& dist, std::mt19937_64& rng) {
  if (dist.entries.empty()) {
    throw DomainError("sample: empty distribution");
  }
  const double target = uniform_unit(rng);
  double cumulative = 0.0;
  for (std::size_t i = 0; i < dist.entries.size(); ++i) {
    cumulative += dist.entries[i].probability;
    if (target < cumulative) return i;
  }
  return dist.entries.size() - 1;  // guard against rounding at the top end
}

const ServiceId& sample_id(const SelectionDistribution& dist, std::mt19937_64& rng) {
  return dist.entries[sample(dist, rng)].id;
}

}  // namespace osmotic
