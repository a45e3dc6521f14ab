#include "osmotic/fitness.hpp"

#include <cmath>
#include <string>

namespace osmotic {

Concentration concentration(std::size_t num_services, std::size_t num_properties) {
  if (num_properties == 0) {
    throw DomainError("concentration: number of resource properties must be positive");
  }
  return Concentration{static_cast<double>(num_services) /
                       static_cast<double>(num_properties)};
}

FitnessWeights weights_dependent(std::size_t k, std::size_t dominant_index) {
  if (k < 2) {
    throw DomainError("weights_dependent: need at least two properties");
  }
  if (dominant_index >= k) {
    throw DomainError("weights_dependent: dominant index out of range");
  }
  FitnessWeights w;
  w.mode = WeightMode::Dependent;
  w.dominant_index = dominant_index;
  w.alphas.assign(k, 0.5 / static_cast<double>(k - 1));
  w.alphas[dominant_index] = 0.5;
  return w;
}

FitnessWeights weights_independent(const ResourceDemand& consumed,
                                   const ResourceDemand& totals) {
  if (totals.load <= 0.0 || totals.energy <= 0.0 || totals.time <= 0.0) {
    throw ConfigError("weights_independent: all capacity totals must be positive");
  }
  FitnessWeights w;
  w.mode = WeightMode::Independent;
  w.alphas = {consumed.load / totals.load, consumed.energy / totals.energy,
              consumed.time / totals.time};
  return w;
}

FitnessWeights weights_independent(const ServerNode& server) {
  return weights_independent(server.consumed(), server.totals());
}

double fitness(std::span<const double> properties, const FitnessWeights& weights) {
  if (properties.size() != weights.alphas.size()) {
    throw DomainError("fitness: property count does not match weight count");
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < properties.size(); ++i) {
    if (properties[i] < 0.0) {
      throw DomainError("fitness: property value " + std::to_string(i) + " is negative");
    }
    num += weights.alphas[i] * properties[i];
    den += weights.alphas[i];
  }
  if (den <= 0.0) {
    throw DomainError("fitness: degenerate weights, weight sum must be positive");
  }
  return num / den;
}

double fitness(const ResourceDemand& demand, const FitnessWeights& weights) {
  const auto props = demand.as_array();
  return fitness(std::span<const double>(props.data(), props.size()), weights);
}

bool is_shift_blocked(const FitnessWeights& weights) {
  for (double a : weights.alphas) {
    if (std::fabs(a - 1.0) <= kWeightPinTolerance) return true;
  }
  return false;
}

ResourceDemand PropertyScales::apply(const ResourceDemand& d) const {
  if (load <= 0.0 || energy <= 0.0 || time <= 0.0) {
    throw ConfigError("PropertyScales: scales must be positive");
  }
  return {d.load / load, d.energy / energy, d.time / time};
}

double fitness(const ResourceDemand& demand, const FitnessWeights& weights,
               const PropertyScales& scales) {
  return fitness(scales.apply(demand), weights);
}

}  // namespace osmotic
