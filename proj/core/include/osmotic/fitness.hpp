#pragma once

#include <span>

#include "osmotic/types.hpp"

namespace osmotic {

/// Concentration C = |S| / |R|: services over resource properties.
/// Throws DomainError when num_properties is zero.
Concentration concentration(std::size_t num_services, std::size_t num_properties);

/// Dependent-mode weights: the dominant property gets 0.5, every other
/// property gets 0.5/(k-1), so the weights sum to 1.
/// Requires k >= 2 and dominant_index < k.
FitnessWeights weights_dependent(std::size_t k, std::size_t dominant_index);

/// Independent-mode weights: per-property consumed/total ratios
/// (alpha_1 = L_a/L_t, alpha_2 = E_c/E_t, alpha_3 = tau_p/tau_t).
/// Throws ConfigError when any total is zero.
FitnessWeights weights_independent(const ResourceDemand& consumed,
                                   const ResourceDemand& totals);
FitnessWeights weights_independent(const ServerNode& server);

/// Weighted mean of non-negative property values:
/// (alpha_1 r_1 + ... + alpha_k r_k) / (alpha_1 + ... + alpha_k).
/// Throws DomainError when the weight sum is zero, the sizes differ,
/// or a property value is negative.
double fitness(std::span<const double> properties, const FitnessWeights& weights);
double fitness(const ResourceDemand& demand, const FitnessWeights& weights);

/// True when any weight sits at 1 (within 1e-12): the request is pinned to
/// one resource and no shift between layers may be made for it.
bool is_shift_blocked(const FitnessWeights& weights);

// Per-property reference scales. Dividing a demand vector by the scales makes
// fitness values dimensionless and comparable across unit systems; unit scales
// reproduce the raw mixed-unit behavior.
struct PropertyScales {
  double load = 1.0;
  double energy = 1.0;
  double time = 1.0;

  static PropertyScales unit() { return {}; }

  ResourceDemand apply(const ResourceDemand& d) const;
};

/// Fitness of a demand vector after normalization by the given scales.
double fitness(const ResourceDemand& demand, const FitnessWeights& weights,
               const PropertyScales& scales);

}  // namespace osmotic
