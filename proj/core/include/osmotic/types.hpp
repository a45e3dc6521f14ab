#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "osmotic/error.hpp"

namespace osmotic {

using ServiceId = std::string;

// Absolute tolerance for equality comparisons on fitness-scale values.
inline constexpr double kFitnessTolerance = 1e-9;
// Tolerance for detecting a weight pinned at 1.
inline constexpr double kWeightPinTolerance = 1e-12;
// Slack applied when checking whether a demand fits remaining capacity,
// so exact-fill sequences are not refused over float dust.
inline constexpr double kCapacitySlack = 1e-9;

// One service's requirements: load (work units), energy (J), processing time (s).
struct ResourceDemand {
  double load = 0.0;
  double energy = 0.0;
  double time = 0.0;

  std::array<double, 3> as_array() const { return {load, energy, time}; }

  ResourceDemand operator+(const ResourceDemand& o) const {
    return {load + o.load, energy + o.energy, time + o.time};
  }
  ResourceDemand operator-(const ResourceDemand& o) const {
    return {load - o.load, energy - o.energy, time - o.time};
  }
  ResourceDemand scaled(double f) const { return {load * f, energy * f, time * f}; }

  bool non_negative() const { return load >= 0.0 && energy >= 0.0 && time >= 0.0; }

  // A valid service demands at least one resource.
  bool valid_for_service() const {
    return non_negative() && (load > 0.0 || energy > 0.0 || time > 0.0);
  }

  // Component-wise comparison with capacity slack.
  bool fits_within(const ResourceDemand& available) const {
    return load <= available.load + kCapacitySlack &&
           energy <= available.energy + kCapacitySlack &&
           time <= available.time + kCapacitySlack;
  }
};

struct ServiceRequest {
  ServiceId id;
  int user_id = 0;
  ResourceDemand demand;
  bool divisible = false;
  std::optional<ServiceId> parent_id;
};

// A compute resource with capacity totals and monotone consumption state.
struct ServerNode {
  int id = 0;
  double load_current = 0.0;    // consumed load
  double load_total = 0.0;      // load capacity
  double energy_consumed = 0.0;
  double energy_total = 0.0;
  double time_used = 0.0;
  double time_total = 0.0;
  int concurrent_capacity = 0;  // max simultaneously hosted services
  std::vector<ServiceId> hosted;

  ResourceDemand totals() const { return {load_total, energy_total, time_total}; }
  ResourceDemand consumed() const { return {load_current, energy_consumed, time_used}; }

  bool has_free_slot() const {
    return static_cast<int>(hosted.size()) < concurrent_capacity;
  }

  bool can_host(const ResourceDemand& demand) const {
    return has_free_slot() && demand.fits_within(remaining());
  }

  void host(const ServiceId& service, const ResourceDemand& demand) {
    if (!can_host(demand)) {
      throw DomainError("server " + std::to_string(id) + " cannot host service " + service);
    }
    load_current += demand.load;
    energy_consumed += demand.energy;
    time_used += demand.time;
    hosted.push_back(service);
  }

  ResourceDemand remaining() const {
    return {load_total - load_current, energy_total - energy_consumed,
            time_total - time_used};
  }
};

// remaining_capacity(server) = (L_t - L_a, E_t - E_c, tau_t - tau_p).
inline ResourceDemand remaining_capacity(const ServerNode& server) {
  return server.remaining();
}

enum class LayerKind { Osmotic, Public };

// A named pool of servers plus the ordered set of services placed on it.
struct Layer {
  LayerKind kind = LayerKind::Osmotic;
  std::vector<ServerNode> servers;
  std::vector<ServiceId> placed;

  ResourceDemand consumed() const {
    ResourceDemand sum;
    for (const auto& s : servers) sum = sum + s.consumed();
    return sum;
  }
  ResourceDemand capacity() const {
    ResourceDemand sum;
    for (const auto& s : servers) sum = sum + s.totals();
    return sum;
  }
};

enum class WeightMode { Dependent, Independent };

// Fitness weights alpha_1..alpha_k, each in [0, 1]. Dependent mode sums to 1.
struct FitnessWeights {
  WeightMode mode = WeightMode::Dependent;
  std::vector<double> alphas;
  std::optional<std::size_t> dominant_index;
};

// Ratio of services to resource properties.
struct Concentration {
  double value = 0.0;
};

}  // namespace osmotic
