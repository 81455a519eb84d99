#pragma once

#include "skyway/drone.hpp"

#include <vector>

namespace skyway {

struct BatteryState {
  double capacity = 0.0;  // J
  double remaining = 0.0;

  static BatteryState full(double capacity) { return {capacity, capacity}; }
  bool operator==(const BatteryState&) const = default;
};

struct EnergyLegRecord {
  double distance_3d = 0.0;  // m, horizontal plus vertical travel
  double payload_mass = 0.0;
  double rate = 0.0;  // J/m
  double energy = 0.0;
};

struct EnergyBreakdown {
  std::vector<EnergyLegRecord> legs;
  double total = 0.0;

  void add(const EnergyLegRecord& record) {
    legs.push_back(record);
    total += record.energy;
  }
};

// Energy per meter is affine in the carried payload:
//   rate(m) = base_rate + payload_rate * m
// and applies equally to horizontal and vertical travel.

/// Throws Error(negative_payload).
double consumption_rate(const DroneConfig& drone, double payload_mass);

/// rate(payload_mass) * distance_3d. Throws Error(negative_distance).
double leg_energy(const DroneConfig& drone, double payload_mass, double distance_3d);

/// Returns the battery after spending `energy`. Exhausting the battery exactly
/// is allowed; asking for more than remains throws BatteryDepleted.
BatteryState drain(BatteryState battery, double energy);

}  // namespace skyway
