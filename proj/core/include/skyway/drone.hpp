#pragma once

#include <string>
#include <utility>
#include <vector>

namespace skyway {

/// Default parameters used when a scenario omits them. The energy and speed
/// values are desk-scale defaults, not measurements.
namespace defaults {
inline constexpr double kFrameMass = 1.5;           // kg
inline constexpr double kMaxPayload = 15.9;         // kg
inline constexpr double kBatteryCapacity = 50'000;  // J
inline constexpr double kCruiseSpeed = 5.0;         // m/s
inline constexpr double kVerticalSpeed = 2.0;       // m/s
inline constexpr double kBaseRate = 2.0;            // J/m
inline constexpr double kPayloadRate = 1.0;         // J/(m kg)
}  // namespace defaults

struct DroneConfig {
  double frame_mass = defaults::kFrameMass;  // recorded only; folded into base_rate
  double max_payload = defaults::kMaxPayload;
  double battery_capacity = defaults::kBatteryCapacity;
  double cruise_speed = defaults::kCruiseSpeed;
  double vertical_speed = defaults::kVerticalSpeed;
  double base_rate = defaults::kBaseRate;
  double payload_rate = defaults::kPayloadRate;

  bool operator==(const DroneConfig&) const = default;
};

/// Field-name/message pairs for every violated DroneConfig invariant; empty
/// when the config is valid.
std::vector<std::pair<std::string, std::string>> drone_config_issues(const DroneConfig& drone);

/// Throws Error(invalid_drone_config) listing every violation.
void validate_drone_config(const DroneConfig& drone);

}  // namespace skyway
