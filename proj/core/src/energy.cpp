#include "skyway/energy.hpp"

#include "skyway/errors.hpp"

#include <fmt/format.h>

#include <cmath>

namespace skyway {

std::vector<std::pair<std::string, std::string>> drone_config_issues(const DroneConfig& drone) {
  std::vector<std::pair<std::string, std::string>> issues;
  auto positive = [&issues](const char* field, double value) {
    if (!std::isfinite(value) || value <= 0.0) {
      issues.emplace_back(field, fmt::format("must be > 0, got {}", value));
    }
  };
  if (!std::isfinite(drone.frame_mass) || drone.frame_mass < 0.0) {
    issues.emplace_back("frame_mass", fmt::format("must be >= 0, got {}", drone.frame_mass));
  }
  positive("max_payload", drone.max_payload);
  positive("battery_capacity", drone.battery_capacity);
  positive("cruise_speed", drone.cruise_speed);
  positive("vertical_speed", drone.vertical_speed);
  positive("base_rate", drone.base_rate);
  positive("payload_rate", drone.payload_rate);
  return issues;
}

void validate_drone_config(const DroneConfig& drone) {
  auto issues = drone_config_issues(drone);
  if (issues.empty()) return;
  std::string message = "invalid drone config:";
  for (const auto& [field, why] : issues) message += fmt::format(" {} {};", field, why);
  message.pop_back();
  throw Error(Errc::invalid_drone_config, message);
}

double consumption_rate(const DroneConfig& drone, double payload_mass) {
  if (payload_mass < 0.0) {
    throw Error(Errc::negative_payload, fmt::format("negative payload {} kg", payload_mass));
  }
  return drone.base_rate + drone.payload_rate * payload_mass;
}

double leg_energy(const DroneConfig& drone, double payload_mass, double distance_3d) {
  if (distance_3d < 0.0) {
    throw Error(Errc::negative_distance, fmt::format("negative distance {} m", distance_3d));
  }
  return consumption_rate(drone, payload_mass) * distance_3d;
}

BatteryState drain(BatteryState battery, double energy) {
  if (energy < 0.0) {
    throw Error(Errc::negative_energy, fmt::format("cannot drain negative energy {} J", energy));
  }
  if (energy > battery.remaining) throw BatteryDepleted(energy, battery.remaining);
  battery.remaining -= energy;
  return battery;
}

}  // namespace skyway
