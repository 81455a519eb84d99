#pragma once

#include "skyway/drone.hpp"
#include "skyway/energy.hpp"
#include "skyway/network.hpp"
#include "skyway/planner.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skyway {

/// Packages hang from a string at fixed levels below the drone body.
/// hangs[0] is level 1 (bottom, longest hang); hangs must strictly decrease
/// and stay positive. clearance is the margin kept above the highest rooftop.
struct StringRig {
  std::vector<double> hangs;
  double clearance = 1.0;

  std::size_t level_count() const noexcept { return hangs.size(); }
  /// Throws Error(invalid_level) outside 1..level_count().
  double hang(int level) const;

  bool operator==(const StringRig&) const = default;
};

/// Three-level rig with hangs 2.0/1.5/1.0 m and 1.0 m clearance.
StringRig default_rig();

/// Field-name/message pairs for every violated rig invariant.
std::vector<std::pair<std::string, std::string>> rig_issues(const StringRig& rig);
/// Throws Error(invalid_rig).
void validate_rig(const StringRig& rig);

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool operator==(const Vec3&) const = default;
};

struct DroneState {
  Vec3 position;
  std::set<std::string> loaded;
  BatteryState battery;
  double clock = 0.0;
};

enum class EventKind {
  sample,    // plain periodic sample, no event
  waypoint,  // turn at an intermediate path node, exported without a label
  takeoff,
  cruise,
  arrive,
  descend,
  release,
  ascend,
  return_leg,
  land,
  abort,
};

struct TelemetryRecord {
  double t = 0.0;
  Vec3 position;
  double payload_mass = 0.0;
  double battery_remaining = 0.0;
  EventKind event = EventKind::sample;
  std::string package;  // set for release events

  bool operator==(const TelemetryRecord&) const = default;
};

using TelemetryLog = std::vector<TelemetryRecord>;

/// "" for samples and waypoints, otherwise e.g. "TAKEOFF" or "RELEASE(p1)".
std::string event_label(const TelemetryRecord& record);

struct ReleaseRecord {
  std::string package;
  std::string node;
  double t = 0.0;
};

struct MissionReport {
  bool completed = false;
  std::vector<ReleaseRecord> releases;
  double total_distance_3d = 0.0;
  double total_horizontal_distance = 0.0;
  double total_vertical_distance = 0.0;
  double duration = 0.0;
  EnergyBreakdown energy;
  Vec3 end_position;
  std::optional<std::string> abort_reason;
};

struct SimulationConfig {
  double release_dwell = 2.0;  // s, pause while the package rebounds free
  double sample_step = 0.1;    // s, telemetry sampling period
};

struct SimulationResult {
  TelemetryLog telemetry;
  MissionReport report;
};

/// Altitude keeping the lowest loaded package `clearance` above every rooftop
/// on the path. An empty `loaded_levels` means the drone flies unloaded.
double cruise_altitude(const SkywayNetwork& network, const Path& leg_path, const StringRig& rig,
                       const std::set<int>& loaded_levels);

/// Drone altitude at which the package on `level` touches the node's rooftop.
/// Throws Error(invalid_level).
double release_altitude(const Node& node, const StringRig& rig, int level);

/// Flies `plan` leg by leg: climb or descend to the leg's cruise altitude,
/// traverse the path horizontally, descend until the next package touches the
/// rooftop, dwell, release, and finally land back on the source rooftop.
///
/// Vertical and horizontal motion are sequential. Energy is charged per meter
/// of 3D travel at the rate for the payload carried on that leg. Battery
/// exhaustion ends the run with an ABORT record instead of throwing.
///
/// Throws Error for invalid input: invalid_plan, inconsistent_assignment,
/// invalid_rig, invalid_drone_config, infeasible_payload.
SimulationResult simulate_mission(const SkywayNetwork& network, const MissionPlan& plan,
                                  const HangingAssignment& assignment, const DroneConfig& drone,
                                  const StringRig& rig, std::span<const Package> packages,
                                  const SimulationConfig& config = {});

}  // namespace skyway
