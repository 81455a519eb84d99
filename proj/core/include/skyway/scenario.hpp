#pragma once

#include "skyway/drone.hpp"
#include "skyway/errors.hpp"
#include "skyway/network.hpp"
#include "skyway/planner.hpp"
#include "skyway/simulator.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace skyway {

/// Everything needed to plan and fly one mission.
struct Scenario {
  std::string label;
  std::string source;
  std::vector<Node> nodes;
  std::vector<SegmentSpec> segments;
  DroneConfig drone;
  StringRig rig = default_rig();
  std::vector<Package> packages;

  bool operator==(const Scenario&) const = default;

  /// Builds the network; the scenario is assumed to have been validated.
  SkywayNetwork network() const;
};

/// Parses and validates a scenario document. Omitted drone and rig fields take
/// their defaults; `segments`, `packages` and `label` may be omitted.
///
/// Throws Error(syntax_error) for malformed JSON and ValidationError carrying
/// every violation with a locator such as "packages[2].mass".
Scenario parse_scenario(std::string_view text);

/// Collects every validation issue without throwing.
std::vector<ValidationIssue> validate_scenario(const Scenario& scenario);

/// Canonical JSON text (two-space indent, trailing newline). Parsing the output
/// yields an equal scenario.
std::string serialize_scenario(const Scenario& scenario);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

struct GeneratorParams {
  std::size_t node_count = 5;
  std::size_t package_count = 3;
  std::uint64_t seed = 0;
  double width = 100.0;   // m
  double height = 100.0;  // m
  std::size_t rig_levels = 3;
};

/// Seeded random scenario: nodes in the area with rooftops in [5, 60] m, a
/// random spanning tree plus extra segments, distinct destinations and
/// package masses in (0.1, 2.27] kg. Equal params give byte-identical output
/// on every platform. Throws Error(invalid_params).
Scenario generate_scenario(const GeneratorParams& params);

/// CSV with header `t,x,y,z,payload_mass,battery_remaining,event`, six
/// decimals per number, empty event for plain samples.
std::string export_telemetry(const TelemetryLog& log);

std::string plan_to_json(const MissionPlan& plan);
std::string report_to_json(const MissionReport& report);

struct StrategyOutcome {
  std::string label;
  std::vector<std::string> release_order;
  double total_distance = 0.0;  // planned distance over the skyway graph
  double total_energy = 0.0;    // simulated
  bool completed = false;
};

struct CompareResult {
  StrategyOutcome ndf;
  StrategyOutcome optimal;
  double distance_gap_percent = 0.0;  // 100 * (ndf - optimal) / optimal
};

/// Plans and simulates both strategies. Throws Error(infeasible_payload) or
/// Error(too_many_packages_for_exhaustive).
CompareResult compare_strategies(const Scenario& scenario, const SimulationConfig& config = {});

std::string compare_to_json(const CompareResult& result);

}  // namespace skyway
