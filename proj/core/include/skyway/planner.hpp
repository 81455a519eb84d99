#pragma once

#include "skyway/drone.hpp"
#include "skyway/network.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skyway {

struct Package {
  std::string id;
  double mass = 0.0;  // kg
  std::string destination;

  bool operator==(const Package&) const = default;
};

/// One flight of a mission: travel along `path`, then release `release` at its
/// end. The final leg of a plan has no release and ends at the source.
struct Leg {
  Path path;
  std::optional<std::string> release;

  bool operator==(const Leg&) const = default;
};

struct MissionPlan {
  std::string source;
  std::vector<Leg> legs;
  std::string strategy_label;

  std::vector<std::string> release_order() const;
  std::size_t release_count() const;

  bool operator==(const MissionPlan&) const = default;
};

/// Level 1 is the bottom (longest hang, released first); level L the top.
struct HangingAssignment {
  std::map<std::string, int, std::less<>> level_of;
  int level_count = 0;

  std::optional<int> level(std::string_view package) const;
};

struct FeasibilityReport {
  bool feasible = true;
  double total_payload = 0.0;
  double capacity = 0.0;
  std::vector<std::string> violations;
};

inline constexpr std::size_t kMaxExhaustivePackages = 9;
inline constexpr std::string_view kNdfLabel = "ndf";
inline constexpr std::string_view kExhaustiveLabel = "exhaustive";

/// Payload and level-count check. Infeasibility is reported, never thrown.
/// `level_capacity` is the number of rig levels, when known.
FeasibilityReport check_feasibility(const DroneConfig& drone, std::span<const Package> packages,
                                    std::optional<std::size_t> level_capacity = std::nullopt);

/// Nearest-destination-first: from the drone's current node, deliver next the
/// package whose destination has the smallest shortest-path distance (ties by
/// package id), then return to the source.
///
/// Throws Error with unknown_node, unknown_destination or invalid_package.
MissionPlan plan_ndf(const SkywayNetwork& network, std::string_view source,
                     std::span<const Package> packages);
/// As above, after a feasibility check; throws Error(infeasible_payload).
MissionPlan plan_ndf(const SkywayNetwork& network, std::string_view source,
                     std::span<const Package> packages, const DroneConfig& drone,
                     std::optional<std::size_t> level_capacity = std::nullopt);

/// Exhaustive search over release orders minimizing total distance including
/// the return leg; ties go to the lexicographically smallest id sequence.
/// Throws Error(too_many_packages_for_exhaustive) above kMaxExhaustivePackages.
MissionPlan plan_optimal(const SkywayNetwork& network, std::string_view source,
                         std::span<const Package> packages);
MissionPlan plan_optimal(const SkywayNetwork& network, std::string_view source,
                         std::span<const Package> packages, const DroneConfig& drone,
                         std::optional<std::size_t> level_capacity = std::nullopt);

/// The i-th released package hangs at level i.
HangingAssignment assign_levels(const MissionPlan& plan);

double plan_total_distance(const MissionPlan& plan);

/// Checks the structural invariants of a plan against a network and package
/// list. Throws Error(invalid_plan).
void validate_plan(const SkywayNetwork& network, const MissionPlan& plan,
                   std::span<const Package> packages);

}  // namespace skyway
