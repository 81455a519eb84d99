#include "skyway/planner.hpp"

#include "skyway/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <unordered_map>

namespace skyway {

std::vector<std::string> MissionPlan::release_order() const {
  std::vector<std::string> order;
  for (const Leg& leg : legs) {
    if (leg.release) order.push_back(*leg.release);
  }
  return order;
}

std::size_t MissionPlan::release_count() const {
  return static_cast<std::size_t>(
      std::count_if(legs.begin(), legs.end(), [](const Leg& l) { return l.release.has_value(); }));
}

std::optional<int> HangingAssignment::level(std::string_view package) const {
  auto it = level_of.find(package);
  if (it == level_of.end()) return std::nullopt;
  return it->second;
}

FeasibilityReport check_feasibility(const DroneConfig& drone, std::span<const Package> packages,
                                    std::optional<std::size_t> level_capacity) {
  FeasibilityReport report;
  report.capacity = drone.max_payload;
  for (const Package& p : packages) report.total_payload += p.mass;

  if (report.total_payload > drone.max_payload) {
    report.violations.push_back(fmt::format("payload {} kg exceeds capacity {} kg",
                                            format_quantity(report.total_payload),
                                            format_quantity(drone.max_payload)));
  }
  if (level_capacity && packages.size() > *level_capacity) {
    report.violations.push_back(fmt::format("{} packages exceed the {} available hanging levels",
                                            packages.size(), *level_capacity));
  }
  report.feasible = report.violations.empty();
  return report;
}

namespace {

void require_feasible(const DroneConfig& drone, std::span<const Package> packages,
                      std::optional<std::size_t> level_capacity) {
  const FeasibilityReport report = check_feasibility(drone, packages, level_capacity);
  if (!report.feasible) {
    throw Error(Errc::infeasible_payload,
                fmt::format("infeasible mission: {}", fmt::join(report.violations, "; ")));
  }
}

void validate_packages(const SkywayNetwork& network, std::string_view source,
                       std::span<const Package> packages) {
  if (!network.contains(source)) {
    throw Error(Errc::unknown_node, fmt::format("unknown source node '{}'", source));
  }
  std::set<std::string_view> ids;
  for (const Package& p : packages) {
    if (p.id.empty()) throw Error(Errc::invalid_package, "package with empty id");
    if (!ids.insert(p.id).second) {
      throw Error(Errc::invalid_package, fmt::format("duplicate package id '{}'", p.id));
    }
    if (!std::isfinite(p.mass) || p.mass <= 0.0) {
      throw Error(Errc::invalid_package,
                  fmt::format("package '{}' has non-positive mass {}", p.id, p.mass));
    }
    if (!network.contains(p.destination)) {
      throw Error(Errc::unknown_destination,
                  fmt::format("package '{}' targets unknown node '{}'", p.id, p.destination));
    }
    if (p.destination == source) {
      throw Error(Errc::invalid_package,
                  fmt::format("package '{}' targets the mission source '{}'", p.id, source));
    }
  }
}

// Packages sorted by id; every tie-break below relies on this order.
std::vector<const Package*> sorted_by_id(std::span<const Package> packages) {
  std::vector<const Package*> sorted;
  sorted.reserve(packages.size());
  for (const Package& p : packages) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(),
            [](const Package* l, const Package* r) { return l->id < r->id; });
  return sorted;
}

// Shortest paths between every pair of mission stops (source and destinations).
class StopPaths {
 public:
  StopPaths(const SkywayNetwork& network, std::string_view source,
            const std::vector<const Package*>& packages)
      : network_(&network) {
    add(source);
    for (const Package* p : packages) add(p->destination);
  }

  const Path& get(std::string_view from, std::string_view to) const {
    const auto& row = from_.at(std::string(from));
    return row[network_->index_of(to).value()];
  }

 private:
  void add(std::string_view stop) {
    std::string key(stop);
    if (!from_.contains(key)) from_.emplace(key, network_->shortest_paths_from(stop));
  }

  const SkywayNetwork* network_;
  std::unordered_map<std::string, std::vector<Path>> from_;
};

MissionPlan assemble(std::string_view source, const std::vector<const Package*>& order,
                     const StopPaths& paths, std::string_view label) {
  MissionPlan plan;
  plan.source = std::string(source);
  plan.strategy_label = std::string(label);
  std::string_view at = source;
  for (const Package* p : order) {
    plan.legs.push_back(Leg{paths.get(at, p->destination), p->id});
    at = p->destination;
  }
  plan.legs.push_back(Leg{paths.get(at, source), std::nullopt});
  return plan;
}

}  // namespace

MissionPlan plan_ndf(const SkywayNetwork& network, std::string_view source,
                     std::span<const Package> packages) {
  validate_packages(network, source, packages);
  std::vector<const Package*> pending = sorted_by_id(packages);
  const StopPaths paths(network, source, pending);

  std::vector<const Package*> order;
  order.reserve(pending.size());
  std::string_view at = source;
  while (!pending.empty()) {
    auto nearest = pending.begin();
    double nearest_distance = paths.get(at, (*nearest)->destination).length;
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      const double d = paths.get(at, (*it)->destination).length;
      if (d < nearest_distance && !same_length(d, nearest_distance)) {
        nearest = it;
        nearest_distance = d;
      }
    }
    order.push_back(*nearest);
    at = (*nearest)->destination;
    pending.erase(nearest);
  }
  return assemble(source, order, paths, kNdfLabel);
}

MissionPlan plan_ndf(const SkywayNetwork& network, std::string_view source,
                     std::span<const Package> packages, const DroneConfig& drone,
                     std::optional<std::size_t> level_capacity) {
  require_feasible(drone, packages, level_capacity);
  return plan_ndf(network, source, packages);
}

MissionPlan plan_optimal(const SkywayNetwork& network, std::string_view source,
                         std::span<const Package> packages) {
  if (packages.size() > kMaxExhaustivePackages) {
    throw Error(Errc::too_many_packages_for_exhaustive,
                fmt::format("exhaustive planning supports at most {} packages, got {}",
                            kMaxExhaustivePackages, packages.size()));
  }
  validate_packages(network, source, packages);
  const std::vector<const Package*> by_id = sorted_by_id(packages);
  const StopPaths paths(network, source, by_id);

  // Permutations of indices into by_id; next_permutation walks them in
  // lexicographic id order, so keeping only strict improvements yields the
  // smallest id sequence among equal totals.
  std::vector<std::size_t> order(by_id.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> best_order = order;
  double best_total = std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    std::string_view at = source;
    for (std::size_t i : order) {
      total += paths.get(at, by_id[i]->destination).length;
      at = by_id[i]->destination;
    }
    total += paths.get(at, source).length;
    if (total < best_total) {
      best_total = total;
      best_order = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<const Package*> release;
  release.reserve(best_order.size());
  for (std::size_t i : best_order) release.push_back(by_id[i]);
  return assemble(source, release, paths, kExhaustiveLabel);
}

MissionPlan plan_optimal(const SkywayNetwork& network, std::string_view source,
                         std::span<const Package> packages, const DroneConfig& drone,
                         std::optional<std::size_t> level_capacity) {
  require_feasible(drone, packages, level_capacity);
  return plan_optimal(network, source, packages);
}

HangingAssignment assign_levels(const MissionPlan& plan) {
  HangingAssignment assignment;
  int level = 0;
  for (const Leg& leg : plan.legs) {
    if (leg.release) assignment.level_of.emplace(*leg.release, ++level);
  }
  assignment.level_count = level;
  return assignment;
}

double plan_total_distance(const MissionPlan& plan) {
  double total = 0.0;
  for (const Leg& leg : plan.legs) total += leg.path.length;
  return total;
}

void validate_plan(const SkywayNetwork& network, const MissionPlan& plan,
                   std::span<const Package> packages) {
  auto fail = [](const std::string& why) { throw Error(Errc::invalid_plan, why); };

  if (!network.contains(plan.source)) fail(fmt::format("unknown source '{}'", plan.source));
  if (plan.legs.empty()) fail("plan has no legs; the return leg is mandatory");

  std::unordered_map<std::string_view, const Package*> by_id;
  for (const Package& p : packages) by_id.emplace(p.id, &p);
  std::set<std::string_view> released;

  std::string_view at = plan.source;
  for (std::size_t k = 0; k < plan.legs.size(); ++k) {
    const Leg& leg = plan.legs[k];
    const bool last = k + 1 == plan.legs.size();
    const Path& path = leg.path;
    if (path.nodes.empty()) fail(fmt::format("leg {} has an empty path", k));
    if (path.start() != at) {
      fail(fmt::format("leg {} starts at '{}' but the drone is at '{}'", k, path.start(), at));
    }
    double length = 0.0;
    for (std::size_t i = 0; i < path.nodes.size(); ++i) {
      if (!network.contains(path.nodes[i])) {
        fail(fmt::format("leg {} visits unknown node '{}'", k, path.nodes[i]));
      }
      if (i == 0) continue;
      auto seg = network.segment_length(path.nodes[i - 1], path.nodes[i]);
      if (!seg) {
        fail(fmt::format("leg {} hops '{}' -> '{}' without a segment", k, path.nodes[i - 1],
                         path.nodes[i]));
      }
      length += *seg;
    }
    if (std::abs(length - path.length) > 1e-9 * std::max(1.0, length)) {
      fail(fmt::format("leg {} length {} does not match its segments ({})", k, path.length, length));
    }
    if (last) {
      if (leg.release) fail("the final leg must be the return leg without a release");
      if (path.end() != plan.source) fail("the final leg must end at the source");
    } else {
      if (!leg.release) fail(fmt::format("leg {} has no release but is not the final leg", k));
      auto it = by_id.find(*leg.release);
      if (it == by_id.end()) fail(fmt::format("leg {} releases unknown package '{}'", k, *leg.release));
      if (!released.insert(*leg.release).second) {
        fail(fmt::format("package '{}' is released twice", *leg.release));
      }
      if (it->second->destination != path.end()) {
        fail(fmt::format("package '{}' is released at '{}' instead of '{}'", *leg.release,
                         path.end(), it->second->destination));
      }
    }
    at = path.end();
  }
  if (released.size() != packages.size()) {
    fail(fmt::format("plan releases {} of {} packages", released.size(), packages.size()));
  }
}

}  // namespace skyway
