#include "skyway/simulator.hpp"

#include "skyway/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <utility>

namespace skyway {

double StringRig::hang(int level) const {
  if (level < 1 || static_cast<std::size_t>(level) > hangs.size()) {
    throw Error(Errc::invalid_level,
                fmt::format("level {} outside 1..{}", level, hangs.size()));
  }
  return hangs[static_cast<std::size_t>(level - 1)];
}

StringRig default_rig() { return StringRig{{2.0, 1.5, 1.0}, 1.0}; }

std::vector<std::pair<std::string, std::string>> rig_issues(const StringRig& rig) {
  std::vector<std::pair<std::string, std::string>> issues;
  for (std::size_t i = 0; i < rig.hangs.size(); ++i) {
    const double h = rig.hangs[i];
    if (!std::isfinite(h) || h <= 0.0) {
      issues.emplace_back(fmt::format("levels[{}]", i), fmt::format("hang must be > 0, got {}", h));
    } else if (i > 0 && !(h < rig.hangs[i - 1])) {
      issues.emplace_back(fmt::format("levels[{}]", i),
                          fmt::format("hang {} must be shorter than the level below ({})", h,
                                      rig.hangs[i - 1]));
    }
  }
  if (!std::isfinite(rig.clearance) || rig.clearance <= 0.0) {
    issues.emplace_back("clearance", fmt::format("must be > 0, got {}", rig.clearance));
  }
  return issues;
}

void validate_rig(const StringRig& rig) {
  auto issues = rig_issues(rig);
  if (issues.empty()) return;
  std::string message = "invalid string rig:";
  for (const auto& [field, why] : issues) message += fmt::format(" {} {};", field, why);
  message.pop_back();
  throw Error(Errc::invalid_rig, message);
}

std::string event_label(const TelemetryRecord& record) {
  switch (record.event) {
    case EventKind::sample:
    case EventKind::waypoint: return "";
    case EventKind::takeoff: return "TAKEOFF";
    case EventKind::cruise: return "CRUISE";
    case EventKind::arrive: return "ARRIVE";
    case EventKind::descend: return "DESCEND";
    case EventKind::release: return fmt::format("RELEASE({})", record.package);
    case EventKind::ascend: return "ASCEND";
    case EventKind::return_leg: return "RETURN_LEG";
    case EventKind::land: return "LAND";
    case EventKind::abort: return "ABORT";
  }
  return "";
}

double cruise_altitude(const SkywayNetwork& network, const Path& leg_path, const StringRig& rig,
                       const std::set<int>& loaded_levels) {
  double highest_roof = 0.0;
  for (const std::string& id : leg_path.nodes) {
    highest_roof = std::max(highest_roof, network.node(id).rooftop_height);
  }
  // The lowest-hanging package sits on the smallest loaded level.
  const double hang = loaded_levels.empty() ? 0.0 : rig.hang(*loaded_levels.begin());
  return highest_roof + hang + rig.clearance;
}

double release_altitude(const Node& node, const StringRig& rig, int level) {
  return node.rooftop_height + rig.hang(level);
}

namespace {

struct Aborted {
  std::string reason;
};

class MissionRunner {
 public:
  MissionRunner(const DroneConfig& drone, const SimulationConfig& config, Vec3 start,
                double payload)
      : drone_(drone), config_(config), position_(start), payload_(payload),
        battery_(BatteryState::full(drone.battery_capacity)) {}

  void emit(EventKind event, std::string package = {}) {
    log_.push_back(TelemetryRecord{clock_, position_, payload_, battery_.remaining, event,
                                   std::move(package)});
  }

  // Straight-line move at constant speed, charging energy for the current
  // payload. Throws Aborted with the drone stopped where the battery ran out.
  void move_to(const Vec3& target, bool horizontal) {
    const Vec3 from = position_;
    const double distance =
        std::sqrt(square(target.x - from.x) + square(target.y - from.y) + square(target.z - from.z));
    if (distance == 0.0) return;

    const double speed = horizontal ? drone_.cruise_speed : drone_.vertical_speed;
    const double duration = distance / speed;
    const double rate = consumption_rate(drone_, payload_);
    const double energy = rate * distance;
    const double start_clock = clock_;
    const double start_battery = battery_.remaining;

    auto at_fraction = [&](double f) {
      return Vec3{from.x + (target.x - from.x) * f, from.y + (target.y - from.y) * f,
                  from.z + (target.z - from.z) * f};
    };
    auto sample_until = [&](double end_clock) {
      samples_between(start_clock, end_clock, [&](double t) {
        const double f = (t - start_clock) / duration;
        return std::pair{at_fraction(f), start_battery - energy * f};
      });
    };

    try {
      battery_ = drain(battery_, energy);
    } catch (const BatteryDepleted& depleted) {
      const double f = start_battery / energy;
      const double stop_clock = start_clock + duration * f;
      sample_until(stop_clock);
      position_ = at_fraction(f);
      clock_ = stop_clock;
      battery_.remaining = 0.0;
      account(distance * f, horizontal);
      throw Aborted{fmt::format("battery depleted while flying to ({:.3f}, {:.3f}, {:.3f}): "
                                "needed {:.6f} J, had {:.6f} J",
                                target.x, target.y, target.z, depleted.required(),
                                depleted.available())};
    }
    sample_until(start_clock + duration);
    position_ = target;
    clock_ = start_clock + duration;
    account(distance, horizontal);
  }

  void dwell(double seconds) {
    if (seconds <= 0.0) return;
    const double start_clock = clock_;
    samples_between(start_clock, start_clock + seconds,
                    [this](double) { return std::pair{position_, battery_.remaining}; });
    clock_ = start_clock + seconds;
  }

  void begin_leg() { leg_distance_ = 0.0; }

  void end_leg() {
    const double rate = consumption_rate(drone_, payload_);
    report_.energy.add(EnergyLegRecord{leg_distance_, payload_, rate,
                                       leg_energy(drone_, payload_, leg_distance_)});
  }

  void drop(const Package& package, std::string node) {
    payload_ = std::max(0.0, payload_ - package.mass);
    report_.releases.push_back(ReleaseRecord{package.id, std::move(node), clock_});
    emit(EventKind::release, package.id);
  }

  const Vec3& position() const { return position_; }

  SimulationResult finish(bool completed, std::optional<std::string> abort_reason) {
    report_.completed = completed;
    report_.abort_reason = std::move(abort_reason);
    report_.duration = clock_;
    report_.end_position = position_;
    return SimulationResult{std::move(log_), std::move(report_)};
  }

 private:
  static double square(double v) { return v * v; }

  void account(double distance, bool horizontal) {
    leg_distance_ += distance;
    report_.total_distance_3d += distance;
    (horizontal ? report_.total_horizontal_distance : report_.total_vertical_distance) += distance;
  }

  // Emits periodic samples on the global grid strictly inside (begin, end).
  template <typename StateAt>
  void samples_between(double begin, double end, StateAt state_at) {
    constexpr double kEps = 1e-9;
    const double step = config_.sample_step;
    while (static_cast<double>(next_sample_) * step <= begin + kEps) ++next_sample_;
    for (double t = static_cast<double>(next_sample_) * step; t < end - kEps;
         t = static_cast<double>(++next_sample_) * step) {
      auto [pos, battery] = state_at(t);
      log_.push_back(TelemetryRecord{t, pos, payload_, battery, EventKind::sample, {}});
    }
  }

  const DroneConfig& drone_;
  const SimulationConfig& config_;
  Vec3 position_;
  double payload_;
  BatteryState battery_;
  double clock_ = 0.0;
  std::size_t next_sample_ = 0;
  double leg_distance_ = 0.0;
  TelemetryLog log_;
  MissionReport report_;
};

void check_inputs(const SkywayNetwork& network, const MissionPlan& plan,
                  const HangingAssignment& assignment, const DroneConfig& drone,
                  const StringRig& rig, std::span<const Package> packages,
                  const SimulationConfig& config) {
  validate_drone_config(drone);
  validate_rig(rig);
  if (!(config.sample_step > 0.0) || !(config.release_dwell >= 0.0)) {
    throw Error(Errc::invalid_params, "sample_step must be > 0 and release_dwell >= 0");
  }
  validate_plan(network, plan, packages);
  if (rig.level_count() < packages.size()) {
    throw Error(Errc::invalid_rig, fmt::format("rig has {} levels but the mission carries {} packages",
                                               rig.level_count(), packages.size()));
  }
  const FeasibilityReport feasibility = check_feasibility(drone, packages, rig.level_count());
  if (!feasibility.feasible) {
    throw Error(Errc::infeasible_payload,
                fmt::format("infeasible mission: {}", fmt::join(feasibility.violations, "; ")));
  }

  const std::vector<std::string> order = plan.release_order();
  if (assignment.level_count != static_cast<int>(order.size()) ||
      assignment.level_of.size() != order.size()) {
    throw Error(Errc::inconsistent_assignment,
                fmt::format("assignment covers {} levels for {} releases", assignment.level_count,
                            order.size()));
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto level = assignment.level(order[i]);
    if (level != static_cast<int>(i + 1)) {
      throw Error(Errc::inconsistent_assignment,
                  fmt::format("package '{}' is released {} but hangs at level {}", order[i], i + 1,
                              level ? fmt::to_string(*level) : std::string("none")));
    }
  }
}

}  // namespace

SimulationResult simulate_mission(const SkywayNetwork& network, const MissionPlan& plan,
                                  const HangingAssignment& assignment, const DroneConfig& drone,
                                  const StringRig& rig, std::span<const Package> packages,
                                  const SimulationConfig& config) {
  check_inputs(network, plan, assignment, drone, rig, packages, config);

  std::unordered_map<std::string_view, const Package*> by_id;
  double payload = 0.0;
  for (const Package& p : packages) {
    by_id.emplace(p.id, &p);
    payload += p.mass;
  }
  std::set<int> loaded_levels;
  for (const auto& [id, level] : assignment.level_of) loaded_levels.insert(level);

  const Node& source = network.node(plan.source);
  MissionRunner runner(drone, config, Vec3{source.x, source.y, source.rooftop_height}, payload);
  runner.emit(EventKind::takeoff);

  try {
    for (std::size_t k = 0; k < plan.legs.size(); ++k) {
      const Leg& leg = plan.legs[k];
      const Node& end = network.node(leg.path.end());
      runner.begin_leg();
      if (k > 0) runner.emit(leg.release ? EventKind::ascend : EventKind::return_leg);

      if (leg.path.hops() > 0) {
        const double cruise = cruise_altitude(network, leg.path, rig, loaded_levels);
        const Vec3 here = runner.position();
        runner.move_to(Vec3{here.x, here.y, cruise}, false);
        runner.emit(EventKind::cruise);
        for (std::size_t i = 1; i < leg.path.nodes.size(); ++i) {
          const Node& next = network.node(leg.path.nodes[i]);
          runner.move_to(Vec3{next.x, next.y, cruise}, true);
          if (i + 1 < leg.path.nodes.size()) runner.emit(EventKind::waypoint);
        }
        runner.emit(EventKind::arrive);
        runner.emit(EventKind::descend);
      }

      if (leg.release) {
        const Package& package = *by_id.at(*leg.release);
        const int level = *assignment.level(package.id);
        runner.move_to(Vec3{end.x, end.y, release_altitude(end, rig, level)}, false);
        runner.dwell(config.release_dwell);
        runner.end_leg();
        loaded_levels.erase(level);
        runner.drop(package, end.id);
      } else {
        runner.move_to(Vec3{end.x, end.y, end.rooftop_height}, false);
        runner.end_leg();
        runner.emit(EventKind::land);
      }
    }
  } catch (Aborted& aborted) {
    runner.end_leg();
    runner.emit(EventKind::abort);
    return runner.finish(false, std::move(aborted.reason));
  }
  return runner.finish(true, std::nullopt);
}

}  // namespace skyway
