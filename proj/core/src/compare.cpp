#include "skyway/errors.hpp"
#include "skyway/scenario.hpp"

namespace skyway {

namespace {

StrategyOutcome fly(const Scenario& scenario, const SkywayNetwork& network,
                    const MissionPlan& plan, const SimulationConfig& config) {
  const SimulationResult run = simulate_mission(network, plan, assign_levels(plan), scenario.drone,
                                                scenario.rig, scenario.packages, config);
  return StrategyOutcome{plan.strategy_label, plan.release_order(), plan_total_distance(plan),
                         run.report.energy.total, run.report.completed};
}

}  // namespace

CompareResult compare_strategies(const Scenario& scenario, const SimulationConfig& config) {
  const SkywayNetwork network = scenario.network();
  const std::size_t levels = scenario.rig.level_count();
  // The exhaustive guard runs first so oversized inputs fail before any work.
  const MissionPlan optimal =
      plan_optimal(network, scenario.source, scenario.packages, scenario.drone, levels);
  const MissionPlan ndf = plan_ndf(network, scenario.source, scenario.packages, scenario.drone, levels);

  CompareResult result;
  result.ndf = fly(scenario, network, ndf, config);
  result.optimal = fly(scenario, network, optimal, config);
  if (result.optimal.total_distance > 0.0) {
    result.distance_gap_percent = 100.0 * (result.ndf.total_distance - result.optimal.total_distance) /
                                  result.optimal.total_distance;
  }
  return result;
}

}  // namespace skyway
