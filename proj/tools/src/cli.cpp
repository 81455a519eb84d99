#include "skyway/cli.hpp"

#include "skyway/errors.hpp"
#include "skyway/planner.hpp"
#include "skyway/scenario.hpp"
#include "skyway/simulator.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <ostream>
#include <vector>

namespace skyway::cli {

namespace {

struct Options {
  std::string scenario_path;
  std::string strategy = "ndf";
  bool json = false;
  std::string telemetry_path;
  std::string report_path;
  double release_dwell = SimulationConfig{}.release_dwell;
  double sample_step = SimulationConfig{}.sample_step;

  std::size_t nodes = 0;
  std::size_t packages = 0;
  std::uint64_t seed = 0;
  std::vector<double> area{GeneratorParams{}.width, GeneratorParams{}.height};
  std::size_t levels = GeneratorParams{}.rig_levels;
  std::string out_path;
};

std::string joined(const std::vector<std::string>& items) {
  return items.empty() ? std::string("(none)") : fmt::format("{}", fmt::join(items, ", "));
}

std::string label_of(const Scenario& s) { return s.label.empty() ? std::string("(unlabeled)") : s.label; }

MissionPlan make_plan(const Scenario& s, const SkywayNetwork& network, const std::string& strategy) {
  if (strategy == kExhaustiveLabel) {
    return plan_optimal(network, s.source, s.packages, s.drone, s.rig.level_count());
  }
  return plan_ndf(network, s.source, s.packages, s.drone, s.rig.level_count());
}

int cmd_plan(const Options& o, std::ostream& out) {
  const Scenario s = parse_scenario(read_text_file(o.scenario_path));
  const MissionPlan plan = make_plan(s, s.network(), o.strategy);
  if (o.json) {
    out << plan_to_json(plan);
    return kSuccess;
  }
  fmt::print(out, "scenario: {}\n", label_of(s));
  fmt::print(out, "strategy: {}\n", plan.strategy_label);
  fmt::print(out, "release order: {}\n", joined(plan.release_order()));
  for (std::size_t i = 0; i < plan.legs.size(); ++i) {
    const Leg& leg = plan.legs[i];
    fmt::print(out, "leg {}: {} ({:.6f} m) {}\n", i + 1, fmt::join(leg.path.nodes, " -> "),
               leg.path.length, leg.release ? "release " + *leg.release : std::string("return"));
  }
  fmt::print(out, "total distance: {:.6f} m\n", plan_total_distance(plan));
  return kSuccess;
}

int cmd_run(const Options& o, std::ostream& out) {
  const Scenario s = parse_scenario(read_text_file(o.scenario_path));
  const SkywayNetwork network = s.network();
  const MissionPlan plan = make_plan(s, network, o.strategy);
  const SimulationConfig config{o.release_dwell, o.sample_step};
  const SimulationResult result =
      simulate_mission(network, plan, assign_levels(plan), s.drone, s.rig, s.packages, config);
  const MissionReport& r = result.report;

  if (!o.telemetry_path.empty()) write_text_file(o.telemetry_path, export_telemetry(result.telemetry));
  if (!o.report_path.empty()) write_text_file(o.report_path, report_to_json(r));

  fmt::print(out, "scenario: {}\n", label_of(s));
  fmt::print(out, "strategy: {}\n", plan.strategy_label);
  fmt::print(out, "completed: {}\n", r.completed ? "yes" : "no");
  for (const ReleaseRecord& rel : r.releases) {
    fmt::print(out, "release {} at {} t={:.6f} s\n", rel.package, rel.node, rel.t);
  }
  fmt::print(out, "distance 3d: {:.6f} m (horizontal {:.6f} m, vertical {:.6f} m)\n",
             r.total_distance_3d, r.total_horizontal_distance, r.total_vertical_distance);
  fmt::print(out, "energy: {:.6f} J\n", r.energy.total);
  fmt::print(out, "duration: {:.6f} s\n", r.duration);
  fmt::print(out, "end position: ({:.6f}, {:.6f}, {:.6f})\n", r.end_position.x, r.end_position.y,
             r.end_position.z);
  fmt::print(out, "telemetry records: {}\n", result.telemetry.size());
  if (r.abort_reason) fmt::print(out, "abort reason: {}\n", *r.abort_reason);
  return r.completed ? kSuccess : kMissionFailed;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const Scenario s = parse_scenario(read_text_file(o.scenario_path));
  const SimulationConfig config{o.release_dwell, o.sample_step};
  const CompareResult result = compare_strategies(s, config);
  const bool completed = result.ndf.completed && result.optimal.completed;
  if (o.json) {
    out << compare_to_json(result);
    return completed ? kSuccess : kMissionFailed;
  }
  fmt::print(out, "scenario: {}\n", label_of(s));
  for (const StrategyOutcome* outcome : {&result.ndf, &result.optimal}) {
    fmt::print(out, "{}: order [{}] distance {:.6f} m energy {:.6f} J completed {}\n",
               outcome->label, fmt::join(outcome->release_order, ", "), outcome->total_distance,
               outcome->total_energy, outcome->completed ? "yes" : "no");
  }
  fmt::print(out, "distance gap: {:.2f}%\n", result.distance_gap_percent);
  return completed ? kSuccess : kMissionFailed;
}

int cmd_gen(const Options& o, std::ostream& out) {
  GeneratorParams params;
  params.node_count = o.nodes;
  params.package_count = o.packages;
  params.seed = o.seed;
  params.width = o.area.at(0);
  params.height = o.area.at(1);
  params.rig_levels = o.levels;
  const std::string text = serialize_scenario(generate_scenario(params));
  if (o.out_path == "-") {
    out << text;
  } else {
    write_text_file(o.out_path, text);
    fmt::print(out, "wrote {}\n", o.out_path);
  }
  return kSuccess;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::infeasible_payload:
    case Errc::battery_depleted:
      return kMissionFailed;
    default:
      return kInvalidInput;
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Plan and simulate multi-package drone deliveries over a skyway network", "skyway"};
  app.require_subcommand(1);

  const std::vector<std::string> strategies{std::string(kNdfLabel), std::string(kExhaustiveLabel)};
  auto add_strategy = [&](CLI::App* cmd) {
    cmd->add_option("--strategy", o.strategy, "Delivery ordering strategy")
        ->check(CLI::IsMember(strategies));
  };
  auto add_sim_options = [&](CLI::App* cmd) {
    cmd->add_option("--dwell", o.release_dwell, "Release dwell in seconds")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--sample-step", o.sample_step, "Telemetry sampling period in seconds")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* plan = app.add_subcommand("plan", "Print the delivery plan for a scenario");
  plan->add_option("scenario", o.scenario_path, "Scenario JSON file")->required();
  add_strategy(plan);
  plan->add_flag("--json", o.json, "Print the plan as JSON");

  CLI::App* run_cmd = app.add_subcommand("run", "Simulate a mission and export artifacts");
  run_cmd->add_option("scenario", o.scenario_path, "Scenario JSON file")->required();
  add_strategy(run_cmd);
  run_cmd->add_option("--telemetry", o.telemetry_path, "Write telemetry CSV here");
  run_cmd->add_option("--report", o.report_path, "Write the mission report JSON here");
  add_sim_options(run_cmd);

  CLI::App* compare = app.add_subcommand("compare", "Compare NDF against the exhaustive optimum");
  compare->add_option("scenario", o.scenario_path, "Scenario JSON file")->required();
  compare->add_flag("--json", o.json, "Print the comparison as JSON");
  add_sim_options(compare);

  CLI::App* gen = app.add_subcommand("gen", "Generate a random scenario");
  gen->add_option("--nodes", o.nodes, "Node count")->required();
  gen->add_option("--packages", o.packages, "Package count")->required();
  gen->add_option("--seed", o.seed, "Random seed")->required();
  gen->add_option("--area", o.area, "Area width and height in meters")->expected(2);
  gen->add_option("--levels", o.levels, "String rig levels");
  gen->add_option("--out", o.out_path, "Output file, or - for stdout")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInvalidInput;
  }

  try {
    if (plan->parsed()) return cmd_plan(o, out);
    if (run_cmd->parsed()) return cmd_run(o, out);
    if (compare->parsed()) return cmd_compare(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
  } catch (const Error& e) {
    fmt::print(err, "error [{}]: {}\n", to_string(e.code()), e.what());
    return exit_code_for(e.code());
  }
  return kInvalidInput;
}

}  // namespace skyway::cli
