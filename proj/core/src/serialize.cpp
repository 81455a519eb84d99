#include "skyway/scenario.hpp"

#include <fmt/format.h>
#include <json.hpp>

namespace skyway {

using ojson = nlohmann::ordered_json;

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

ojson plan_object(const MissionPlan& plan) {
  ojson legs = ojson::array();
  for (const Leg& leg : plan.legs) {
    legs.push_back(ojson{{"from", leg.path.start()},
                         {"to", leg.path.end()},
                         {"path", leg.path.nodes},
                         {"length", leg.path.length},
                         {"release", leg.release ? ojson(*leg.release) : ojson(nullptr)}});
  }
  return ojson{{"source", plan.source},
               {"strategy", plan.strategy_label},
               {"release_order", plan.release_order()},
               {"total_distance", plan_total_distance(plan)},
               {"legs", std::move(legs)}};
}

ojson outcome_object(const StrategyOutcome& o) {
  return ojson{{"label", o.label},
               {"release_order", o.release_order},
               {"total_distance", o.total_distance},
               {"total_energy", o.total_energy},
               {"completed", o.completed}};
}

}  // namespace

std::string export_telemetry(const TelemetryLog& log) {
  std::string out = "t,x,y,z,payload_mass,battery_remaining,event\n";
  for (const TelemetryRecord& r : log) {
    fmt::format_to(std::back_inserter(out), "{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{}\n", r.t,
                   r.position.x, r.position.y, r.position.z, r.payload_mass, r.battery_remaining,
                   csv_field(event_label(r)));
  }
  return out;
}

std::string plan_to_json(const MissionPlan& plan) { return plan_object(plan).dump(2) + "\n"; }

std::string report_to_json(const MissionReport& report) {
  ojson releases = ojson::array();
  for (const ReleaseRecord& r : report.releases) {
    releases.push_back(ojson{{"package", r.package}, {"node", r.node}, {"t", r.t}});
  }
  ojson energy_legs = ojson::array();
  for (const EnergyLegRecord& leg : report.energy.legs) {
    energy_legs.push_back(ojson{{"distance_3d", leg.distance_3d},
                                {"payload_mass", leg.payload_mass},
                                {"rate", leg.rate},
                                {"energy", leg.energy}});
  }
  ojson doc{{"completed", report.completed},
            {"abort_reason", report.abort_reason ? ojson(*report.abort_reason) : ojson(nullptr)},
            {"releases", std::move(releases)},
            {"total_distance_3d", report.total_distance_3d},
            {"total_horizontal_distance", report.total_horizontal_distance},
            {"total_vertical_distance", report.total_vertical_distance},
            {"duration", report.duration},
            {"energy", ojson{{"total", report.energy.total}, {"legs", std::move(energy_legs)}}},
            {"end_position", ojson{{"x", report.end_position.x},
                                   {"y", report.end_position.y},
                                   {"z", report.end_position.z}}}};
  return doc.dump(2) + "\n";
}

std::string compare_to_json(const CompareResult& result) {
  ojson doc{{"strategies", ojson::array({outcome_object(result.ndf), outcome_object(result.optimal)})},
            {"distance_gap_percent", result.distance_gap_percent}};
  return doc.dump(2) + "\n";
}

}  // namespace skyway
