#include "skyway/errors.hpp"

#include <fmt/format.h>

#include <cmath>
#include <utility>

namespace skyway {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_node: return "InvalidNode";
    case Errc::duplicate_node_id: return "DuplicateNodeId";
    case Errc::unknown_endpoint: return "UnknownEndpoint";
    case Errc::self_loop_segment: return "SelfLoopSegment";
    case Errc::duplicate_segment: return "DuplicateSegment";
    case Errc::disconnected_network: return "DisconnectedNetwork";
    case Errc::unknown_node: return "UnknownNode";
    case Errc::invalid_package: return "InvalidPackage";
    case Errc::unknown_destination: return "UnknownDestination";
    case Errc::infeasible_payload: return "InfeasiblePayload";
    case Errc::too_many_packages_for_exhaustive: return "TooManyPackagesForExhaustive";
    case Errc::invalid_plan: return "InvalidPlan";
    case Errc::invalid_drone_config: return "InvalidDroneConfig";
    case Errc::negative_payload: return "NegativePayload";
    case Errc::negative_distance: return "NegativeDistance";
    case Errc::negative_energy: return "NegativeEnergy";
    case Errc::battery_depleted: return "BatteryDepleted";
    case Errc::invalid_rig: return "InvalidRig";
    case Errc::invalid_level: return "InvalidLevel";
    case Errc::inconsistent_assignment: return "InconsistentAssignment";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::validation_error: return "ValidationError";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string describe_unreachable(const std::vector<std::string>& ids) {
  return fmt::format("network is disconnected; unreachable nodes: {{{}}}",
                     fmt::join(ids, ", "));
}

std::string describe_issues(const std::vector<ValidationIssue>& issues) {
  std::string out = fmt::format("{} validation issue(s)", issues.size());
  for (const auto& issue : issues) {
    out += fmt::format("\n  {}: {}", issue.locator, issue.message);
  }
  return out;
}

}  // namespace

DisconnectedNetworkError::DisconnectedNetworkError(std::vector<std::string> unreachable)
    : Error(Errc::disconnected_network, describe_unreachable(unreachable)),
      unreachable_(std::move(unreachable)) {}

BatteryDepleted::BatteryDepleted(double required, double available)
    : Error(Errc::battery_depleted,
            fmt::format("battery depleted: required {} J, remaining {} J",
                        format_quantity(required), format_quantity(available))),
      required_(required),
      available_(available) {}

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : Error(Errc::validation_error, describe_issues(issues)), issues_(std::move(issues)) {}

bool ValidationError::mentions(std::string_view locator) const noexcept {
  for (const auto& issue : issues_) {
    if (issue.locator == locator) return true;
  }
  return false;
}

std::string format_quantity(double value) {
  std::string text = fmt::format("{}", value);
  if (std::isfinite(value) && text.find_first_of(".e") == std::string::npos) {
    text += ".0";
  }
  return text;
}

}  // namespace skyway
