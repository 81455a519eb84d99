#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skyway {

enum class Errc {
  // network construction and queries
  invalid_node,
  duplicate_node_id,
  unknown_endpoint,
  self_loop_segment,
  duplicate_segment,
  disconnected_network,
  unknown_node,
  // planning
  invalid_package,
  unknown_destination,
  infeasible_payload,
  too_many_packages_for_exhaustive,
  invalid_plan,
  // energy
  invalid_drone_config,
  negative_payload,
  negative_distance,
  negative_energy,
  battery_depleted,
  // simulation
  invalid_rig,
  invalid_level,
  inconsistent_assignment,
  // scenario io
  syntax_error,
  validation_error,
  invalid_params,
  io_error,
};

std::string_view to_string(Errc code) noexcept;

/// Base of every error thrown by the library. The code identifies the failure
/// class; what() carries a human-readable description.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class DisconnectedNetworkError : public Error {
 public:
  explicit DisconnectedNetworkError(std::vector<std::string> unreachable);

  /// Ids of the nodes not reachable from the first node, sorted.
  const std::vector<std::string>& unreachable() const noexcept { return unreachable_; }

 private:
  std::vector<std::string> unreachable_;
};

class BatteryDepleted : public Error {
 public:
  BatteryDepleted(double required, double available);

  double required() const noexcept { return required_; }
  double available() const noexcept { return available_; }

 private:
  double required_;
  double available_;
};

struct ValidationIssue {
  std::string locator;  // e.g. "packages[2].mass"
  std::string message;

  bool operator==(const ValidationIssue&) const = default;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<ValidationIssue> issues);

  const std::vector<ValidationIssue>& issues() const noexcept { return issues_; }
  bool mentions(std::string_view locator) const noexcept;

 private:
  std::vector<ValidationIssue> issues_;
};

/// Shortest round-trip decimal form of `value`, always with a fractional part
/// ("20.0", "15.9", "330.6225774829855").
std::string format_quantity(double value);

}  // namespace skyway
