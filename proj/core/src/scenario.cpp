#include "skyway/scenario.hpp"

#include "skyway/errors.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace skyway {

using json = nlohmann::json;

namespace {

// Structural reader: collects type errors with locators instead of throwing.
class Reader {
 public:
  explicit Reader(std::vector<ValidationIssue>& issues) : issues_(issues) {}

  void issue(std::string locator, std::string message) {
    issues_.push_back(ValidationIssue{std::move(locator), std::move(message)});
  }

  bool expect_object(const json& value, const std::string& locator) {
    if (value.is_object()) return true;
    issue(locator, fmt::format("expected an object, got {}", value.type_name()));
    return false;
  }

  bool expect_array(const json& value, const std::string& locator) {
    if (value.is_array()) return true;
    issue(locator, fmt::format("expected an array, got {}", value.type_name()));
    return false;
  }

  void reject_unknown_keys(const json& object, const std::string& prefix,
                           std::initializer_list<std::string_view> known) {
    for (const auto& [key, value] : object.items()) {
      if (std::find(known.begin(), known.end(), key) == known.end()) {
        issue(join(prefix, key), "unknown field");
      }
    }
  }

  void read_string(const json& object, std::string_view key, const std::string& prefix,
                   std::string& out, bool required) {
    auto it = object.find(key);
    if (it == object.end()) {
      if (required) issue(join(prefix, key), "required field is missing");
      return;
    }
    if (!it->is_string()) {
      issue(join(prefix, key), fmt::format("expected a string, got {}", it->type_name()));
      return;
    }
    out = it->get<std::string>();
  }

  void read_number(const json& object, std::string_view key, const std::string& prefix,
                   double& out, bool required) {
    auto it = object.find(key);
    if (it == object.end()) {
      if (required) issue(join(prefix, key), "required field is missing");
      return;
    }
    if (!it->is_number()) {
      issue(join(prefix, key), fmt::format("expected a number, got {}", it->type_name()));
      return;
    }
    out = it->get<double>();
  }

  static std::string join(const std::string& prefix, std::string_view key) {
    return prefix.empty() ? std::string(key) : fmt::format("{}.{}", prefix, key);
  }

 private:
  std::vector<ValidationIssue>& issues_;
};

std::string at(std::string_view array, std::size_t index) {
  return fmt::format("{}[{}]", array, index);
}

void read_document(const json& root, Scenario& s, Reader& r) {
  if (!r.expect_object(root, "$")) return;
  r.reject_unknown_keys(root, "",
                        {"label", "source", "nodes", "segments", "drone", "rig", "packages"});
  r.read_string(root, "label", "", s.label, false);
  r.read_string(root, "source", "", s.source, true);

  if (auto it = root.find("nodes"); it == root.end()) {
    r.issue("nodes", "required field is missing");
  } else if (r.expect_array(*it, "nodes")) {
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& item = (*it)[i];
      const std::string loc = at("nodes", i);
      Node node;
      if (r.expect_object(item, loc)) {
        r.reject_unknown_keys(item, loc, {"id", "x", "y", "rooftop_height"});
        r.read_string(item, "id", loc, node.id, true);
        r.read_number(item, "x", loc, node.x, true);
        r.read_number(item, "y", loc, node.y, true);
        r.read_number(item, "rooftop_height", loc, node.rooftop_height, true);
      }
      s.nodes.push_back(std::move(node));
    }
  }

  if (auto it = root.find("segments"); it != root.end() && r.expect_array(*it, "segments")) {
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& item = (*it)[i];
      const std::string loc = at("segments", i);
      SegmentSpec seg;
      if (r.expect_object(item, loc)) {
        r.reject_unknown_keys(item, loc, {"a", "b"});
        r.read_string(item, "a", loc, seg.a, true);
        r.read_string(item, "b", loc, seg.b, true);
      }
      s.segments.push_back(std::move(seg));
    }
  }

  if (auto it = root.find("drone"); it != root.end() && r.expect_object(*it, "drone")) {
    r.reject_unknown_keys(*it, "drone",
                          {"frame_mass", "max_payload", "battery_capacity", "cruise_speed",
                           "vertical_speed", "base_rate", "payload_rate"});
    DroneConfig& d = s.drone;
    r.read_number(*it, "frame_mass", "drone", d.frame_mass, false);
    r.read_number(*it, "max_payload", "drone", d.max_payload, false);
    r.read_number(*it, "battery_capacity", "drone", d.battery_capacity, false);
    r.read_number(*it, "cruise_speed", "drone", d.cruise_speed, false);
    r.read_number(*it, "vertical_speed", "drone", d.vertical_speed, false);
    r.read_number(*it, "base_rate", "drone", d.base_rate, false);
    r.read_number(*it, "payload_rate", "drone", d.payload_rate, false);
  }

  if (auto it = root.find("rig"); it != root.end() && r.expect_object(*it, "rig")) {
    r.reject_unknown_keys(*it, "rig", {"levels", "clearance"});
    if (auto levels = it->find("levels");
        levels != it->end() && r.expect_array(*levels, "rig.levels")) {
      s.rig.hangs.clear();
      for (std::size_t i = 0; i < levels->size(); ++i) {
        const json& hang = (*levels)[i];
        if (!hang.is_number()) {
          r.issue(at("rig.levels", i), fmt::format("expected a number, got {}", hang.type_name()));
          s.rig.hangs.push_back(0.0);
        } else {
          s.rig.hangs.push_back(hang.get<double>());
        }
      }
    }
    r.read_number(*it, "clearance", "rig", s.rig.clearance, false);
  }

  if (auto it = root.find("packages"); it != root.end() && r.expect_array(*it, "packages")) {
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& item = (*it)[i];
      const std::string loc = at("packages", i);
      Package p;
      if (r.expect_object(item, loc)) {
        r.reject_unknown_keys(item, loc, {"id", "mass", "destination"});
        r.read_string(item, "id", loc, p.id, true);
        r.read_number(item, "mass", loc, p.mass, true);
        r.read_string(item, "destination", loc, p.destination, true);
      }
      s.packages.push_back(std::move(p));
    }
  }
}

}  // namespace

SkywayNetwork Scenario::network() const { return SkywayNetwork::build(nodes, segments); }

std::vector<ValidationIssue> validate_scenario(const Scenario& s) {
  std::vector<ValidationIssue> issues;
  auto issue = [&issues](std::string locator, std::string message) {
    issues.push_back(ValidationIssue{std::move(locator), std::move(message)});
  };

  // Nodes.
  bool nodes_ok = !s.nodes.empty();
  if (s.nodes.empty()) issue("nodes", "at least one node is required");
  std::map<std::string_view, std::size_t> node_index;
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    const Node& n = s.nodes[i];
    const std::string loc = at("nodes", i);
    if (n.id.empty()) {
      issue(loc + ".id", "must be non-empty");
      nodes_ok = false;
    } else if (!node_index.emplace(n.id, i).second) {
      issue(loc + ".id", fmt::format("duplicate node id '{}'", n.id));
      nodes_ok = false;
    }
    if (!std::isfinite(n.x)) issue(loc + ".x", "must be finite");
    if (!std::isfinite(n.y)) issue(loc + ".y", "must be finite");
    if (!std::isfinite(n.rooftop_height) || n.rooftop_height < 0.0) {
      issue(loc + ".rooftop_height", fmt::format("must be >= 0, got {}", n.rooftop_height));
      nodes_ok = false;
    }
  }

  // Segments.
  bool segments_ok = true;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const SegmentSpec& seg = s.segments[i];
    const std::string loc = at("segments", i);
    auto a = node_index.find(seg.a);
    auto b = node_index.find(seg.b);
    if (a == node_index.end()) {
      issue(loc + ".a", fmt::format("unknown node '{}'", seg.a));
      segments_ok = false;
    }
    if (b == node_index.end()) {
      issue(loc + ".b", fmt::format("unknown node '{}'", seg.b));
      segments_ok = false;
    }
    if (a == node_index.end() || b == node_index.end()) continue;
    if (a->second == b->second) {
      issue(loc, fmt::format("self loop on '{}'", seg.a));
      segments_ok = false;
      continue;
    }
    if (!seen.emplace(std::minmax(a->second, b->second)).second) {
      issue(loc, fmt::format("duplicate segment between '{}' and '{}'", seg.a, seg.b));
      segments_ok = false;
      continue;
    }
    const Node& na = s.nodes[a->second];
    const Node& nb = s.nodes[b->second];
    if (!(std::hypot(na.x - nb.x, na.y - nb.y) > 0.0)) {
      issue(loc, fmt::format("'{}' and '{}' share ground coordinates", seg.a, seg.b));
      segments_ok = false;
    }
  }
  if (nodes_ok && segments_ok) {
    try {
      (void)s.network();
    } catch (const DisconnectedNetworkError& e) {
      issue("segments", e.what());
    } catch (const Error& e) {
      issue("nodes", e.what());
    }
  }

  // Source.
  if (s.source.empty()) {
    issue("source", "must name a node");
  } else if (!node_index.contains(s.source)) {
    issue("source", fmt::format("unknown node '{}'", s.source));
  }

  for (const auto& [field, why] : drone_config_issues(s.drone)) issue("drone." + field, why);
  for (const auto& [field, why] : rig_issues(s.rig)) issue("rig." + field, why);

  // Packages.
  std::set<std::string_view> package_ids;
  for (std::size_t i = 0; i < s.packages.size(); ++i) {
    const Package& p = s.packages[i];
    const std::string loc = at("packages", i);
    if (p.id.empty()) {
      issue(loc + ".id", "must be non-empty");
    } else if (!package_ids.insert(p.id).second) {
      issue(loc + ".id", fmt::format("duplicate package id '{}'", p.id));
    }
    if (!std::isfinite(p.mass) || p.mass <= 0.0) {
      issue(loc + ".mass", fmt::format("must be > 0, got {}", p.mass));
    }
    if (!node_index.contains(p.destination)) {
      issue(loc + ".destination", fmt::format("unknown node '{}'", p.destination));
    } else if (p.destination == s.source) {
      issue(loc + ".destination", "must differ from the source");
    }
  }
  if (s.packages.size() > s.rig.level_count()) {
    issue("packages", fmt::format("{} packages exceed the {} rig levels", s.packages.size(),
                                  s.rig.level_count()));
  }
  return issues;
}

Scenario parse_scenario(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::syntax_error, fmt::format("malformed scenario JSON: {}", e.what()));
  }

  Scenario scenario;
  std::vector<ValidationIssue> issues;
  Reader reader(issues);
  read_document(root, scenario, reader);
  if (!issues.empty()) throw ValidationError(std::move(issues));

  issues = validate_scenario(scenario);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return scenario;
}

std::string serialize_scenario(const Scenario& s) {
  using ojson = nlohmann::ordered_json;
  ojson doc;
  doc["label"] = s.label;
  doc["source"] = s.source;
  doc["nodes"] = ojson::array();
  for (const Node& n : s.nodes) {
    doc["nodes"].push_back(
        ojson{{"id", n.id}, {"x", n.x}, {"y", n.y}, {"rooftop_height", n.rooftop_height}});
  }
  doc["segments"] = ojson::array();
  for (const SegmentSpec& seg : s.segments) doc["segments"].push_back(ojson{{"a", seg.a}, {"b", seg.b}});
  doc["drone"] = ojson{{"frame_mass", s.drone.frame_mass},
                       {"max_payload", s.drone.max_payload},
                       {"battery_capacity", s.drone.battery_capacity},
                       {"cruise_speed", s.drone.cruise_speed},
                       {"vertical_speed", s.drone.vertical_speed},
                       {"base_rate", s.drone.base_rate},
                       {"payload_rate", s.drone.payload_rate}};
  doc["rig"] = ojson{{"levels", s.rig.hangs}, {"clearance", s.rig.clearance}};
  doc["packages"] = ojson::array();
  for (const Package& p : s.packages) {
    doc["packages"].push_back(ojson{{"id", p.id}, {"mass", p.mass}, {"destination", p.destination}});
  }
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, fmt::format("cannot open '{}'", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, fmt::format("cannot write '{}'", path));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(Errc::io_error, fmt::format("failed writing '{}'", path));
}

}  // namespace skyway
