#pragma once

// Test-only reference implementations. None of this touches SkywayNetwork's
// search or the planners; it works from raw node/segment specs.

#include "skyway/network.hpp"
#include "skyway/planner.hpp"
#include "skyway/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace skyway::testing {

struct SimplePath {
  std::vector<std::string> nodes;
  double length = 0.0;
};

/// Every simple path between two nodes, by depth-first enumeration.
inline std::vector<SimplePath> enumerate_simple_paths(const std::vector<Node>& nodes,
                                                      const std::vector<SegmentSpec>& segments,
                                                      const std::string& from,
                                                      const std::string& to) {
  std::map<std::string, const Node*> by_id;
  for (const Node& n : nodes) by_id[n.id] = &n;
  std::map<std::string, std::vector<std::pair<std::string, double>>> adjacent;
  for (const SegmentSpec& s : segments) {
    const Node& a = *by_id.at(s.a);
    const Node& b = *by_id.at(s.b);
    const double d = std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y));
    adjacent[s.a].emplace_back(s.b, d);
    adjacent[s.b].emplace_back(s.a, d);
  }

  std::vector<SimplePath> found;
  SimplePath current{{from}, 0.0};
  auto dfs = [&](auto& self, const std::string& at) -> void {
    if (at == to) {
      found.push_back(current);
      return;
    }
    for (const auto& [next, d] : adjacent[at]) {
      if (std::find(current.nodes.begin(), current.nodes.end(), next) != current.nodes.end()) {
        continue;
      }
      current.nodes.push_back(next);
      current.length += d;
      self(self, next);
      current.length -= d;
      current.nodes.pop_back();
    }
  };
  dfs(dfs, from);
  return found;
}

inline double brute_force_distance(const std::vector<Node>& nodes,
                                   const std::vector<SegmentSpec>& segments,
                                   const std::string& from, const std::string& to) {
  double best = std::numeric_limits<double>::infinity();
  for (const SimplePath& p : enumerate_simple_paths(nodes, segments, from, to)) {
    best = std::min(best, p.length);
  }
  return best;
}

/// Minimum total tour distance over all release orders, distances from path
/// enumeration.
inline double brute_force_best_tour(const std::vector<Node>& nodes,
                                    const std::vector<SegmentSpec>& segments,
                                    const std::string& source,
                                    const std::vector<Package>& packages) {
  std::vector<std::size_t> order(packages.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::map<std::pair<std::string, std::string>, double> memo;
  auto dist = [&](const std::string& a, const std::string& b) {
    auto key = std::pair{a, b};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const double d = a == b ? 0.0 : brute_force_distance(nodes, segments, a, b);
    memo.emplace(key, d);
    return d;
  };
  double best = std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    std::string at = source;
    for (std::size_t i : order) {
      total += dist(at, packages[i].destination);
      at = packages[i].destination;
    }
    total += dist(at, source);
    best = std::min(best, total);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

struct RandomNetwork {
  std::vector<Node> nodes;
  std::vector<SegmentSpec> segments;
};

/// Random connected network with integer-grid coordinates (so that equal
/// lengths, and therefore tie-breaks, actually occur).
inline RandomNetwork random_connected_network(std::mt19937_64& rng, std::size_t node_count) {
  RandomNetwork net;
  std::uniform_int_distribution<int> coord(0, 20);
  std::uniform_int_distribution<int> roof(0, 40);
  while (net.nodes.size() < node_count) {
    Node n{"v" + std::to_string(net.nodes.size()), static_cast<double>(coord(rng)),
           static_cast<double>(coord(rng)), static_cast<double>(roof(rng))};
    const bool clash = std::any_of(net.nodes.begin(), net.nodes.end(),
                                   [&n](const Node& o) { return o.x == n.x && o.y == n.y; });
    if (!clash) net.nodes.push_back(n);
  }
  std::vector<std::vector<bool>> linked(node_count, std::vector<bool>(node_count, false));
  for (std::size_t i = 1; i < node_count; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    const std::size_t p = parent(rng);
    linked[i][p] = linked[p][i] = true;
    net.segments.push_back({net.nodes[i].id, net.nodes[p].id});
  }
  std::bernoulli_distribution extra(0.35);
  for (std::size_t i = 0; i < node_count; ++i) {
    for (std::size_t j = i + 1; j < node_count; ++j) {
      if (!linked[i][j] && extra(rng)) {
        linked[i][j] = linked[j][i] = true;
        net.segments.push_back({net.nodes[i].id, net.nodes[j].id});
      }
    }
  }
  return net;
}

struct ParsedTelemetryRow {
  std::vector<double> numbers;  // t, x, y, z, payload, battery
  std::string event;
};

/// Minimal RFC 4180 reader for the telemetry export.
inline std::vector<ParsedTelemetryRow> parse_telemetry_csv(const std::string& text,
                                                           std::string* header = nullptr) {
  std::vector<ParsedTelemetryRow> rows;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      if (header) *header = line;
      first = false;
      continue;
    }
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (quoted) {
        if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else if (c == '"') {
          quoted = false;
        } else {
          field += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        fields.push_back(field);
        field.clear();
      } else {
        field += c;
      }
    }
    fields.push_back(field);
    ParsedTelemetryRow row;
    for (std::size_t i = 0; i + 1 < fields.size(); ++i) row.numbers.push_back(std::stod(fields[i]));
    row.event = fields.back();
    rows.push_back(std::move(row));
  }
  return rows;
}

inline double distance(const Vec3& a, const Vec3& b) {
  return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) + (a.z - b.z) * (a.z - b.z));
}

}  // namespace skyway::testing
