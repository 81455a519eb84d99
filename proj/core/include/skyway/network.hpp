#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skyway {

/// A rooftop take-off/landing station. Coordinates are ground-plane meters;
/// rooftop_height is the landing surface altitude above ground.
struct Node {
  std::string id;
  double x = 0.0;
  double y = 0.0;
  double rooftop_height = 0.0;

  bool operator==(const Node&) const = default;
};

/// Lengths within this relative distance are treated as equal when breaking
/// ties, so rounding noise in sums such as sqrt(2) + sqrt(2) vs sqrt(8) does
/// not decide a path or a delivery order.
inline constexpr double kLengthTieTolerance = 1e-12;

inline bool same_length(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= kLengthTieTolerance * scale;
}

/// Input form of a segment: an unordered pair of node ids.
struct SegmentSpec {
  std::string a;
  std::string b;

  bool operator==(const SegmentSpec&) const = default;
};

struct Segment {
  std::string a;
  std::string b;
  double length = 0.0;  // horizontal Euclidean distance, > 0
};

struct Path {
  std::vector<std::string> nodes;
  double length = 0.0;

  const std::string& start() const { return nodes.front(); }
  const std::string& end() const { return nodes.back(); }
  std::size_t hops() const { return nodes.empty() ? 0 : nodes.size() - 1; }

  bool operator==(const Path&) const = default;
};

/// Immutable, validated, connected skyway graph.
///
/// Segment lengths are horizontal distances between node ground coordinates;
/// rooftop heights do not affect routing. Shortest paths break length ties by
/// fewer segments, then by the lexicographically smallest node-id sequence, so
/// every query has exactly one answer.
///
/// Safe for concurrent reads.
class SkywayNetwork {
 public:
  struct Neighbor {
    std::size_t node;
    double length;
  };

  /// Validates and builds a network. Throws Error with codes invalid_node,
  /// duplicate_node_id, unknown_endpoint, self_loop_segment or
  /// duplicate_segment, and DisconnectedNetworkError when some node cannot be
  /// reached from the first one.
  static SkywayNetwork build(std::vector<Node> nodes, std::span<const SegmentSpec> segments);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::vector<Segment>& segments() const noexcept { return segments_; }

  bool contains(std::string_view id) const { return index_of(id).has_value(); }
  std::optional<std::size_t> index_of(std::string_view id) const;
  /// Throws Error(unknown_node).
  const Node& node(std::string_view id) const;
  const Node& node_at(std::size_t index) const { return nodes_.at(index); }

  /// Neighbors of the node at `index`, ordered by neighbor id.
  std::span<const Neighbor> neighbors(std::size_t index) const { return adjacency_.at(index); }
  std::optional<double> segment_length(std::string_view a, std::string_view b) const;

  /// Minimum-length path. Throws Error(unknown_node).
  Path shortest_path(std::string_view from, std::string_view to) const;

  /// Shortest paths from `from` to every node, indexed like nodes().
  std::vector<Path> shortest_paths_from(std::string_view from) const;

 private:
  SkywayNetwork() = default;

  std::vector<Path> search(std::size_t source, std::optional<std::size_t> target) const;

  std::vector<Node> nodes_;
  std::vector<Segment> segments_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::size_t> id_rank_;  // position of each node in id order
};

}  // namespace skyway
