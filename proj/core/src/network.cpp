#include "skyway/network.hpp"

#include "skyway/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <utility>

namespace skyway {

namespace {

struct Label {
  double length = 0.0;
  std::size_t hops = 0;
  std::vector<std::size_t> sequence;
};

// Strict weak order over labels: shorter, then fewer hops, then smaller id
// sequence. `rank` maps node index to its position in id order.
class LabelLess {
 public:
  explicit LabelLess(const std::vector<std::size_t>& rank) : rank_(&rank) {}

  bool operator()(const Label& lhs, const Label& rhs) const {
    if (!same_length(lhs.length, rhs.length)) return lhs.length < rhs.length;
    if (lhs.hops != rhs.hops) return lhs.hops < rhs.hops;
    return std::lexicographical_compare(
        lhs.sequence.begin(), lhs.sequence.end(), rhs.sequence.begin(), rhs.sequence.end(),
        [this](std::size_t a, std::size_t b) { return (*rank_)[a] < (*rank_)[b]; });
  }

 private:
  const std::vector<std::size_t>* rank_;
};

}  // namespace

SkywayNetwork SkywayNetwork::build(std::vector<Node> nodes, std::span<const SegmentSpec> segments) {
  if (nodes.empty()) {
    throw Error(Errc::invalid_node, "network needs at least one node");
  }

  SkywayNetwork net;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    if (n.id.empty()) {
      throw Error(Errc::invalid_node, fmt::format("node {} has an empty id", i));
    }
    if (!std::isfinite(n.x) || !std::isfinite(n.y) || !std::isfinite(n.rooftop_height)) {
      throw Error(Errc::invalid_node, fmt::format("node '{}' has non-finite coordinates", n.id));
    }
    if (n.rooftop_height < 0.0) {
      throw Error(Errc::invalid_node,
                  fmt::format("node '{}' has negative rooftop height {}", n.id, n.rooftop_height));
    }
    if (!net.index_.emplace(n.id, i).second) {
      throw Error(Errc::duplicate_node_id, fmt::format("duplicate node id '{}'", n.id));
    }
  }
  net.nodes_ = std::move(nodes);

  net.id_rank_.resize(net.nodes_.size());
  {
    std::size_t rank = 0;
    for (const auto& [id, index] : net.index_) net.id_rank_[index] = rank++;
  }

  net.adjacency_.resize(net.nodes_.size());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const SegmentSpec& spec : segments) {
    auto a = net.index_of(spec.a);
    auto b = net.index_of(spec.b);
    if (!a || !b) {
      throw Error(Errc::unknown_endpoint,
                  fmt::format("segment ({}, {}) references unknown node '{}'", spec.a, spec.b,
                              a ? spec.b : spec.a));
    }
    if (*a == *b) {
      throw Error(Errc::self_loop_segment, fmt::format("segment ({0}, {0}) is a self loop", spec.a));
    }
    if (!seen.emplace(std::minmax(*a, *b)).second) {
      throw Error(Errc::duplicate_segment,
                  fmt::format("duplicate segment between '{}' and '{}'", spec.a, spec.b));
    }
    const Node& na = net.nodes_[*a];
    const Node& nb = net.nodes_[*b];
    const double length = std::hypot(nb.x - na.x, nb.y - na.y);
    if (!(length > 0.0)) {
      throw Error(Errc::invalid_node,
                  fmt::format("segment ({}, {}) has zero length; nodes share ground coordinates",
                              spec.a, spec.b));
    }
    net.segments_.push_back(Segment{spec.a, spec.b, length});
    net.adjacency_[*a].push_back(Neighbor{*b, length});
    net.adjacency_[*b].push_back(Neighbor{*a, length});
  }
  for (auto& list : net.adjacency_) {
    std::sort(list.begin(), list.end(), [&net](const Neighbor& l, const Neighbor& r) {
      return net.id_rank_[l.node] < net.id_rank_[r.node];
    });
  }

  // Connectivity from the first node.
  std::vector<bool> reached(net.nodes_.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : net.adjacency_[u]) {
      if (!reached[nb.node]) {
        reached[nb.node] = true;
        stack.push_back(nb.node);
      }
    }
  }
  std::vector<std::string> unreachable;
  for (std::size_t i = 0; i < reached.size(); ++i) {
    if (!reached[i]) unreachable.push_back(net.nodes_[i].id);
  }
  if (!unreachable.empty()) {
    std::sort(unreachable.begin(), unreachable.end());
    throw DisconnectedNetworkError(std::move(unreachable));
  }
  return net;
}

std::optional<std::size_t> SkywayNetwork::index_of(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Node& SkywayNetwork::node(std::string_view id) const {
  auto index = index_of(id);
  if (!index) throw Error(Errc::unknown_node, fmt::format("unknown node '{}'", id));
  return nodes_[*index];
}

std::optional<double> SkywayNetwork::segment_length(std::string_view a, std::string_view b) const {
  auto ia = index_of(a);
  auto ib = index_of(b);
  if (!ia || !ib) return std::nullopt;
  for (const Neighbor& nb : adjacency_[*ia]) {
    if (nb.node == *ib) return nb.length;
  }
  return std::nullopt;
}

Path SkywayNetwork::shortest_path(std::string_view from, std::string_view to) const {
  const std::size_t source = index_of(node(from).id).value();
  const std::size_t target = index_of(node(to).id).value();
  return std::move(search(source, target)[target]);
}

std::vector<Path> SkywayNetwork::shortest_paths_from(std::string_view from) const {
  const std::size_t source = index_of(node(from).id).value();
  return search(source, std::nullopt);
}

std::vector<Path> SkywayNetwork::search(std::size_t source,
                                        std::optional<std::size_t> target) const {
  const LabelLess less(id_rank_);
  std::vector<std::optional<Label>> best(nodes_.size());
  std::vector<bool> settled(nodes_.size(), false);

  struct Entry {
    Label label;
    std::size_t node;
  };
  auto entry_greater = [&less](const Entry& l, const Entry& r) { return less(r.label, l.label); };
  std::priority_queue<Entry, std::vector<Entry>, decltype(entry_greater)> queue(entry_greater);

  best[source] = Label{0.0, 0, {source}};
  queue.push(Entry{*best[source], source});

  while (!queue.empty()) {
    Entry top = queue.top();
    queue.pop();
    const std::size_t u = top.node;
    if (settled[u]) continue;
    settled[u] = true;
    if (target && u == *target) break;

    for (const Neighbor& nb : adjacency_[u]) {
      if (settled[nb.node]) continue;
      Label candidate{top.label.length + nb.length, top.label.hops + 1, top.label.sequence};
      candidate.sequence.push_back(nb.node);
      if (!best[nb.node] || less(candidate, *best[nb.node])) {
        best[nb.node] = candidate;
        queue.push(Entry{std::move(candidate), nb.node});
      }
    }
  }

  std::vector<Path> paths(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!best[i] || !settled[i]) continue;
    Path& p = paths[i];
    p.length = best[i]->length;
    p.nodes.reserve(best[i]->sequence.size());
    for (std::size_t index : best[i]->sequence) p.nodes.push_back(nodes_[index].id);
  }
  return paths;
}

}  // namespace skyway
