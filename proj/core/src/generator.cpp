#include "skyway/errors.hpp"
#include "skyway/scenario.hpp"

#include <fmt/format.h>

#include <cmath>
#include <random>
#include <set>
#include <utility>

namespace skyway {

namespace {

constexpr double kMinRooftop = 5.0;
constexpr double kMaxRooftop = 60.0;
constexpr int kMinMassGrams = 101;   // masses lie in (0.1, 2.27] kg
constexpr int kMaxMassGrams = 2270;
constexpr double kMinSeparation = 1.0;  // m between generated nodes
constexpr int kPlacementAttempts = 1000;

// Distribution mapping is done by hand: std::uniform_*_distribution output is
// implementation-defined, mt19937_64's raw stream is not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::size_t below(std::size_t bound) {
    return static_cast<std::size_t>(engine_() % static_cast<std::uint64_t>(bound));
  }

  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1))); }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

double round_to(double value, double quantum) { return std::round(value / quantum) * quantum; }

}  // namespace

Scenario generate_scenario(const GeneratorParams& params) {
  const std::size_t n = params.node_count;
  const std::size_t k = params.package_count;
  if (n < 2) throw Error(Errc::invalid_params, "node_count must be >= 2");
  if (params.rig_levels < 1) throw Error(Errc::invalid_params, "rig_levels must be >= 1");
  if (k > n - 1 || k > params.rig_levels) {
    throw Error(Errc::invalid_params,
                fmt::format("package_count {} exceeds min(node_count - 1, rig_levels) = {}", k,
                            std::min(n - 1, params.rig_levels)));
  }
  if (!std::isfinite(params.width) || !std::isfinite(params.height) || params.width <= 0.0 ||
      params.height <= 0.0) {
    throw Error(Errc::invalid_params, "area width and height must be > 0");
  }

  Rng rng(params.seed);
  Scenario s;
  s.label = fmt::format("generated-n{}-k{}-s{}", n, k, params.seed);

  for (std::size_t i = 0; i < n; ++i) {
    Node node;
    node.id = fmt::format("n{}", i);
    bool placed = false;
    for (int attempt = 0; attempt < kPlacementAttempts && !placed; ++attempt) {
      node.x = round_to(rng.unit() * params.width, 0.01);
      node.y = round_to(rng.unit() * params.height, 0.01);
      placed = std::all_of(s.nodes.begin(), s.nodes.end(), [&node](const Node& other) {
        return std::hypot(other.x - node.x, other.y - node.y) >= kMinSeparation;
      });
    }
    if (!placed) {
      throw Error(Errc::invalid_params,
                  fmt::format("area {}x{} m is too small for {} nodes", params.width,
                              params.height, n));
    }
    node.rooftop_height = round_to(kMinRooftop + rng.unit() * (kMaxRooftop - kMinRooftop), 0.1);
    s.nodes.push_back(std::move(node));
  }
  s.source = s.nodes.front().id;

  // Random spanning tree, then a random number of extra segments.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  std::set<std::pair<std::size_t, std::size_t>> linked;
  auto link = [&](std::size_t a, std::size_t b) {
    if (a == b || !linked.emplace(std::minmax(a, b)).second) return;
    s.segments.push_back(SegmentSpec{s.nodes[a].id, s.nodes[b].id});
  };
  for (std::size_t i = 1; i < n; ++i) link(order[i], order[rng.below(i)]);
  const std::size_t extra = rng.below(n);
  for (std::size_t attempt = 0; attempt < 4 * extra && linked.size() < n - 1 + extra; ++attempt) {
    link(rng.below(n), rng.below(n));
  }

  s.rig.hangs.clear();
  for (std::size_t level = 1; level <= params.rig_levels; ++level) {
    s.rig.hangs.push_back(0.5 * static_cast<double>(params.rig_levels - level + 2));
  }
  s.rig.clearance = 1.0;

  std::vector<std::size_t> destinations;
  for (std::size_t i = 1; i < n; ++i) destinations.push_back(i);
  rng.shuffle(destinations);
  for (std::size_t i = 0; i < k; ++i) {
    const double mass = rng.between(kMinMassGrams, kMaxMassGrams) / 1000.0;
    s.packages.push_back(Package{fmt::format("p{}", i + 1), mass, s.nodes[destinations[i]].id});
  }
  return s;
}

}  // namespace skyway
