#include "fcs/generators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>
#include <vector>

namespace fcs {

namespace {

std::uint64_t pair_key(NodeId u, NodeId v) {
  auto lo = static_cast<std::uint64_t>(std::min(u, v));
  auto hi = static_cast<std::uint64_t>(std::max(u, v));
  return (hi << 32) | lo;
}

// Edge accumulator with O(1) membership and per-node degrees.
struct EdgeSet {
  std::unordered_set<std::uint64_t> keys;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<Count> degree;

  explicit EdgeSet(Count n) : degree(static_cast<std::size_t>(n), 0) {}

  bool contains(NodeId u, NodeId v) const { return keys.count(pair_key(u, v)) > 0; }

  void insert(NodeId u, NodeId v) {
    keys.insert(pair_key(u, v));
    edges.emplace_back(u, v);
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
};

constexpr int kMaxPlacementAttempts = 1000;

// Draws a uniformly random vacant pair, avoiding self-loops, duplicates and
// (optionally) pairs occupied in a conflicting layer.
void place_random_edge(EdgeSet& out, const EdgeSet* conflict, Count n, Rng& rng) {
  for (int attempt = 0; attempt < kMaxPlacementAttempts; ++attempt) {
    NodeId u = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(n)));
    NodeId v = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v || out.contains(u, v)) continue;
    if (conflict && conflict->contains(u, v)) continue;
    out.insert(u, v);
    return;
  }
  raise(Errc::infeasible_target, "graph too dense to place random edges");
}

// Ring lattice of even base degree plus uniformly random shortcut edges.
// Ring candidates colliding with the conflict layer are resampled as
// shortcuts, so the realized edge count stays on target.
void build_small_world_layer(EdgeSet& out, const EdgeSet* conflict, Count n,
                             double target_degree, double shortcut_fraction,
                             Rng& rng) {
  if (target_degree >= static_cast<double>(n - 1))
    raise(Errc::infeasible_target, "target mean degree " +
                                       std::to_string(target_degree) +
                                       " needs at least " +
                                       std::to_string(target_degree + 1) +
                                       " nodes");
  Count ring = 2 * static_cast<Count>(
                       std::floor((1.0 - shortcut_fraction) * target_degree / 2.0));
  if (ring < 0) ring = 0;
  if (ring / 2 > (n - 1) / 2)
    raise(Errc::infeasible_target, "ring degree exceeds node count");
  Count displaced = 0;
  for (Count i = 0; i < n; ++i) {
    for (Count d = 1; d <= ring / 2; ++d) {
      NodeId u = static_cast<NodeId>(i);
      NodeId v = static_cast<NodeId>((i + d) % n);
      if (conflict && conflict->contains(u, v)) {
        ++displaced;
        continue;
      }
      if (!out.contains(u, v)) out.insert(u, v);
    }
  }
  double spare = static_cast<double>(n) * (target_degree - static_cast<double>(ring)) / 2.0;
  Count shortcuts = std::max<Count>(0, std::llround(spare)) + displaced;
  for (Count c = 0; c < shortcuts; ++c) place_random_edge(out, conflict, n, rng);
}

// Preferential pick: sample from the endpoint multiset, rejecting taboo ids.
NodeId pick_preferential(const std::vector<NodeId>& endpoints, NodeId self,
                         const std::unordered_set<NodeId>& taken, Rng& rng) {
  for (int attempt = 0; attempt < kMaxPlacementAttempts; ++attempt) {
    NodeId c = endpoints[rng.below(endpoints.size())];
    if (c != self && !taken.count(c)) return c;
  }
  raise(Errc::infeasible_target, "preferential attachment has no free target");
}

Graph build_attachment_graph(const GeneratorConfig& cfg, bool preferential,
                             bool triad_step, Rng& rng) {
  Count n = cfg.node_count;
  Count m = cfg.attachment_count;
  if (m < 1) raise(Errc::bad_config, "attachment count must be >= 1");
  if (m >= n)
    raise(Errc::infeasible_target, "attachment count must be below node count");

  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<std::vector<NodeId>> adj(static_cast<std::size_t>(n));
  std::vector<NodeId> endpoints;  // one entry per link endpoint
  auto link = [&](NodeId a, NodeId b) {
    edges.emplace_back(a, b);
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
    endpoints.push_back(a);
    endpoints.push_back(b);
  };

  // seed clique over the first m nodes (single node when m == 1)
  for (NodeId i = 0; i < m; ++i)
    for (NodeId j = i + 1; j < m; ++j) link(i, j);

  for (Count t = m; t < n; ++t) {
    NodeId self = static_cast<NodeId>(t);
    std::unordered_set<NodeId> taken;
    Count want = std::min<Count>(m, t);
    NodeId last_pref = -1;
    for (Count e = 0; e < want; ++e) {
      NodeId target = -1;
      if (!preferential) {
        for (int attempt = 0;; ++attempt) {
          if (attempt >= kMaxPlacementAttempts)
            raise(Errc::infeasible_target, "uniform attachment has no free target");
          NodeId c = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(t)));
          if (!taken.count(c)) {
            target = c;
            break;
          }
        }
      } else if (endpoints.empty()) {
        target = 0;  // m == 1: first arrival has no endpoint history
      } else if (triad_step && e > 0 && last_pref >= 0 &&
                 rng.bernoulli(cfg.triad_probability)) {
        // close a triangle through the previous preferential target
        std::vector<NodeId> open;
        for (NodeId x : adj[static_cast<std::size_t>(last_pref)])
          if (x != self && !taken.count(x)) open.push_back(x);
        if (!open.empty()) {
          target = open[rng.below(open.size())];
        } else {
          target = pick_preferential(endpoints, self, taken, rng);
          last_pref = target;
        }
      } else {
        target = pick_preferential(endpoints, self, taken, rng);
        last_pref = target;
      }
      taken.insert(target);
      link(self, target);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

const char* model_name(GeneratorModel m) {
  switch (m) {
    case GeneratorModel::modified_ws: return "modified_ws";
    case GeneratorModel::holme_kim: return "holme_kim";
    case GeneratorModel::ba: return "ba";
    case GeneratorModel::rrt: return "rrt";
  }
  return "unknown";
}

GeneratorModel model_from_name(const std::string& name) {
  if (name == "modified_ws" || name == "sw") return GeneratorModel::modified_ws;
  if (name == "holme_kim" || name == "hk") return GeneratorModel::holme_kim;
  if (name == "ba") return GeneratorModel::ba;
  if (name == "rrt") return GeneratorModel::rrt;
  raise(Errc::bad_config, "unknown generator model '" + name + "'");
}

void GeneratorConfig::validate() const {
  if (node_count < 1) raise(Errc::bad_config, "node_count must be positive");
  auto check_range = [](std::pair<double, double> r, const char* what) {
    if (r.first < 0 || r.second < r.first)
      raise(Errc::bad_config, std::string(what) + " range must be nonempty with lower bound >= 0");
  };
  check_range(strong_mean_degree_range, "strong mean degree");
  check_range(weak_mean_degree_range, "weak mean degree");
  if (shortcut_fraction < 0 || shortcut_fraction > 1)
    raise(Errc::bad_config, "shortcut_fraction must be in [0, 1]");
  if (triad_probability < 0 || triad_probability > 1)
    raise(Errc::bad_config, "triad_probability must be in [0, 1]");
  if (attachment_count < 1) raise(Errc::bad_config, "attachment_count must be >= 1");
  if (min_weak_degree < 0) raise(Errc::bad_config, "min_weak_degree must be >= 0");
}

TwoLayerGraph generate_two_layer(const GeneratorConfig& config, Rng& rng) {
  config.validate();
  if (config.model != GeneratorModel::modified_ws)
    raise(Errc::bad_config, "two-layer generation is defined for modified_ws only");
  Count n = config.node_count;

  double ks_target = rng.uniform(config.strong_mean_degree_range.first,
                                 config.strong_mean_degree_range.second);
  double kw_target = rng.uniform(config.weak_mean_degree_range.first,
                                 config.weak_mean_degree_range.second);

  EdgeSet strong(n);
  build_small_world_layer(strong, nullptr, n, ks_target, config.shortcut_fraction, rng);
  EdgeSet weak(n);
  build_small_world_layer(weak, &strong, n, kw_target, config.shortcut_fraction, rng);

  // enforce the weak degree floor with extra random weak links
  for (Count i = 0; i < n; ++i) {
    while (weak.degree[static_cast<std::size_t>(i)] < config.min_weak_degree) {
      NodeId u = static_cast<NodeId>(i);
      for (int attempt = 0;; ++attempt) {
        if (attempt >= kMaxPlacementAttempts)
          raise(Errc::infeasible_target, "cannot satisfy weak degree floor");
        NodeId v = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(n)));
        if (v == u || weak.contains(u, v) || strong.contains(u, v)) continue;
        weak.insert(u, v);
        break;
      }
    }
  }

  return TwoLayerGraph::from_edges(n, strong.edges, weak.edges);
}

Graph generate_single_layer(const GeneratorConfig& config, Rng& rng) {
  config.validate();
  switch (config.model) {
    case GeneratorModel::modified_ws: {
      Count n = config.node_count;
      double target = rng.uniform(config.weak_mean_degree_range.first,
                                  config.weak_mean_degree_range.second);
      EdgeSet layer(n);
      build_small_world_layer(layer, nullptr, n, target, config.shortcut_fraction, rng);
      return Graph::from_edges(n, layer.edges);
    }
    case GeneratorModel::ba:
      return build_attachment_graph(config, /*preferential=*/true,
                                    /*triad_step=*/false, rng);
    case GeneratorModel::holme_kim:
      return build_attachment_graph(config, /*preferential=*/true,
                                    /*triad_step=*/true, rng);
    case GeneratorModel::rrt:
      return build_attachment_graph(config, /*preferential=*/false,
                                    /*triad_step=*/false, rng);
  }
  raise(Errc::bad_config, "unknown generator model");
}

}  // namespace fcs
