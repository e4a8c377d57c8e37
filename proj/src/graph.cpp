#include "fcs/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace fcs {

namespace {

bool sorted_contains(const std::vector<NodeId>& v, NodeId x) {
  return std::binary_search(v.begin(), v.end(), x);
}

std::uint64_t pair_key(NodeId u, NodeId v) {
  auto lo = static_cast<std::uint64_t>(std::min(u, v));
  auto hi = static_cast<std::uint64_t>(std::max(u, v));
  return (hi << 32) | lo;
}

void sorted_insert(std::vector<NodeId>& v, NodeId x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

void sort_dedup(std::vector<std::vector<NodeId>>& adj) {
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

}  // namespace

TwoLayerGraph::TwoLayerGraph(Count node_count) {
  if (node_count < 0) raise(Errc::bad_config, "node count must be >= 0");
  strong_.resize(static_cast<std::size_t>(node_count));
  weak_.resize(static_cast<std::size_t>(node_count));
}

void TwoLayerGraph::check_node(NodeId u) const {
  if (u < 0 || static_cast<Count>(u) >= node_count())
    raise(Errc::bad_config,
          "node id " + std::to_string(u) + " out of range [0, " +
              std::to_string(node_count()) + ")");
}

void TwoLayerGraph::add_edge(NodeId u, NodeId v, Layer layer) {
  check_node(u);
  check_node(v);
  if (u == v)
    raise(Errc::self_loop, "self loop at node " + std::to_string(u));
  Layer other = layer == Layer::strong ? Layer::weak : Layer::strong;
  if (has_edge(u, v, other))
    raise(Errc::layer_conflict,
          "pair (" + std::to_string(u) + ", " + std::to_string(v) +
              ") already linked in the " + layer_name(other) + " layer");
  auto& adj = layer == Layer::strong ? strong_ : weak_;
  sorted_insert(adj[static_cast<std::size_t>(u)], v);
  sorted_insert(adj[static_cast<std::size_t>(v)], u);
}

bool TwoLayerGraph::has_edge(NodeId u, NodeId v, Layer layer) const {
  check_node(u);
  check_node(v);
  const auto& adj = layer == Layer::strong ? strong_ : weak_;
  return sorted_contains(adj[static_cast<std::size_t>(u)], v);
}

TwoLayerGraph TwoLayerGraph::from_edges(
    Count node_count, const std::vector<std::pair<NodeId, NodeId>>& strong,
    const std::vector<std::pair<NodeId, NodeId>>& weak) {
  TwoLayerGraph g(node_count);
  auto fill = [&](const std::vector<std::pair<NodeId, NodeId>>& edges,
                  std::vector<std::vector<NodeId>>& adj) {
    for (auto [u, v] : edges) {
      g.check_node(u);
      g.check_node(v);
      if (u == v)
        raise(Errc::self_loop, "self loop at node " + std::to_string(u));
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
    sort_dedup(adj);
  };
  fill(strong, g.strong_);
  fill(weak, g.weak_);
  for (Count u = 0; u < node_count; ++u) {
    const auto& s = g.strong_[static_cast<std::size_t>(u)];
    for (NodeId v : s) {
      if (u < v && sorted_contains(g.weak_[static_cast<std::size_t>(u)], v))
        raise(Errc::layer_conflict,
              "pair (" + std::to_string(u) + ", " + std::to_string(v) +
                  ") present in both layers");
    }
  }
  return g;
}

Count TwoLayerGraph::edge_count(Layer layer) const {
  const auto& adj = layer == Layer::strong ? strong_ : weak_;
  Count total = 0;
  for (const auto& list : adj) total += static_cast<Count>(list.size());
  return total / 2;
}

DegreeMoments TwoLayerGraph::degree_moments() const {
  Count n = node_count();
  if (n == 0) raise(Errc::empty_graph, "degree moments of an empty graph");
  DegreeMoments m;
  for (Count i = 0; i < n; ++i) {
    double ks = static_cast<double>(strong_[static_cast<std::size_t>(i)].size());
    double kw = static_cast<double>(weak_[static_cast<std::size_t>(i)].size());
    m.k_s += ks;
    m.k_w += kw;
    m.k_ss += ks * ks;
    m.k_ww += kw * kw;
    m.k_sw += ks * kw;
  }
  double inv = 1.0 / static_cast<double>(n);
  m.k_s *= inv;
  m.k_w *= inv;
  m.k_ss *= inv;
  m.k_ww *= inv;
  m.k_sw *= inv;
  return m;
}

Graph::Graph(Count node_count) {
  if (node_count < 0) raise(Errc::bad_config, "node count must be >= 0");
  adj_.resize(static_cast<std::size_t>(node_count));
}

Graph Graph::from_edges(Count node_count,
                        const std::vector<std::pair<NodeId, NodeId>>& edges) {
  Graph g(node_count);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<Count>(u) >= node_count ||
        static_cast<Count>(v) >= node_count)
      raise(Errc::bad_config, "node id out of range");
    if (u == v)
      raise(Errc::self_loop, "self loop at node " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  sort_dedup(g.adj_);
  return g;
}

void Graph::add_edge(NodeId u, NodeId v) {
  if (u < 0 || v < 0 || static_cast<Count>(u) >= node_count() ||
      static_cast<Count>(v) >= node_count())
    raise(Errc::bad_config, "node id out of range");
  if (u == v)
    raise(Errc::self_loop, "self loop at node " + std::to_string(u));
  sorted_insert(adj_[static_cast<std::size_t>(u)], v);
  sorted_insert(adj_[static_cast<std::size_t>(v)], u);
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  return sorted_contains(adj_[static_cast<std::size_t>(u)], v);
}

Count Graph::edge_count() const {
  Count total = 0;
  for (const auto& list : adj_) total += static_cast<Count>(list.size());
  return total / 2;
}

Graph collapse(const TwoLayerGraph& g) {
  Graph out(g.node_count());
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (Count u = 0; u < g.node_count(); ++u) {
    NodeId uu = static_cast<NodeId>(u);
    for (Layer layer : {Layer::strong, Layer::weak}) {
      for (NodeId v : g.neighbors(uu, layer))
        if (uu < v) edges.emplace_back(uu, v);
    }
  }
  return Graph::from_edges(g.node_count(), edges);
}

Count triangle_count(const Graph& g) {
  Count total = 0;
  Count n = g.node_count();
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : total)
  for (Count u = 0; u < n; ++u) {
    NodeId uu = static_cast<NodeId>(u);
    auto nu = g.neighbors(uu);
    for (NodeId v : nu) {
      if (v <= uu) continue;
      auto nv = g.neighbors(v);
      // count w > v adjacent to both u and v
      auto iu = std::lower_bound(nu.begin(), nu.end(), v + 1);
      auto iv = std::lower_bound(nv.begin(), nv.end(), v + 1);
      while (iu != nu.end() && iv != nv.end()) {
        if (*iu < *iv) {
          ++iu;
        } else if (*iv < *iu) {
          ++iv;
        } else {
          ++total;
          ++iu;
          ++iv;
        }
      }
    }
  }
  return total;
}

double global_clustering(const Graph& g) {
  Count triads = 0;
  for (Count u = 0; u < g.node_count(); ++u) {
    Count k = g.degree(static_cast<NodeId>(u));
    triads += k * (k - 1) / 2;
  }
  if (triads == 0) raise(Errc::no_triads, "graph has no triads");
  return 3.0 * static_cast<double>(triangle_count(g)) /
         static_cast<double>(triads);
}

// --- edge-list I/O -------------------------------------------------------

TwoLayerGraph load_edge_list(std::istream& in) {
  std::string line;
  long line_no = 0;
  bool have_header = false;
  Count n = 0;
  std::vector<std::pair<NodeId, NodeId>> strong, weak;
  std::unordered_set<std::uint64_t> seen[2];  // per-layer pair keys

  auto fail = [&](Errc code, const std::string& what) {
    raise(code, "edge list line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    if (!have_header) {
      if (first != "nodes") fail(Errc::parse_error, "expected 'nodes <N>' header");
      long long count = -1;
      if (!(ls >> count) || count < 0) fail(Errc::parse_error, "bad node count");
      n = count;
      have_header = true;
      continue;
    }
    long long u = -1, v = -1;
    std::string tag;
    try {
      u = std::stoll(first);
    } catch (const std::exception&) {
      fail(Errc::parse_error, "bad node id '" + first + "'");
    }
    if (!(ls >> v >> tag)) fail(Errc::parse_error, "expected '<u> <v> <s|w>'");
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(Errc::parse_error, "node id out of range");
    if (tag != "s" && tag != "w") fail(Errc::parse_error, "layer tag must be 's' or 'w'");
    if (u == v) fail(Errc::self_loop, "self loop at node " + std::to_string(u));
    std::uint64_t key = pair_key(static_cast<NodeId>(u), static_cast<NodeId>(v));
    int layer_idx = tag == "s" ? 0 : 1;
    if (seen[1 - layer_idx].count(key))
      fail(Errc::layer_conflict,
           "pair (" + std::to_string(u) + ", " + std::to_string(v) +
               ") already present in the other layer");
    seen[layer_idx].insert(key);
    auto& edges = tag == "s" ? strong : weak;
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  if (!have_header) raise(Errc::parse_error, "edge list: missing 'nodes <N>' header");

  return TwoLayerGraph::from_edges(n, strong, weak);
}

TwoLayerGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::io_error, "cannot open " + path);
  return load_edge_list(in);
}

void save_edge_list(const TwoLayerGraph& g, std::ostream& out) {
  out << "nodes " << g.node_count() << "\n";
  for (Count u = 0; u < g.node_count(); ++u) {
    NodeId uu = static_cast<NodeId>(u);
    for (NodeId v : g.neighbors(uu, Layer::strong))
      if (uu < v) out << uu << " " << v << " s\n";
    for (NodeId v : g.neighbors(uu, Layer::weak))
      if (uu < v) out << uu << " " << v << " w\n";
  }
}

void save_edge_list_file(const TwoLayerGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) raise(Errc::io_error, "cannot open " + path);
  save_edge_list(g, out);
  if (!out) raise(Errc::io_error, "write failed: " + path);
}

}  // namespace fcs
