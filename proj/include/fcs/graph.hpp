#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fcs/errors.hpp"

namespace fcs {

using NodeId = std::int32_t;
using Count = std::int64_t;

enum class Layer : std::uint8_t { strong = 0, weak = 1 };

inline const char* layer_name(Layer l) {
  return l == Layer::strong ? "strong" : "weak";
}

/// First and second moments of the per-node strong/weak degree sequences.
struct DegreeMoments {
  double k_s = 0;    // mean strong degree
  double k_w = 0;    // mean weak degree
  double k_ss = 0;   // mean squared strong degree
  double k_ww = 0;   // mean squared weak degree
  double k_sw = 0;   // mean strong*weak degree product
};

/// Undirected graph over dense node ids 0..N-1 with two exclusive link
/// layers (strong and weak). A node pair may be linked in at most one
/// layer. Adjacency lists are kept sorted and duplicate-free; the graph is
/// mutable during construction and meant to be shared read-only afterwards.
class TwoLayerGraph {
 public:
  explicit TwoLayerGraph(Count node_count);

  /// Builds in bulk from edge lists; faster than repeated add_edge for
  /// large graphs. Duplicate edges within a layer collapse silently;
  /// cross-layer conflicts and self-loops throw.
  static TwoLayerGraph from_edges(
      Count node_count, const std::vector<std::pair<NodeId, NodeId>>& strong,
      const std::vector<std::pair<NodeId, NodeId>>& weak);

  Count node_count() const { return static_cast<Count>(strong_.size()); }

  /// Inserts an undirected edge into the given layer. Inserting a pair that
  /// already exists in the same layer is a no-op; inserting it into the
  /// other layer throws layer_conflict; u == v throws self_loop.
  void add_edge(NodeId u, NodeId v, Layer layer);

  bool has_edge(NodeId u, NodeId v, Layer layer) const;

  std::span<const NodeId> neighbors(NodeId u, Layer layer) const {
    const auto& adj = layer == Layer::strong ? strong_ : weak_;
    return {adj[static_cast<std::size_t>(u)]};
  }

  Count degree(NodeId u, Layer layer) const {
    const auto& adj = layer == Layer::strong ? strong_ : weak_;
    return static_cast<Count>(adj[static_cast<std::size_t>(u)].size());
  }

  Count edge_count(Layer layer) const;

  DegreeMoments degree_moments() const;

 private:
  void check_node(NodeId u) const;

  std::vector<std::vector<NodeId>> strong_;
  std::vector<std::vector<NodeId>> weak_;
};

/// Plain single-layer undirected graph (collapsed view, generator output).
class Graph {
 public:
  explicit Graph(Count node_count);

  static Graph from_edges(Count node_count,
                          const std::vector<std::pair<NodeId, NodeId>>& edges);

  Count node_count() const { return static_cast<Count>(adj_.size()); }

  void add_edge(NodeId u, NodeId v);

  bool has_edge(NodeId u, NodeId v) const;

  std::span<const NodeId> neighbors(NodeId u) const {
    return {adj_[static_cast<std::size_t>(u)]};
  }

  Count degree(NodeId u) const {
    return static_cast<Count>(adj_[static_cast<std::size_t>(u)].size());
  }

  Count edge_count() const;

 private:
  std::vector<std::vector<NodeId>> adj_;
};

/// Merges both layers into one unlabelled graph. Layer exclusivity makes the
/// union edge count the sum of the per-layer counts.
Graph collapse(const TwoLayerGraph& g);

/// Global clustering coefficient (transitivity): 3 * triangles / triads,
/// where triads = sum_i C(k_i, 2). Throws no_triads when the denominator
/// is zero.
double global_clustering(const Graph& g);

/// Triangle count of a single-layer graph (sorted-adjacency intersection).
Count triangle_count(const Graph& g);

// --- edge-list text format ---------------------------------------------
//
//   # comment
//   nodes <N>
//   <u> <v> <s|w>
//
// Whitespace-separated, 0-based ids. The header line must appear before any
// edge. The loader reports offending line numbers for malformed input and
// exclusivity violations.

TwoLayerGraph load_edge_list(std::istream& in);
TwoLayerGraph load_edge_list_file(const std::string& path);
void save_edge_list(const TwoLayerGraph& g, std::ostream& out);
void save_edge_list_file(const TwoLayerGraph& g, const std::string& path);

}  // namespace fcs
