#include "fcs/census.hpp"

#include <algorithm>
#include <unordered_set>
#include <vector>

namespace fcs {

namespace {

// Collapsed CSR over both layers: neighbors sorted per node, with a parallel
// byte marking weak links. Built once per census call.
struct CollapsedView {
  std::vector<std::size_t> offset;  // node_count + 1
  std::vector<NodeId> nbr;
  std::vector<std::uint8_t> weak;

  std::size_t begin(NodeId u) const { return offset[static_cast<std::size_t>(u)]; }
  std::size_t end(NodeId u) const { return offset[static_cast<std::size_t>(u) + 1]; }
  Count degree(NodeId u) const { return static_cast<Count>(end(u) - begin(u)); }
};

CollapsedView build_view(const TwoLayerGraph& g) {
  Count n = g.node_count();
  CollapsedView v;
  v.offset.resize(static_cast<std::size_t>(n) + 1, 0);
  for (Count i = 0; i < n; ++i) {
    NodeId u = static_cast<NodeId>(i);
    v.offset[static_cast<std::size_t>(i) + 1] =
        v.offset[static_cast<std::size_t>(i)] +
        static_cast<std::size_t>(g.degree(u, Layer::strong) +
                                 g.degree(u, Layer::weak));
  }
  v.nbr.resize(v.offset.back());
  v.weak.resize(v.offset.back());
  for (Count i = 0; i < n; ++i) {
    NodeId u = static_cast<NodeId>(i);
    auto s = g.neighbors(u, Layer::strong);
    auto w = g.neighbors(u, Layer::weak);
    std::size_t out = v.begin(u);
    std::size_t a = 0, b = 0;
    while (a < s.size() || b < w.size()) {
      bool take_weak = a == s.size() || (b < w.size() && w[b] < s[a]);
      if (take_weak) {
        v.nbr[out] = w[b++];
        v.weak[out] = 1;
      } else {
        v.nbr[out] = s[a++];
        v.weak[out] = 0;
      }
      ++out;
    }
  }
  return v;
}

bool view_has_edge(const CollapsedView& v, NodeId j, NodeId k) {
  NodeId a = j, b = k;
  if (v.degree(a) > v.degree(b)) std::swap(a, b);
  auto first = v.nbr.begin() + static_cast<std::ptrdiff_t>(v.begin(a));
  auto last = v.nbr.begin() + static_cast<std::ptrdiff_t>(v.end(a));
  return std::binary_search(first, last, b);
}

TriangleCounts triangles_from_view(const CollapsedView& v, Count n) {
  Count c0 = 0, c1 = 0, c2 = 0, c3 = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : c0, c1, c2, c3)
  for (Count ui = 0; ui < n; ++ui) {
    NodeId u = static_cast<NodeId>(ui);
    std::size_t ub = v.begin(u), ue = v.end(u);
    for (std::size_t p = ub; p < ue; ++p) {
      NodeId w1 = v.nbr[p];
      if (w1 <= u) continue;
      int uv_weak = v.weak[p];
      // intersect suffixes of N(u) and N(w1) restricted to ids > w1
      std::size_t iu = p + 1;
      std::size_t iv = v.begin(w1), ve = v.end(w1);
      iv = static_cast<std::size_t>(
          std::lower_bound(v.nbr.begin() + static_cast<std::ptrdiff_t>(iv),
                           v.nbr.begin() + static_cast<std::ptrdiff_t>(ve),
                           static_cast<NodeId>(w1 + 1)) -
          v.nbr.begin());
      while (iu < ue && iv < ve) {
        if (v.nbr[iu] < v.nbr[iv]) {
          ++iu;
        } else if (v.nbr[iv] < v.nbr[iu]) {
          ++iv;
        } else {
          int nw = uv_weak + v.weak[iu] + v.weak[iv];
          if (nw == 0)
            ++c0;
          else if (nw == 1)
            ++c1;
          else if (nw == 2)
            ++c2;
          else
            ++c3;
          ++iu;
          ++iv;
        }
      }
    }
  }
  return {c0, c1, c2, c3};
}

OpenTriadCounts open_triads_from_view(const CollapsedView& v, Count n) {
  Count ss = 0, sw = 0, ww = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : ss, sw, ww)
  for (Count ei = 0; ei < n; ++ei) {
    NodeId ego = static_cast<NodeId>(ei);
    std::size_t b = v.begin(ego), e = v.end(ego);
    for (std::size_t p = b; p < e; ++p) {
      for (std::size_t q = p + 1; q < e; ++q) {
        if (view_has_edge(v, v.nbr[p], v.nbr[q])) continue;
        int nw = v.weak[p] + v.weak[q];
        if (nw == 0)
          ++ss;
        else if (nw == 1)
          ++sw;
        else
          ++ww;
      }
    }
  }
  return {ss, sw, ww};
}

}  // namespace

TriangleCounts triangle_census(const TwoLayerGraph& g) {
  return triangles_from_view(build_view(g), g.node_count());
}

OpenTriadCounts open_triad_census(const TwoLayerGraph& g) {
  return open_triads_from_view(build_view(g), g.node_count());
}

MotifCensus motif_census(const TwoLayerGraph& g) {
  CollapsedView v = build_view(g);
  TriangleCounts t = triangles_from_view(v, g.node_count());
  OpenTriadCounts l = open_triads_from_view(v, g.node_count());
  return {t.t_s3, t.t_s2w, t.t_sw2, t.t_w3, l.l_ss, l.l_sw, l.l_ww};
}

TriangleCounts triangle_census_serial(const TwoLayerGraph& g) {
  Count n = g.node_count();
  std::vector<std::unordered_set<NodeId>> merged(static_cast<std::size_t>(n));
  for (Count i = 0; i < n; ++i) {
    NodeId u = static_cast<NodeId>(i);
    for (NodeId x : g.neighbors(u, Layer::strong)) merged[i].insert(x);
    for (NodeId x : g.neighbors(u, Layer::weak)) merged[i].insert(x);
  }
  auto is_weak = [&](NodeId a, NodeId b) { return g.has_edge(a, b, Layer::weak); };
  TriangleCounts c;
  for (Count i = 0; i < n; ++i) {
    NodeId u = static_cast<NodeId>(i);
    std::vector<NodeId> nu(merged[i].begin(), merged[i].end());
    std::sort(nu.begin(), nu.end());
    for (NodeId v : nu) {
      if (v <= u) continue;
      for (NodeId w : nu) {
        if (w <= v) continue;
        if (!merged[static_cast<std::size_t>(v)].count(w)) continue;
        int nw = is_weak(u, v) + is_weak(u, w) + is_weak(v, w);
        if (nw == 0)
          ++c.t_s3;
        else if (nw == 1)
          ++c.t_s2w;
        else if (nw == 2)
          ++c.t_sw2;
        else
          ++c.t_w3;
      }
    }
  }
  return c;
}

OpenTriadCounts open_triad_census_serial(const TwoLayerGraph& g) {
  Count n = g.node_count();
  std::vector<std::unordered_set<NodeId>> merged(static_cast<std::size_t>(n));
  for (Count i = 0; i < n; ++i) {
    NodeId u = static_cast<NodeId>(i);
    for (NodeId x : g.neighbors(u, Layer::strong)) merged[i].insert(x);
    for (NodeId x : g.neighbors(u, Layer::weak)) merged[i].insert(x);
  }
  OpenTriadCounts c;
  for (Count i = 0; i < n; ++i) {
    NodeId ego = static_cast<NodeId>(i);
    std::vector<NodeId> nb(merged[i].begin(), merged[i].end());
    std::sort(nb.begin(), nb.end());
    for (std::size_t p = 0; p < nb.size(); ++p) {
      for (std::size_t q = p + 1; q < nb.size(); ++q) {
        if (merged[static_cast<std::size_t>(nb[p])].count(nb[q])) continue;
        int nw = g.has_edge(ego, nb[p], Layer::weak) +
                 g.has_edge(ego, nb[q], Layer::weak);
        if (nw == 0)
          ++c.l_ss;
        else if (nw == 1)
          ++c.l_sw;
        else
          ++c.l_ww;
      }
    }
  }
  return c;
}

TriadTotals triad_totals_from_degrees(const TwoLayerGraph& g) {
  TriadTotals t;
  for (Count i = 0; i < g.node_count(); ++i) {
    NodeId u = static_cast<NodeId>(i);
    Count ks = g.degree(u, Layer::strong);
    Count kw = g.degree(u, Layer::weak);
    t.tau_ss += ks * (ks - 1) / 2;
    t.tau_sw += ks * kw;
    t.tau_ww += kw * (kw - 1) / 2;
  }
  return t;
}

}  // namespace fcs
