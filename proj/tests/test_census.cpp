#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "fcs/census.hpp"
#include "fcs/rng.hpp"

using namespace fcs;

namespace {

TwoLayerGraph random_graph(Count n, double p_strong, double p_weak, Rng& rng) {
  TwoLayerGraph g(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      double r = rng.unit();
      if (r < p_strong)
        g.add_edge(u, v, Layer::strong);
      else if (r < p_strong + p_weak)
        g.add_edge(u, v, Layer::weak);
    }
  }
  return g;
}

bool linked(const TwoLayerGraph& g, NodeId a, NodeId b) {
  return g.has_edge(a, b, Layer::strong) || g.has_edge(a, b, Layer::weak);
}

// O(N^3) triple enumeration oracle
TriangleCounts brute_triangles(const TwoLayerGraph& g) {
  TriangleCounts c;
  Count n = g.node_count();
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      for (NodeId k = j + 1; k < n; ++k) {
        if (!(linked(g, i, j) && linked(g, i, k) && linked(g, j, k))) continue;
        int nw = g.has_edge(i, j, Layer::weak) + g.has_edge(i, k, Layer::weak) +
                 g.has_edge(j, k, Layer::weak);
        if (nw == 0)
          ++c.t_s3;
        else if (nw == 1)
          ++c.t_s2w;
        else if (nw == 2)
          ++c.t_sw2;
        else
          ++c.t_w3;
      }
  return c;
}

OpenTriadCounts brute_open_triads(const TwoLayerGraph& g) {
  OpenTriadCounts c;
  Count n = g.node_count();
  for (NodeId ego = 0; ego < n; ++ego)
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = i + 1; j < n; ++j) {
        if (i == ego || j == ego) continue;
        if (!(linked(g, ego, i) && linked(g, ego, j))) continue;
        if (linked(g, i, j)) continue;
        int nw = g.has_edge(ego, i, Layer::weak) + g.has_edge(ego, j, Layer::weak);
        if (nw == 0)
          ++c.l_ss;
        else if (nw == 1)
          ++c.l_sw;
        else
          ++c.l_ww;
      }
  return c;
}

TwoLayerGraph permuted(const TwoLayerGraph& g, const std::vector<NodeId>& perm) {
  std::vector<std::pair<NodeId, NodeId>> strong, weak;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v : g.neighbors(u, Layer::strong))
      if (u < v) strong.emplace_back(perm[u], perm[v]);
    for (NodeId v : g.neighbors(u, Layer::weak))
      if (u < v) weak.emplace_back(perm[u], perm[v]);
  }
  return TwoLayerGraph::from_edges(g.node_count(), strong, weak);
}

}  // namespace

TEST_CASE("triangle census on fixed shapes") {
  SUBCASE("all-strong 3-clique") {
    TwoLayerGraph g(3);
    g.add_edge(0, 1, Layer::strong);
    g.add_edge(1, 2, Layer::strong);
    g.add_edge(0, 2, Layer::strong);
    auto c = triangle_census(g);
    CHECK(c.t_s3 == 1);
    CHECK(c.t_s2w == 0);
    CHECK(c.t_sw2 == 0);
    CHECK(c.t_w3 == 0);
  }
  SUBCASE("one strong, two weak links") {
    TwoLayerGraph g(3);
    g.add_edge(0, 2, Layer::strong);
    g.add_edge(0, 1, Layer::weak);
    g.add_edge(1, 2, Layer::weak);
    auto c = triangle_census(g);
    CHECK(c.t_s3 == 0);
    CHECK(c.t_s2w == 0);
    CHECK(c.t_sw2 == 1);
    CHECK(c.t_w3 == 0);
  }
  SUBCASE("all-weak 4-clique") {
    TwoLayerGraph g(4);
    for (NodeId u = 0; u < 4; ++u)
      for (NodeId v = u + 1; v < 4; ++v) g.add_edge(u, v, Layer::weak);
    auto c = triangle_census(g);
    CHECK(c.t_w3 == 4);
    CHECK(c.t_s3 + c.t_s2w + c.t_sw2 == 0);
  }
}

TEST_CASE("open triad census on fixed shapes") {
  SUBCASE("strong path") {
    TwoLayerGraph g(3);
    g.add_edge(0, 1, Layer::strong);
    g.add_edge(1, 2, Layer::strong);
    auto c = open_triad_census(g);
    CHECK(c.l_ss == 1);
    CHECK(c.l_sw == 0);
    CHECK(c.l_ww == 0);
  }
  SUBCASE("one strong and one weak leaf") {
    TwoLayerGraph g(3);
    g.add_edge(1, 0, Layer::strong);
    g.add_edge(1, 2, Layer::weak);
    auto c = open_triad_census(g);
    CHECK(c.l_ss == 0);
    CHECK(c.l_sw == 1);
    CHECK(c.l_ww == 0);
  }
  SUBCASE("cliques have no open triads") {
    TwoLayerGraph g(3);
    g.add_edge(0, 1, Layer::strong);
    g.add_edge(1, 2, Layer::weak);
    g.add_edge(0, 2, Layer::weak);
    auto c = open_triad_census(g);
    CHECK(c.l_ss + c.l_sw + c.l_ww == 0);
  }
}

TEST_CASE("triad totals from degrees") {
  SUBCASE("strong 3-clique") {
    TwoLayerGraph g(3);
    g.add_edge(0, 1, Layer::strong);
    g.add_edge(1, 2, Layer::strong);
    g.add_edge(0, 2, Layer::strong);
    auto t = triad_totals_from_degrees(g);
    CHECK(t.tau_ss == 3);
    CHECK(t.tau_sw == 0);
    CHECK(t.tau_ww == 0);
  }
  SUBCASE("one hub with strong degree 3 and weak degree 2") {
    TwoLayerGraph g(6);
    g.add_edge(0, 1, Layer::strong);
    g.add_edge(0, 2, Layer::strong);
    g.add_edge(0, 3, Layer::strong);
    g.add_edge(0, 4, Layer::weak);
    g.add_edge(0, 5, Layer::weak);
    auto t = triad_totals_from_degrees(g);
    CHECK(t.tau_ss == 3);
    CHECK(t.tau_sw == 6);
    CHECK(t.tau_ww == 1);
  }
  SUBCASE("empty graph") {
    auto t = triad_totals_from_degrees(TwoLayerGraph(4));
    CHECK(t.tau_ss == 0);
    CHECK(t.tau_sw == 0);
    CHECK(t.tau_ww == 0);
  }
}

TEST_CASE("census identities hold exactly on random graphs") {
  Rng rng(2024);
  for (int rep = 0; rep < 200; ++rep) {
    Count n = 3 + static_cast<Count>(rng.below(58));
    double ps = rng.uniform(0.0, 0.25);
    double pw = rng.uniform(0.0, 0.35);
    TwoLayerGraph g = random_graph(n, ps, pw, rng);
    auto tri = triangle_census(g);
    auto open = open_triad_census(g);
    auto tau = triad_totals_from_degrees(g);
    CHECK(tau.tau_ss == open.l_ss + 3 * tri.t_s3 + tri.t_s2w);
    CHECK(tau.tau_sw == open.l_sw + 2 * tri.t_s2w + 2 * tri.t_sw2);
    CHECK(tau.tau_ww == open.l_ww + 3 * tri.t_w3 + tri.t_sw2);
  }
}

TEST_CASE("kernels match the brute-force oracle") {
  Rng rng(99);
  for (int rep = 0; rep < 40; ++rep) {
    Count n = 3 + static_cast<Count>(rng.below(38));
    TwoLayerGraph g = random_graph(n, rng.uniform(0, 0.3), rng.uniform(0, 0.3), rng);
    auto t = triangle_census(g);
    auto bt = brute_triangles(g);
    CHECK(t.t_s3 == bt.t_s3);
    CHECK(t.t_s2w == bt.t_s2w);
    CHECK(t.t_sw2 == bt.t_sw2);
    CHECK(t.t_w3 == bt.t_w3);
    auto o = open_triad_census(g);
    auto bo = brute_open_triads(g);
    CHECK(o.l_ss == bo.l_ss);
    CHECK(o.l_sw == bo.l_sw);
    CHECK(o.l_ww == bo.l_ww);
  }
}

TEST_CASE("parallel kernels equal the serial reference") {
  Rng rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    Count n = 20 + static_cast<Count>(rng.below(100));
    TwoLayerGraph g = random_graph(n, 0.08, 0.15, rng);
    auto tp = triangle_census(g);
    auto ts = triangle_census_serial(g);
    CHECK(tp.t_s3 == ts.t_s3);
    CHECK(tp.t_s2w == ts.t_s2w);
    CHECK(tp.t_sw2 == ts.t_sw2);
    CHECK(tp.t_w3 == ts.t_w3);
    auto op = open_triad_census(g);
    auto os = open_triad_census_serial(g);
    CHECK(op.l_ss == os.l_ss);
    CHECK(op.l_sw == os.l_sw);
    CHECK(op.l_ww == os.l_ww);
  }
}

TEST_CASE("census is invariant under node relabeling") {
  Rng rng(31);
  for (int rep = 0; rep < 15; ++rep) {
    Count n = 10 + static_cast<Count>(rng.below(30));
    TwoLayerGraph g = random_graph(n, 0.1, 0.2, rng);
    std::vector<NodeId> perm(static_cast<std::size_t>(n));
    for (Count i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = static_cast<NodeId>(i);
    for (Count i = n - 1; i > 0; --i) {
      Count j = static_cast<Count>(rng.below(static_cast<std::uint64_t>(i + 1)));
      std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
    TwoLayerGraph h = permuted(g, perm);
    auto tg = triangle_census(g);
    auto th = triangle_census(h);
    CHECK(tg.t_s3 == th.t_s3);
    CHECK(tg.t_s2w == th.t_s2w);
    CHECK(tg.t_sw2 == th.t_sw2);
    CHECK(tg.t_w3 == th.t_w3);
    auto og = open_triad_census(g);
    auto oh = open_triad_census(h);
    CHECK(og.l_ss == oh.l_ss);
    CHECK(og.l_sw == oh.l_sw);
    CHECK(og.l_ww == oh.l_ww);
  }
}
