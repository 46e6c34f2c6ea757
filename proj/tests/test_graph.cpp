#include <catch_amalgamated.hpp>

#include <random>

#include "test_support.hpp"

using namespace homcx;

namespace {

// Direct scan of the ordering contract: independent prefix, every later vertex has a prefix neighbor.
bool prefix_is_maximal_independent(const Graph& g) {
  const auto& ord = g.order();
  const int lam = g.prefix_size();
  for (int a = 0; a < lam; ++a)
    for (int b = a + 1; b < lam; ++b)
      if (g.adjacent(ord[a], ord[b])) return false;
  for (int q = lam; q < g.vertex_count(); ++q) {
    bool hit = false;
    for (int a = 0; a < lam; ++a) hit = hit || g.adjacent(ord[q], ord[a]);
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("make_graph builds C_4 with valency 2") {
  Graph g = make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  CHECK(maxval(g) == 2);
  CHECK(g.edge_count() == 4);
  CHECK(g == cycle_graph(4));
}

TEST_CASE("make_graph on a single vertex") {
  Graph g = make_graph(1, {});
  CHECK(g.prefix_size() == 1);
  CHECK(maxval(g) == 0);
}

TEST_CASE("make_graph symmetrizes and removes duplicates") {
  Graph g = make_graph(3, {{1, 2}, {2, 1}, {1, 2}, {3, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(2, 1));
  CHECK(g.adjacent(2, 3));
  CHECK_FALSE(g.adjacent(1, 3));
}

TEST_CASE("make_graph rejects loops and out-of-range endpoints") {
  CHECK_THROWS_AS(make_graph(3, {{2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("greedy prefix on stars depends on where the center sits") {
  // center first: the center is taken and blocks every leaf
  Graph center_first = make_graph(4, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(center_first.prefix_size() == 1);
  CHECK(center_first.order() == std::vector<int>{1, 2, 3, 4});
  // center last: the three leaves are taken
  Graph center_last = make_graph(4, {{4, 1}, {4, 2}, {4, 3}});
  CHECK(center_last.prefix_size() == 3);
  CHECK(center_last.order() == std::vector<int>{1, 2, 3, 4});
  CHECK(maxval(center_first) == 3);
}

TEST_CASE("builders") {
  CHECK(maxval(complete_graph(5)) == 4);
  CHECK(cycle_graph(3) == complete_graph(3));
  CHECK(path_graph(2) == complete_graph(2));
  CHECK(maxval(cycle_graph(7)) == 2);
  CHECK(maxval(edgeless_graph(5)) == 0);
  CHECK(maxval(star_graph(3)) == 3);
  CHECK(star_graph(3).vertex_count() == 4);
  CHECK(path_graph(4).edge_count() == 3);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK(graph_from_family("Star3") == star_graph(3));
  CHECK(graph_from_family("C5") == cycle_graph(5));
  CHECK(graph_from_family("P3") == path_graph(3));
  CHECK(graph_from_family("K2") == complete_graph(2));
  CHECK_THROWS_AS(graph_from_family("Q3"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_family("K"), std::invalid_argument);
}

TEST_CASE("vgap") {
  CHECK(vgap(cycle_graph(5), 5) == 2);
  CHECK(vgap(complete_graph(1), 1) == 0);
  CHECK(vgap(star_graph(3), 3) == -1);
  CHECK_THROWS_AS(vgap(cycle_graph(5), 0), std::invalid_argument);
}

TEST_CASE("maximal independent prefix examples") {
  Graph c4 = cycle_graph(4);
  CHECK(c4.order() == std::vector<int>{1, 3, 2, 4});
  CHECK(c4.prefix_size() == 2);
  Graph e3 = edgeless_graph(3);
  CHECK(e3.order() == std::vector<int>{1, 2, 3});
  CHECK(e3.prefix_size() == 3);
  Graph k3 = complete_graph(3);
  CHECK(k3.order() == std::vector<int>{1, 2, 3});
  CHECK(k3.prefix_size() == 1);
  VertexOrder vo = maximal_independent_prefix(c4);
  CHECK(vo.order == c4.order());
}

TEST_CASE("positions follow the order") {
  Graph c4 = cycle_graph(4);
  for (int q = 0; q < 4; ++q) CHECK(c4.position_of(c4.vertex_at(q)) == q);
  // vertex 2 sits at position 2 and touches vertices 1 and 3 at positions 0 and 1
  CHECK(c4.neighbors_at(2) == std::vector<int>{0, 1});
  CHECK(c4.adjacent_positions(3, 0));
  CHECK_FALSE(c4.adjacent_positions(0, 1));
}

TEST_CASE("disjoint union") {
  Graph two_points = disjoint_union(complete_graph(1), complete_graph(1));
  CHECK(two_points == edgeless_graph(2));
  Graph kk = disjoint_union(complete_graph(2), complete_graph(2));
  CHECK(kk.vertex_count() == 4);
  CHECK(kk.edge_count() == 2);
  CHECK(maxval(kk) == 1);
  Graph c4k1 = disjoint_union(cycle_graph(4), complete_graph(1));
  CHECK(maxval(c4k1) == 2);
  CHECK(c4k1.prefix_size() == 3);
}

TEST_CASE("property: random graphs keep the ordering contract, handshake and union valency") {
  std::mt19937_64 rng(20240501);
  for (int trial = 0; trial < 300; ++trial) {
    const int p = 1 + static_cast<int>(rng() % 9);
    const double density = (rng() % 100) / 100.0;
    std::vector<Edge> edges;
    for (auto [a, b] : oracle::random_edges(rng, p, density)) edges.emplace_back(a + 1, b + 1);
    Graph g = make_graph(p, edges);
    INFO("trial " << trial << " p=" << p);
    CHECK(prefix_is_maximal_independent(g));
    CHECK((g.prefix_size() == p) == (g.edge_count() == 0));
    int degree_sum = 0;
    for (int v = 1; v <= p; ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * static_cast<int>(g.edge_count()));

    Graph h = make_graph(2, rng() % 2 ? std::vector<Edge>{{1, 2}} : std::vector<Edge>{});
    Graph u = disjoint_union(g, h);
    CHECK(maxval(u) == std::max(maxval(g), maxval(h)));
    CHECK(prefix_is_maximal_independent(u));
  }
}
