#include <catch_amalgamated.hpp>

#include <random>

#include "test_support.hpp"

using namespace homcx;

TEST_CASE("f-vectors of small complexes") {
  CHECK(enumerate_skeleton(complete_graph(1), 3, 2).f_vector() == std::vector<std::size_t>{3, 3, 1});
  CHECK(enumerate_skeleton(complete_graph(2), 3, 1).f_vector() == std::vector<std::size_t>{6, 6});
  CHECK(enumerate_skeleton(complete_graph(2), 3, 3).f_vector() == std::vector<std::size_t>{6, 6, 0, 0});
  CHECK(enumerate_skeleton(edgeless_graph(2), 2, 2).f_vector() == std::vector<std::size_t>{4, 4, 1});
}

TEST_CASE("Hom(K_3, K_4) has 24 vertices and 36 edges") {
  auto sk = enumerate_skeleton(complete_graph(3), 4, 1);
  CHECK(sk.count(0) == 24);
  CHECK(sk.count(1) == 36);
}

TEST_CASE("Hom(K_{1,3}, K_3) has three 3-cells and 24 vertices") {
  auto sk = enumerate_skeleton(star_graph(3), 3, 4);
  CHECK(sk.count(3) == 3);
  CHECK(sk.count(4) == 0);
  CHECK(sk.count(0) == 24);
}

TEST_CASE("cells are stored in canonical order and found by index_of") {
  auto sk = enumerate_skeleton(cycle_graph(4), 4, 2);
  for (int d = 0; d <= 2; ++d) {
    for (std::size_t i = 0; i + 1 < sk.count(d); ++i) CHECK(sk.cell(d, i) < sk.cell(d, i + 1));
    for (std::size_t i = 0; i < sk.count(d); ++i) CHECK(sk.index_of(sk.cell(d, i)) == i);
  }
  CHECK_FALSE(sk.index_of(testing_support::cell("1,2,1,3")).has_value());
  CHECK_FALSE(sk.index_of(testing_support::cell("1234,1,2,3")).has_value());
}

TEST_CASE("enumeration errors") {
  CHECK_THROWS_AS(enumerate_skeleton(complete_graph(2), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_skeleton(complete_graph(2), 63, 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_skeleton(complete_graph(2), 3, -1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_skeleton(complete_graph(2), 3, 1, 0), std::invalid_argument);
  try {
    enumerate_skeleton(complete_graph(2), 6, 4, 100);
    FAIL("cap not enforced");
  } catch (const ResourceLimitError& e) {
    CHECK(e.cap() == 100);
    CHECK(e.dimension() >= 0);
    CHECK(std::string(e.what()).find("dimension") != std::string::npos);
  }
}

TEST_CASE("threaded enumeration matches the serial one") {
  for (const char* fam : {"C5", "Star3", "P4"}) {
    Graph g = graph_from_family(fam);
    auto a = enumerate_skeleton(g, 5, 3, kDefaultCellCap, 1);
    auto b = enumerate_skeleton(g, 5, 3, kDefaultCellCap, 3);
    REQUIRE(a.f_vector() == b.f_vector());
    for (int d = 0; d <= 3; ++d)
      for (std::size_t i = 0; i < a.count(d); ++i) CHECK(a.cell(d, i) == b.cell(d, i));
  }
}

TEST_CASE("property: enumeration equals the brute-force cell list") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int p = 1 + static_cast<int>(rng() % 4);
    std::vector<Edge> edges;
    for (auto [a, b] : oracle::random_edges(rng, p, 0.6)) edges.emplace_back(a + 1, b + 1);
    Graph g = make_graph(p, edges);
    const int n = 1 + static_cast<int>(rng() % 4);
    const int max_dim = static_cast<int>(rng() % 5);
    INFO("trial " << trial << " p=" << p << " n=" << n << " max_dim=" << max_dim);
    auto sk = enumerate_skeleton(g, n, max_dim);
    auto brute = oracle::all_cells(p, testing_support::position_edges(g), n, max_dim);
    for (int d = 0; d <= max_dim; ++d) CHECK(testing_support::as_lists(sk, d) == brute[d]);
    CHECK(sk.count(0) == oracle::count_colorings(p, testing_support::position_edges(g), n));
  }
}

TEST_CASE("property: faces of enumerated cells are enumerated") {
  auto sk = enumerate_skeleton(cycle_graph(5), 5, 3);
  for (int d = 1; d <= 3; ++d)
    for (std::size_t i = 0; i < sk.count(d); ++i)
      for (const auto& [f, k] : boundary(sk.cell(d, i))) REQUIRE(sk.index_of(f).has_value());
}

TEST_CASE("property: disjoint union multiplies f-polynomials") {
  auto f = [](const Graph& g, int n) {
    auto sk = enumerate_skeleton(g, n, 2 * n);
    auto v = sk.f_vector();
    while (v.size() > 1 && v.back() == 0) v.pop_back();
    return v;
  };
  auto product = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  const std::vector<std::pair<Graph, Graph>> pairs = {{complete_graph(1), complete_graph(2)},
                                                      {complete_graph(2), complete_graph(2)},
                                                      {complete_graph(1), complete_graph(1)},
                                                      {path_graph(3), complete_graph(1)},
                                                      {cycle_graph(4), complete_graph(2)}};
  for (int n = 2; n <= 4; ++n)
    for (const auto& [g, h] : pairs) {
      INFO("n=" << n);
      CHECK(f(disjoint_union(g, h), n) == product(f(g, n), f(h, n)));
    }
}
