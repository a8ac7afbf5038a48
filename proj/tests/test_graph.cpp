#include "doctest.h"

#include "mcc/errors.hpp"
#include "mcc/graph.hpp"
#include "support.hpp"

using namespace mcc;

TEST_CASE("graph_from_edges builds exactly the given edges") {
  auto tri = graph_from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(tri.order() == 3);
  CHECK(tri.size() == 3);
  for (Vertex v = 0; v < 3; ++v)
    CHECK(tri.degree(v) == 2);

  auto empty = graph_from_edges(4, {});
  CHECK(empty.order() == 4);
  CHECK(empty.size() == 0);

  auto dup = graph_from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.size() == 1);
}

TEST_CASE("graph_from_edges rejects self-loops and bad ids") {
  CHECK_THROWS_AS(graph_from_edges(2, {{0, 0}}), InputError);
  CHECK_THROWS_WITH(graph_from_edges(2, {{0, 1}, {1, 1}}), doctest::Contains("edge #1"));
  CHECK_THROWS_AS(graph_from_edges(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(graph_from_edges(3, {{-1, 2}}), InputError);
}

TEST_CASE("complement examples") {
  CHECK(complement(complete_graph(4)) == Graph(4));
  auto c5 = cycle_graph(5);
  auto cc5 = complement(c5);
  CHECK(cc5.size() == 5);
  for (Vertex v = 0; v < 5; ++v)
    CHECK(cc5.degree(v) == 2);
  CHECK(complement(Graph(3)) == complete_graph(3));
}

TEST_CASE("complement is an involution and preserves degeneracy") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    int n = static_cast<int>(rng() % 65);
    auto g = test::random_graph_rng(n, 0.3 + 0.4 * (iter % 2), rng);
    auto cc = complement(complement(g));
    REQUIRE(cc == g);
    CHECK(degeneracy(cc).k == degeneracy(g).k);
    for (Vertex u = 0; u < n; ++u)
      CHECK_FALSE(g.adjacent(u, u));
  }
}

TEST_CASE("degeneracy examples") {
  for (int n = 3; n <= 9; ++n) {
    CHECK(degeneracy(cycle_graph(n)).k == 2);
    CHECK(degeneracy(complete_graph(n)).k == n - 1);
  }
  CHECK(degeneracy(path_graph(2)).k == 1);
  CHECK(degeneracy(path_graph(7)).k == 1);
  auto star = graph_from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(degeneracy(star).k == 1);
  auto empty = degeneracy(Graph(0));
  CHECK(empty.k == 0);
  CHECK(empty.ordering.empty());
}

TEST_CASE("degeneracy ties break by smallest id") {
  // Every vertex of C5 has degree 2; vertex 0 goes first, then its
  // neighbours drop to degree 1 and the smaller one (1) follows.
  auto r = degeneracy(cycle_graph(5));
  CHECK(r.ordering == std::vector<Vertex>{0, 1, 2, 3, 4});
}

TEST_CASE("co_degeneracy examples") {
  CHECK(co_degeneracy(complete_graph(6)).k == 0);
  CHECK(co_degeneracy(cycle_graph(5)).k == 2);
  CHECK(co_degeneracy(Graph(5)).k == 4);
}

TEST_CASE("degeneracy is minimal and witnessed, exhaustively for n <= 5") {
  for (int n = 0; n <= 5; ++n)
    test::for_each_labelled_graph(n, [](const Graph &g) {
      auto r = degeneracy(g);
      REQUIRE(r.k == test::brute_degeneracy(g));
      REQUIRE(max_forward_degree(g, r.ordering) == r.k);
    });
}

TEST_CASE("degeneracy on the n <= 7 atlas and random graphs up to 64 vertices") {
  for (const auto &g : test::load_atlas(7)) {
    auto r = degeneracy(g);
    REQUIRE(r.k == test::brute_degeneracy(g));
  }
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 300; ++iter) {
    int n = 1 + static_cast<int>(rng() % 64);
    auto g = test::random_graph_rng(n, std::uniform_real_distribution<>(0, 1)(rng), rng);
    auto r = degeneracy(g);
    REQUIRE(static_cast<int>(r.ordering.size()) == n);
    auto sorted = r.ordering;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
      REQUIRE(sorted[i] == i);
    CHECK(r.k <= g.max_degree());
    CHECK(max_forward_degree(g, r.ordering) == r.k);
  }
}

TEST_CASE("induced_subgraph relabels in list order") {
  auto g = cycle_graph(6);
  auto h = induced_subgraph(g, {5, 0, 1});
  CHECK(h.order() == 3);
  CHECK(h.adjacent(0, 1));
  CHECK(h.adjacent(1, 2));
  CHECK_FALSE(h.adjacent(0, 2));
}
