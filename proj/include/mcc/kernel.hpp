#pragma once

#include <utility>
#include <vector>

#include "mcc/cycle_cover.hpp"
#include "mcc/graph.hpp"

namespace mcc {

/// Vertex set whose removal leaves a clique (a vertex cover of the complement).
struct CoVertexCover {
  std::vector<Vertex> vertices; // sorted

  std::size_t size() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }
};

bool is_co_vertex_cover(const Graph &g, const std::vector<Vertex> &s);

/**
 * Minimum vertex cover of complement(g), provided one of size <= budget
 * exists; throws BudgetExceeded otherwise.
 *
 * Branch and bound over complement edges: isolated vertices are dropped, a
 * degree-1 vertex forces its neighbour, a vertex whose closed neighbourhood
 * contains a neighbour's closed neighbourhood is taken, and otherwise the
 * maximum-degree vertex v branches into {v} or N(v). A greedy maximal
 * matching supplies the lower bound.
 */
CoVertexCover min_co_vertex_cover(const Graph &g, int budget);

struct BipartiteMatching {
  int left_size = 0;
  int right_size = 0;
  std::vector<std::pair<int, int>> pairs; // (left, right), sorted by left
  std::vector<int> mate_left;             // -1 when unmatched
  std::vector<int> mate_right;

  std::size_t size() const { return pairs.size(); }
};

/// Hopcroft-Karp maximum-cardinality matching.
BipartiteMatching max_bipartite_matching(int left_size, int right_size,
                                         const std::vector<std::pair<int, int>> &edges);

struct Kernel {
  Graph reduced;
  std::vector<Vertex> s;           // kernel ids
  std::vector<Vertex> c_prime;     // kernel ids
  std::vector<Vertex> to_original; // kernel id -> input id
  std::vector<int> to_kernel;      // input id -> kernel id, -1 if dropped
  std::vector<Vertex> omitted;     // input ids of the clique vertices dropped
  bool untouched = false;
};

/**
 * Reduces g, given S with g - S a clique C, to the induced subgraph on S and
 * a retained part C' of C with at most max(3|S|, 4) vertices in total.
 *
 * If |C| <= 2|S| the graph is returned as is. Otherwise every s in S gets two
 * copies in a bipartite graph against C, C' is the matched side of a maximum
 * matching, padded with the smallest unmatched ids up to |S| + 1 (up to 3
 * when fewer than 2 clique vertices are matched).
 */
Kernel kernelize(const Graph &g, const CoVertexCover &s);

/**
 * Lifts a cover of kernel.reduced to a cover of g of no larger size by
 * threading the omitted clique vertices through a clique edge of some cycle
 * or through a trivial clique-vertex cycle.
 */
CycleCover lift_kernel_cover(const Graph &g, const Kernel &kernel, const CycleCover &cover);

} // namespace mcc
