#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace mcc {

using Vertex = int;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;
using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

/**
 * Simple undirected graph on vertices 0..n-1 stored as one bit row per
 * vertex. Rows are kept symmetric and irreflexive; degrees are cached.
 */
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  std::size_t size() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
  int degree(Vertex v) const { return degree_[v]; }
  const VertexSet &neighbourhood(Vertex v) const { return adj_[v]; }

  /// No-ops when the edge is already present (resp. absent).
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Edges as (u, v) with u < v, lexicographically sorted.
  EdgeList edges() const;

  int max_degree() const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<int> degree_;
};

/// Builds a graph from a list of pairs. Duplicates collapse; out-of-range
/// ids and self-loops throw InputError naming the offending pair index.
Graph graph_from_edges(int n, const EdgeList &edges);

Graph complement(const Graph &g);

/// G[vertices], relabelled so that vertices[i] becomes vertex i.
Graph induced_subgraph(const Graph &g, const std::vector<Vertex> &vertices);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

struct DegeneracyResult {
  int k = 0;
  /// Elimination order: ordering[i] has at most k neighbours in
  /// ordering[i+1..n-1].
  std::vector<Vertex> ordering;
};

/// Smallest-last elimination: repeatedly removes a minimum-degree vertex,
/// ties broken by smallest id.
DegeneracyResult degeneracy(const Graph &g);

/// Degeneracy of the explicitly materialised complement.
DegeneracyResult co_degeneracy(const Graph &g);

/// Largest forward degree of an ordering; used to re-check witnesses.
int max_forward_degree(const Graph &g, const std::vector<Vertex> &ordering);

} // namespace mcc
