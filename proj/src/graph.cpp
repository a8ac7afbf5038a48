#include "mcc/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mcc/errors.hpp"

namespace mcc {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), VertexSet(n)), degree_(n, 0) {
  if (n < 0)
    throw PreconditionError("negative vertex count");
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (adj_[u].test(v))
    return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++degree_[u];
  ++degree_[v];
  ++m_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (!adj_[u].test(v))
    return;
  adj_[u].reset(v);
  adj_[v].reset(u);
  --degree_[u];
  --degree_[v];
  --m_;
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v))
      out.emplace_back(u, static_cast<Vertex>(v));
  return out;
}

int Graph::max_degree() const {
  return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

Graph graph_from_edges(int n, const EdgeList &edges) {
  if (n < 0)
    throw InputError("negative vertex count " + std::to_string(n));
  Graph g(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    auto pair = "edge #" + std::to_string(i) + " (" + std::to_string(u) + ", " +
                std::to_string(v) + ")";
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError(pair + ": vertex id out of range [0, " + std::to_string(n) + ")");
    if (u == v)
      throw InputError(pair + ": self-loop");
    g.add_edge(u, v);
  }
  return g;
}

Graph complement(const Graph &g) {
  const int n = g.order();
  Graph h(n);
  for (Vertex u = 0; u < n; ++u) {
    VertexSet row = ~g.neighbourhood(u);
    row.reset(u);
    for (auto v = row.find_next(u); v != VertexSet::npos; v = row.find_next(v))
      h.add_edge(u, static_cast<Vertex>(v));
  }
  return h;
}

Graph induced_subgraph(const Graph &g, const std::vector<Vertex> &vertices) {
  const int k = static_cast<int>(vertices.size());
  Graph h(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(vertices[i], vertices[j]))
        h.add_edge(i, j);
  return h;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n && n >= 3; ++u)
    g.add_edge(u, (u + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u + 1 < n; ++u)
    g.add_edge(u, u + 1);
  return g;
}

DegeneracyResult degeneracy(const Graph &g) {
  const int n = g.order();
  DegeneracyResult result;
  result.ordering.reserve(n);
  if (n == 0)
    return result;

  // One ordered bucket per remaining degree; the cursor only ever moves down
  // by one per removal, so the scan for the lowest non-empty bucket is
  // amortised O(n) overall.
  std::vector<int> deg(n);
  std::vector<std::set<Vertex>> buckets(n);
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    buckets[deg[v]].insert(v);
  }
  VertexSet removed(n);
  int cursor = 0;
  for (int step = 0; step < n; ++step) {
    while (buckets[cursor].empty())
      ++cursor;
    Vertex v = *buckets[cursor].begin();
    buckets[cursor].erase(buckets[cursor].begin());
    result.k = std::max(result.k, cursor);
    result.ordering.push_back(v);
    removed.set(v);
    const auto &row = g.neighbourhood(v);
    for (auto x = row.find_first(); x != VertexSet::npos; x = row.find_next(x)) {
      if (removed.test(x))
        continue;
      buckets[deg[x]].erase(static_cast<Vertex>(x));
      --deg[x];
      buckets[deg[x]].insert(static_cast<Vertex>(x));
    }
    if (cursor > 0)
      --cursor;
  }
  return result;
}

DegeneracyResult co_degeneracy(const Graph &g) { return degeneracy(complement(g)); }

int max_forward_degree(const Graph &g, const std::vector<Vertex> &ordering) {
  VertexSet later(g.order());
  int best = 0;
  for (auto it = ordering.rbegin(); it != ordering.rend(); ++it) {
    best = std::max(best, static_cast<int>((g.neighbourhood(*it) & later).count()));
    later.set(*it);
  }
  return best;
}

} // namespace mcc
