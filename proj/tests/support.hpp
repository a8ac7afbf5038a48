#pragma once

// Test-only helpers: corpora and brute-force oracles that share no code path
// with the library routines they check.

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mcc/cycle_cover.hpp"
#include "mcc/graph.hpp"

namespace mcc::test {

inline std::vector<Graph> load_atlas(int max_n) {
  std::ifstream in(std::string(MCC_TEST_DATA_DIR) + "/graph_atlas_n7.txt");
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    std::istringstream ss(line);
    int n, m;
    ss >> n >> m;
    if (n > max_n)
      continue;
    Graph g(n);
    for (int i = 0; i < m; ++i) {
      int u, v;
      ss >> u >> v;
      g.add_edge(u, v);
    }
    out.push_back(std::move(g));
  }
  return out;
}

/// Calls f on every labelled graph with n vertices.
inline void for_each_labelled_graph(int n, const std::function<void(const Graph &)> &f) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      pairs.emplace_back(u, v);
  for (unsigned long mask = 0; mask < (1ul << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1)
        g.add_edge(pairs[i].first, pairs[i].second);
    f(g);
  }
}

inline Graph random_graph_rng(int n, double p, std::mt19937_64 &rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng))
        g.add_edge(u, v);
  return g;
}

/// Degeneracy as the largest minimum degree over all induced subgraphs.
inline int brute_degeneracy(const Graph &g) {
  const int n = g.order();
  int best = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int mindeg = n;
    for (int v = 0; v < n; ++v) {
      if (!(mask >> v & 1))
        continue;
      int d = 0;
      for (int u = 0; u < n; ++u)
        d += (mask >> u & 1) && g.adjacent(u, v);
      mindeg = std::min(mindeg, d);
    }
    best = std::max(best, mindeg);
  }
  return best;
}

inline int brute_min_vertex_cover(const Graph &h) {
  const int n = h.order();
  const auto edges = h.edges();
  int best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = std::all_of(edges.begin(), edges.end(),
                          [&](auto e) { return (mask >> e.first & 1) || (mask >> e.second & 1); });
    if (ok)
      best = std::min(best, __builtin_popcount(mask));
  }
  return best;
}

inline int brute_max_matching(const std::vector<std::pair<int, int>> &edges) {
  int best = 0;
  for (unsigned long mask = 0; mask < (1ul << edges.size()); ++mask) {
    std::vector<int> l, r;
    bool ok = true;
    for (std::size_t i = 0; i < edges.size() && ok; ++i) {
      if (!(mask >> i & 1))
        continue;
      if (std::count(l.begin(), l.end(), edges[i].first) ||
          std::count(r.begin(), r.end(), edges[i].second))
        ok = false;
      l.push_back(edges[i].first);
      r.push_back(edges[i].second);
    }
    if (ok)
      best = std::max(best, __builtin_popcountl(mask));
  }
  return best;
}

/// Closure by rescanning every pair until nothing changes.
inline Graph naive_closure(Graph g, int ell) {
  const int n = g.order();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.adjacent(u, v) && g.degree(u) + g.degree(v) >= n + ell) {
          g.add_edge(u, v);
          changed = true;
        }
  }
  return g;
}

/// Random partition of a random vertex order into pieces of length 1 or
/// >= 3; a cycle cover of K_n.
inline CycleCover random_complete_cover(int n, std::mt19937_64 &rng) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  CycleCover cover;
  int i = 0;
  while (i < n) {
    const int rest = n - i;
    // Lengths 1 or 3..rest; 2 is remapped to 1.
    int len = std::uniform_int_distribution<int>(1, rest)(rng);
    if (len == 2)
      len = 1;
    cover.cycles.emplace_back(order.begin() + i, order.begin() + i + len);
    i += len;
  }
  return cover;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      g.add_edge(u, a + v);
  return g;
}

} // namespace mcc::test
