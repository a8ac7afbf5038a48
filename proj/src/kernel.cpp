#include "mcc/kernel.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "mcc/errors.hpp"

namespace mcc {

bool is_co_vertex_cover(const Graph &g, const std::vector<Vertex> &s) {
  VertexSet rest(g.order());
  rest.set();
  for (Vertex v : s)
    rest.reset(v);
  for (auto c = rest.find_first(); c != VertexSet::npos; c = rest.find_next(c)) {
    VertexSet missing = rest - g.neighbourhood(static_cast<Vertex>(c));
    missing.reset(c);
    if (missing.any())
      return false;
  }
  return true;
}

namespace {

// Branch and bound for minimum vertex cover on a compact graph.
class CoverSearch {
public:
  CoverSearch(std::vector<VertexSet> rows, int budget)
      : rows_(std::move(rows)), best_size_(budget + 1) {}

  bool run() {
    VertexSet alive(rows_.size());
    alive.set();
    std::vector<int> chosen;
    search(alive, chosen);
    return found_;
  }

  const std::vector<int> &best() const { return best_; }

private:
  std::size_t degree(std::size_t v, const VertexSet &alive) const {
    return (rows_[v] & alive).count();
  }

  // Vertices forced into some minimum cover: the dominating endpoint of an
  // edge uv with N[u] a subset of N[v]. Isolated vertices are dropped.
  void reduce(VertexSet &alive, std::vector<int> &chosen) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto u = alive.find_first(); u != VertexSet::npos; u = alive.find_next(u)) {
        VertexSet nu = rows_[u] & alive;
        if (nu.none()) {
          alive.reset(u);
          changed = true;
          continue;
        }
        nu.set(u);
        for (auto v = rows_[u].find_first(); v != VertexSet::npos; v = rows_[u].find_next(v)) {
          if (!alive.test(v))
            continue;
          VertexSet nv = rows_[v] & alive;
          nv.set(v);
          if (nu.is_subset_of(nv)) {
            chosen.push_back(static_cast<int>(v));
            alive.reset(v);
            changed = true;
            break;
          }
        }
      }
    }
  }

  std::size_t matching_bound(const VertexSet &alive) const {
    VertexSet free = alive;
    std::size_t matched = 0;
    for (auto u = free.find_first(); u != VertexSet::npos; u = free.find_next(u)) {
      auto v = (rows_[u] & free).find_first();
      if (v == VertexSet::npos)
        continue;
      free.reset(u);
      free.reset(v);
      ++matched;
    }
    return matched;
  }

  void search(VertexSet alive, std::vector<int> &chosen) {
    const auto mark = chosen.size();
    reduce(alive, chosen);
    const auto taken = chosen.size();
    if (alive.none()) {
      if (static_cast<int>(taken) < best_size_) {
        best_size_ = static_cast<int>(taken);
        best_ = chosen;
        found_ = true;
      }
      chosen.resize(mark);
      return;
    }
    if (static_cast<int>(taken + matching_bound(alive)) >= best_size_) {
      chosen.resize(mark);
      return;
    }

    std::size_t pivot = alive.find_first();
    std::size_t pivot_degree = 0;
    for (auto v = alive.find_first(); v != VertexSet::npos; v = alive.find_next(v)) {
      if (auto d = degree(v, alive); d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }

    chosen.push_back(static_cast<int>(pivot));
    VertexSet without = alive;
    without.reset(pivot);
    search(without, chosen);
    chosen.pop_back();

    VertexSet nbrs = rows_[pivot] & alive;
    if (static_cast<int>(taken + nbrs.count()) < best_size_) {
      for (auto v = nbrs.find_first(); v != VertexSet::npos; v = nbrs.find_next(v))
        chosen.push_back(static_cast<int>(v));
      VertexSet rest = alive - nbrs;
      rest.reset(pivot);
      search(rest, chosen);
    }
    chosen.resize(mark);
  }

  std::vector<VertexSet> rows_;
  int best_size_;
  bool found_ = false;
  std::vector<int> best_;
};

} // namespace

CoVertexCover min_co_vertex_cover(const Graph &g, int budget) {
  if (budget < 0)
    throw PreconditionError("negative co-vertex cover budget");
  const int n = g.order();

  // Only vertices with a non-neighbour take part in the search.
  std::vector<Vertex> active;
  std::vector<int> compact(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < n - 1) {
      compact[v] = static_cast<int>(active.size());
      active.push_back(v);
    }
  }
  std::vector<VertexSet> rows(active.size(), VertexSet(active.size()));
  for (std::size_t i = 0; i < active.size(); ++i)
    for (std::size_t j = i + 1; j < active.size(); ++j)
      if (!g.adjacent(active[i], active[j])) {
        rows[i].set(j);
        rows[j].set(i);
      }

  CoverSearch search(std::move(rows), budget);
  if (!search.run())
    throw BudgetExceeded(budget);
  CoVertexCover out;
  for (int i : search.best())
    out.vertices.push_back(active[i]);
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

BipartiteMatching max_bipartite_matching(int left_size, int right_size,
                                         const std::vector<std::pair<int, int>> &edges) {
  std::vector<std::vector<int>> adj(left_size);
  for (auto [l, r] : edges) {
    if (l < 0 || l >= left_size || r < 0 || r >= right_size)
      throw PreconditionError("bipartite edge endpoint out of range");
    adj[l].push_back(r);
  }
  for (auto &a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }

  constexpr int inf = std::numeric_limits<int>::max();
  std::vector<int> mate_l(left_size, -1), mate_r(right_size, -1), dist(left_size);

  auto bfs = [&] {
    std::queue<int> q;
    bool reachable_free = false;
    for (int l = 0; l < left_size; ++l) {
      dist[l] = mate_l[l] == -1 ? 0 : inf;
      if (dist[l] == 0)
        q.push(l);
    }
    while (!q.empty()) {
      int l = q.front();
      q.pop();
      for (int r : adj[l]) {
        int next = mate_r[r];
        if (next == -1)
          reachable_free = true;
        else if (dist[next] == inf) {
          dist[next] = dist[l] + 1;
          q.push(next);
        }
      }
    }
    return reachable_free;
  };

  auto dfs = [&](auto &&self, int l) -> bool {
    for (int r : adj[l]) {
      int next = mate_r[r];
      if (next == -1 || (dist[next] == dist[l] + 1 && self(self, next))) {
        mate_l[l] = r;
        mate_r[r] = l;
        return true;
      }
    }
    dist[l] = inf;
    return false;
  };

  while (bfs())
    for (int l = 0; l < left_size; ++l)
      if (mate_l[l] == -1)
        dfs(dfs, l);

  BipartiteMatching m{left_size, right_size, {}, std::move(mate_l), std::move(mate_r)};
  for (int l = 0; l < left_size; ++l)
    if (m.mate_left[l] != -1)
      m.pairs.emplace_back(l, m.mate_left[l]);
  return m;
}

Kernel kernelize(const Graph &g, const CoVertexCover &s) {
  const int n = g.order();
  if (s.empty())
    throw PreconditionError("kernelize needs a nonempty co-vertex cover");
  VertexSet in_s(n);
  for (Vertex v : s.vertices) {
    if (v < 0 || v >= n)
      throw PreconditionError("co-vertex cover vertex " + std::to_string(v) + " out of range");
    in_s.set(v);
  }
  std::vector<Vertex> s_ids, clique;
  for (Vertex v = 0; v < n; ++v)
    (in_s.test(v) ? s_ids : clique).push_back(v);
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      if (!g.adjacent(clique[i], clique[j]))
        throw PreconditionError("g - S is not a clique: " + std::to_string(clique[i]) + " and " +
                                std::to_string(clique[j]) + " are nonadjacent");

  Kernel k;
  if (clique.size() <= 2 * s_ids.size()) {
    k.reduced = g;
    k.untouched = true;
    k.s = s_ids;
    k.c_prime = clique;
    k.to_original.resize(n);
    k.to_kernel.resize(n);
    for (Vertex v = 0; v < n; ++v)
      k.to_original[v] = k.to_kernel[v] = v;
    return k;
  }

  // Right side: copies 2i and 2i+1 of s_ids[i].
  std::vector<std::pair<int, int>> edges;
  for (std::size_t ci = 0; ci < clique.size(); ++ci)
    for (std::size_t si = 0; si < s_ids.size(); ++si)
      if (g.adjacent(clique[ci], s_ids[si])) {
        edges.emplace_back(static_cast<int>(ci), static_cast<int>(2 * si));
        edges.emplace_back(static_cast<int>(ci), static_cast<int>(2 * si + 1));
      }
  const auto matching = max_bipartite_matching(static_cast<int>(clique.size()),
                                               static_cast<int>(2 * s_ids.size()), edges);

  std::vector<bool> keep(clique.size(), false);
  std::size_t kept = 0;
  for (auto [ci, r] : matching.pairs) {
    keep[ci] = true;
    ++kept;
  }
  // Two unmatched clique vertices form no cycle; take a third.
  const std::size_t target = kept < 2 ? std::max<std::size_t>(s_ids.size() + 1, 3) : s_ids.size() + 1;
  for (std::size_t ci = 0; ci < clique.size() && kept < target; ++ci)
    if (!keep[ci]) {
      keep[ci] = true;
      ++kept;
    }

  VertexSet retained = in_s;
  for (std::size_t ci = 0; ci < clique.size(); ++ci) {
    if (keep[ci])
      retained.set(clique[ci]);
    else
      k.omitted.push_back(clique[ci]);
  }
  k.to_kernel.assign(n, -1);
  for (auto v = retained.find_first(); v != VertexSet::npos; v = retained.find_next(v)) {
    const auto id = static_cast<Vertex>(k.to_original.size());
    k.to_kernel[v] = id;
    k.to_original.push_back(static_cast<Vertex>(v));
    (in_s.test(v) ? k.s : k.c_prime).push_back(id);
  }
  k.reduced = induced_subgraph(g, k.to_original);
  return k;
}

CycleCover lift_kernel_cover(const Graph &g, const Kernel &kernel, const CycleCover &cover) {
  if (auto verdict = verify_cover(kernel.reduced, cover); !verdict)
    throw PreconditionError("cover does not verify against the kernel: " + verdict.detail);

  CycleCover lifted = canonical(relabel(cover, kernel.to_original));
  const auto &omitted = kernel.omitted;
  if (!omitted.empty()) {
    VertexSet in_c(g.order());
    for (Vertex v : kernel.c_prime)
      in_c.set(kernel.to_original[v]);
    for (Vertex v : omitted)
      in_c.set(v);

    auto &cycles = lifted.cycles;
    bool done = false;
    for (auto &c : cycles) {
      if (c.size() < 3)
        continue;
      for (std::size_t j = 0; j < c.size() && !done; ++j) {
        if (in_c.test(c[j]) && in_c.test(c[(j + 1) % c.size()])) {
          c.insert(c.begin() + static_cast<std::ptrdiff_t>(j + 1), omitted.begin(), omitted.end());
          done = true;
        }
      }
      if (done)
        break;
    }

    if (!done) {
      auto trivial = [&](std::size_t from) {
        for (std::size_t i = from; i < cycles.size(); ++i)
          if (cycles[i].size() == 1 && in_c.test(cycles[i][0]))
            return i;
        return cycles.size();
      };
      const auto first = trivial(0);
      if (first == cycles.size())
        throw InternalError("kernel lift: no cycle can absorb the omitted clique vertices");
      if (omitted.size() >= 2) {
        cycles[first].insert(cycles[first].end(), omitted.begin(), omitted.end());
      } else {
        // A single omitted vertex would make a 2-cycle; pair it with a second
        // trivial clique vertex instead.
        const auto second = trivial(first + 1);
        if (second == cycles.size())
          throw InternalError("kernel lift: one omitted vertex and a single trivial clique cycle");
        cycles[first].push_back(omitted.front());
        cycles[first].push_back(cycles[second][0]);
        cycles.erase(cycles.begin() + static_cast<std::ptrdiff_t>(second));
      }
    }
    lifted = canonical(std::move(lifted));
  }

  if (auto verdict = verify_cover(g, lifted); !verdict)
    throw InternalError("lifted kernel cover fails verification: " + verdict.detail);
  return lifted;
}

} // namespace mcc
