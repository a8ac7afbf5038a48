#include "mcc/generators.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "mcc/errors.hpp"

namespace mcc {

std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
  // Rejection on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t x;
  do
    x = rng();
  while (x >= limit);
  return x % bound;
}

namespace {

std::vector<Vertex> random_permutation(int n, Rng &rng) {
  std::vector<Vertex> p(n);
  for (Vertex i = 0; i < n; ++i)
    p[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(p[i], p[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
  return p;
}

double uniform_unit(Rng &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

} // namespace

Graph random_graph(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (uniform_unit(rng) < p)
        g.add_edge(u, v);
  return g;
}

Graph gen_co_degenerate(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 0 || k > n - 1)
    throw PreconditionError("gen_co_degenerate needs n >= 1 and 0 <= k <= n-1 (got n=" +
                            std::to_string(n) + ", k=" + std::to_string(k) + ")");
  Rng rng(seed);
  const auto order = random_permutation(n, rng);
  Graph g = complete_graph(n);
  for (int i = 1; i < n; ++i) {
    // Floyd's sampling of min(k, i) distinct earlier positions.
    const int picks = std::min(k, i);
    std::unordered_set<int> chosen;
    std::vector<int> ordered;
    for (int j = i - picks; j < i; ++j) {
      int t = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(j) + 1));
      if (chosen.count(t))
        t = j;
      chosen.insert(t);
      ordered.push_back(t);
    }
    for (int pos : ordered)
      g.remove_edge(order[i], order[pos]);
  }
  if (auto d = co_degeneracy(g).k; d > k)
    throw InternalError("gen_co_degenerate produced co-degeneracy " + std::to_string(d) +
                        " > " + std::to_string(k));
  return g;
}

Graph gen_dirac_deficient(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 0 || k > n)
    throw PreconditionError("gen_dirac_deficient needs n >= 1 and 0 <= k <= n (got n=" +
                            std::to_string(n) + ", k=" + std::to_string(k) + ")");
  const int bound = (n + 1) / 2;
  const int high_count = n - k;
  if (high_count > 0 && n - 1 < bound)
    throw PreconditionError("gen_dirac_deficient: no vertex of a " + std::to_string(n) +
                            "-vertex graph can reach degree " + std::to_string(bound));

  Rng rng(seed);
  const auto order = random_permutation(n, rng);
  std::vector<Vertex> high(order.begin(), order.begin() + high_count);
  std::vector<Vertex> low(order.begin() + high_count, order.end());
  std::sort(high.begin(), high.end());
  std::sort(low.begin(), low.end());

  Graph g(n);
  for (std::size_t i = 0; i < high.size(); ++i)
    for (std::size_t j = i + 1; j < high.size(); ++j)
      if (rng() & 1)
        g.add_edge(high[i], high[j]);

  for (Vertex v : low) {
    const auto extra = uniform_below(rng, 3);
    for (std::uint64_t e = 0; e < extra && n > 1; ++e) {
      Vertex x = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
      if (x != v)
        g.add_edge(v, x);
    }
  }

  for (Vertex v : high) {
    if (g.degree(v) >= bound)
      continue;
    // Prefer other high vertices, then fall back to any vertex.
    const std::vector<Vertex> *pools[] = {&high, &order};
    for (const auto *pool : pools) {
      std::vector<Vertex> candidates;
      for (Vertex x : *pool)
        if (x != v && !g.adjacent(v, x))
          candidates.push_back(x);
      for (std::size_t i = candidates.size(); i > 1 && g.degree(v) < bound; --i) {
        std::swap(candidates[i - 1], candidates[uniform_below(rng, i)]);
        g.add_edge(v, candidates[i - 1]);
      }
      if (!candidates.empty() && g.degree(v) < bound)
        g.add_edge(v, candidates[0]);
      if (g.degree(v) >= bound)
        break;
    }
  }

  int satisfied = 0;
  for (Vertex v = 0; v < n; ++v)
    satisfied += g.degree(v) >= bound;
  if (satisfied < high_count)
    throw InternalError("gen_dirac_deficient produced only " + std::to_string(satisfied) +
                        " vertices of degree >= " + std::to_string(bound));
  return g;
}

} // namespace mcc
