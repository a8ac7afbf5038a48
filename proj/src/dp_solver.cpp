#include "mcc/dp_solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "mcc/errors.hpp"

namespace mcc {

namespace {

using Mask = std::uint32_t;
using Value = std::uint8_t;
constexpr Value infeasible = 255;
constexpr int hard_limit = 30;

class Table {
public:
  Table(int n) : n_(static_cast<std::size_t>(n)), cells_(dp_table_bytes(n), infeasible) {}

  Value &at(Mask x, int s, int t, int p2) { return cells_[index(x, s, t, p2)]; }
  Value at(Mask x, int s, int t, int p2) const { return cells_[index(x, s, t, p2)]; }

private:
  std::size_t index(Mask x, int s, int t, int p2) const {
    return ((static_cast<std::size_t>(x) * n_ + static_cast<std::size_t>(s)) * n_ +
            static_cast<std::size_t>(t)) * 2 + static_cast<std::size_t>(p2);
  }

  std::size_t n_;
  std::vector<Value> cells_;
};

int lowest(Mask m) { return std::countr_zero(m); }

} // namespace

std::uint64_t dp_table_bytes(int n) {
  return (std::uint64_t{1} << n) * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) * 2;
}

double dp_closed_form_count(int n) {
  const double nn = n;
  return std::ldexp(1.0, n - 2) * (nn * nn * nn - nn);
}

DpResult mcc_exact_dp(const Graph &g, const DpOptions &options) {
  const int n = g.order();
  DpResult result;
  if (n == 0)
    return result;
  if (n > options.max_vertices || n > hard_limit)
    throw ResourceRefusal("subset DP refused for " + std::to_string(n) + " vertices (limit " +
                          std::to_string(std::min(options.max_vertices, hard_limit)) +
                          "): table would need " +
                          std::to_string(dp_table_bytes(n) / (1024 * 1024)) + " MiB");

  std::vector<Mask> adj(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (g.adjacent(u, v))
        adj[u] |= Mask{1} << v;

  const Mask full = (Mask{1} << n) - 1;
  std::vector<Value> close_min;
  std::optional<Table> storage;
  try {
    storage.emplace(n);
    close_min.assign(std::size_t{full} + 1, infeasible);
  } catch (const std::bad_alloc &) {
    throw ResourceRefusal("subset DP could not allocate " +
                          std::to_string(dp_table_bytes(n) / (1024 * 1024)) + " MiB for " +
                          std::to_string(n) + " vertices");
  }
  Table &m = *storage;
  std::uint64_t evals = 0;

  for (Mask x = 1; x <= full; ++x) {
    if (std::has_single_bit(x)) {
      const int v = lowest(x);
      m.at(x, v, v, 0) = 1;
      close_min[x] = 1;
      continue;
    }
    for (Mask ts = x; ts; ts &= ts - 1) {
      const int t = lowest(ts);
      const Mask prev = x ^ (Mask{1} << t);

      // Close the previous path, open a trivial one at t.
      if (close_min[prev] != infeasible)
        m.at(x, t, t, 0) = static_cast<Value>(close_min[prev] + 1);

      for (Mask ss = prev; ss; ss &= ss - 1) {
        const int s = lowest(ss);
        if (adj[s] >> t & 1) {
          ++evals;
          m.at(x, s, t, 1) = m.at(prev, s, s, 0);
        }
        Value best = infeasible;
        for (Mask cand = adj[t] & prev & ~(Mask{1} << s); cand; cand &= cand - 1) {
          const int tp = lowest(cand);
          ++evals;
          best = std::min({best, m.at(prev, s, tp, 0), m.at(prev, s, tp, 1)});
        }
        m.at(x, s, t, 0) = best;
      }
    }

    Value best = infeasible;
    for (Mask ss = x; ss; ss &= ss - 1) {
      const int s = lowest(ss);
      for (Mask cand = (adj[s] & x) | (Mask{1} << s); cand; cand &= cand - 1) {
        ++evals;
        best = std::min(best, m.at(x, s, lowest(cand), 0));
      }
    }
    close_min[x] = best;
  }

  result.size = close_min[full];
  result.evaluations = evals;
  if (result.size == infeasible)
    throw InternalError("subset DP found no cycle cover (trivial cycles always exist)");

  // Walk back from the final closing step, re-deriving each choice.
  auto find_closing = [&](Mask x, Value target, int &s_out, int &t_out) {
    for (Mask ss = x; ss; ss &= ss - 1) {
      const int s = lowest(ss);
      for (Mask cand = (adj[s] & x) | (Mask{1} << s); cand; cand &= cand - 1) {
        const int t = lowest(cand);
        if (m.at(x, s, t, 0) == target) {
          s_out = s;
          t_out = t;
          return;
        }
      }
    }
    throw InternalError("subset DP reconstruction lost the closing step");
  };

  Mask x = full;
  int s = 0, t = 0, p2 = 0;
  Value value = static_cast<Value>(result.size);
  find_closing(x, value, s, t);
  std::vector<Vertex> open;
  while (true) {
    open.push_back(t);
    if (s == t) {
      result.cover.cycles.emplace_back(open.rbegin(), open.rend());
      open.clear();
      if (std::has_single_bit(x))
        break;
      x ^= Mask{1} << t;
      --value;
      find_closing(x, value, s, t);
      p2 = 0;
      continue;
    }
    const Mask prev = x ^ (Mask{1} << t);
    if (p2) {
      x = prev;
      t = s;
      p2 = 0;
      continue;
    }
    bool found = false;
    for (Mask cand = adj[t] & prev & ~(Mask{1} << s); cand && !found; cand &= cand - 1) {
      const int tp = lowest(cand);
      for (int q = 0; q < 2 && !found; ++q) {
        if (m.at(prev, s, tp, q) == value) {
          t = tp;
          p2 = q;
          found = true;
        }
      }
    }
    if (!found)
      throw InternalError("subset DP reconstruction lost an extension step");
    x = prev;
  }

  result.cover = canonical(std::move(result.cover));
  if (auto verdict = verify_cover(g, result.cover); !verdict)
    throw InternalError("subset DP certificate fails verification: " + verdict.detail);
  if (static_cast<int>(result.cover.size()) != result.size)
    throw InternalError("subset DP certificate size disagrees with table value");
  return result;
}

} // namespace mcc
