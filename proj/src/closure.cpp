#include "mcc/closure.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "mcc/errors.hpp"

namespace mcc {

namespace {

std::string edge_name(Vertex u, Vertex v) {
  return std::to_string(u) + "-" + std::to_string(v);
}

} // namespace

ClosureResult compute_closure(const Graph &g, int ell) {
  const int n = g.order();
  const long threshold = static_cast<long>(n) + ell;
  ClosureResult result{g, ClosureTrace{ell, {}}};
  Graph &h = result.graph;

  // queued[u] holds v > u once (u, v) has entered the queue.
  std::vector<VertexSet> queued(n, VertexSet(n));
  std::deque<std::pair<Vertex, Vertex>> queue;

  auto enqueue_incident = [&](Vertex u) {
    VertexSet non = ~h.neighbourhood(u);
    non.reset(u);
    for (auto x = non.find_first(); x != VertexSet::npos; x = non.find_next(x)) {
      Vertex a = std::min<Vertex>(u, x), b = std::max<Vertex>(u, x);
      if (h.degree(a) + h.degree(b) >= threshold && !queued[a].test(b)) {
        queued[a].set(b);
        queue.emplace_back(a, b);
      }
    }
  };

  for (Vertex u = 0; u < n; ++u) {
    VertexSet non = ~h.neighbourhood(u);
    for (auto v = non.find_next(u); v != VertexSet::npos; v = non.find_next(v)) {
      if (h.degree(u) + h.degree(v) >= threshold) {
        queued[u].set(v);
        queue.emplace_back(u, static_cast<Vertex>(v));
      }
    }
  }

  while (!queue.empty()) {
    auto [u, v] = queue.front();
    queue.pop_front();
    if (h.adjacent(u, v))
      continue;
    result.trace.steps.push_back({u, v, h.degree(u), h.degree(v)});
    h.add_edge(u, v);
    enqueue_incident(u);
    enqueue_incident(v);
  }
  return result;
}

Graph apply_trace(const Graph &g, const ClosureTrace &trace) {
  Graph h = g;
  for (const auto &s : trace.steps)
    h.add_edge(s.u, s.v);
  return h;
}

bool is_closed(const Graph &g, int ell) {
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    VertexSet non = ~g.neighbourhood(u);
    for (auto v = non.find_next(u); v != VertexSet::npos; v = non.find_next(v))
      if (g.degree(u) + g.degree(static_cast<Vertex>(v)) >= n + ell)
        return false;
  }
  return true;
}

bool trace_is_valid(const Graph &g, const ClosureTrace &trace) {
  Graph h = g;
  const int n = g.order();
  for (const auto &s : trace.steps) {
    if (s.u == s.v || h.adjacent(s.u, s.v))
      return false;
    if (s.deg_u_before != h.degree(s.u) || s.deg_v_before != h.degree(s.v))
      return false;
    if (s.deg_u_before + s.deg_v_before < n + trace.ell)
      return false;
    h.add_edge(s.u, s.v);
  }
  return is_closed(h, trace.ell);
}

RewireContext make_rewire_context(const Graph &before, const std::vector<Cycle> &cycles,
                                  std::size_t path_cycle, std::vector<Vertex> path) {
  const int n = before.order();
  const auto h = path.size();
  const Vertex u = path.front();
  const Vertex w = path.back();

  RewireContext ctx{std::move(path), VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)};
  const auto &p = ctx.path;

  for (std::size_t i = 2; i + 1 < h; ++i) {
    if (before.adjacent(p[i - 1], w))
      ctx.x_path.set(p[i]);
    if (before.adjacent(u, p[i]))
      ctx.y_path.set(p[i]);
  }

  VertexSet on_path(n);
  for (Vertex v : p)
    on_path.set(v);

  std::vector<Vertex> pred(n, -1);
  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    if (ci == path_cycle)
      continue;
    const auto &c = cycles[ci];
    for (std::size_t j = 0; j < c.size(); ++j)
      pred[c[(j + 1) % c.size()]] = c[j];
  }

  const auto &nw = before.neighbourhood(w);
  for (auto y = nw.find_first(); y != VertexSet::npos; y = nw.find_next(y))
    if (!on_path.test(y))
      ctx.x_cycles.set(pred[y]);
  ctx.y_cycles = before.neighbourhood(u) - on_path;
  return ctx;
}

namespace {

class CoverState {
public:
  CoverState(int n, std::vector<Cycle> cycles)
      : cycles_(std::move(cycles)), cycle_of_(n, -1), pos_(n, -1) {
    for (std::size_t i = 0; i < cycles_.size(); ++i)
      index(i);
  }

  const std::vector<Cycle> &cycles() const { return cycles_; }
  std::size_t cycle_of(Vertex v) const { return static_cast<std::size_t>(cycle_of_[v]); }
  std::size_t pos(Vertex v) const { return static_cast<std::size_t>(pos_[v]); }

  void replace(std::size_t i, Cycle c) {
    cycles_[i] = std::move(c);
    index(i);
  }

  void erase(std::size_t i) {
    if (i + 1 != cycles_.size()) {
      cycles_[i] = std::move(cycles_.back());
      cycles_.pop_back();
      index(i);
    } else {
      cycles_.pop_back();
    }
  }

  std::vector<Cycle> release() { return std::move(cycles_); }

private:
  void index(std::size_t i) {
    const auto &c = cycles_[i];
    for (std::size_t j = 0; j < c.size(); ++j) {
      cycle_of_[c[j]] = static_cast<int>(i);
      pos_[c[j]] = static_cast<int>(j);
    }
  }

  std::vector<Cycle> cycles_;
  std::vector<int> cycle_of_;
  std::vector<int> pos_;
};

// The cycle through u and w opened at edge uw, starting at u.
std::vector<Vertex> open_at(const Cycle &c, std::size_t pu, std::size_t pw) {
  const auto len = c.size();
  const bool w_follows = (pu + 1) % len == pw;
  std::vector<Vertex> path;
  path.reserve(len);
  for (std::size_t k = 0; k < len; ++k)
    path.push_back(w_follows ? c[(pu + len - k) % len] : c[(pu + k) % len]);
  return path;
}

} // namespace

CycleCover unwind_cover(const Graph &g, const ClosureTrace &trace, const CycleCover &cover) {
  Graph current = apply_trace(g, trace);
  if (auto verdict = verify_cover(current, cover); !verdict)
    throw PreconditionError("cover does not verify against the closure: " + verdict.detail);

  CoverState state(g.order(), cover.cycles);

  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    const auto &step = *it;
    current.remove_edge(step.u, step.v);
    if (current.degree(step.u) != step.deg_u_before || current.degree(step.v) != step.deg_v_before)
      throw InternalError("closure trace degrees disagree with replay at edge " +
                          edge_name(step.u, step.v));

    const auto ci = state.cycle_of(step.u);
    if (state.cycle_of(step.v) != ci)
      continue;
    const auto &c = state.cycles()[ci];
    const auto len = c.size();
    const auto pu = state.pos(step.u), pw = state.pos(step.v);
    if (len < 3 || ((pu + 1) % len != pw && (pw + 1) % len != pu))
      continue;

    auto ctx = make_rewire_context(current, state.cycles(), ci, open_at(c, pu, pw));
    const auto &path = ctx.path;
    const Vertex u = path.front(), w = path.back();
    const auto x = ctx.x(), y = ctx.y();
    if (static_cast<int>(x.count()) != current.degree(w) - 1 ||
        static_cast<int>(y.count()) != current.degree(u) - 1)
      throw InternalError("rewire set sizes disagree with degrees at edge " + edge_name(u, w));

    const auto pivot = (x & y).find_first();
    if (pivot == VertexSet::npos)
      throw InternalError("no rewire pivot for closure edge " + edge_name(u, w) +
                          " (degree sum " + std::to_string(current.degree(u) + current.degree(w)) +
                          ", n = " + std::to_string(g.order()) + ")");

    if (ctx.x_path.test(pivot)) {
      // Close the path through v^{q-1}w and v^q u, reversing the tail.
      const auto q = static_cast<std::size_t>(
          std::find(path.begin(), path.end(), static_cast<Vertex>(pivot)) - path.begin());
      Cycle rewired(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(q));
      rewired.insert(rewired.end(), path.rbegin(),
                     path.rbegin() + static_cast<std::ptrdiff_t>(path.size() - q));
      state.replace(ci, std::move(rewired));
    } else {
      // Splice the path into the pivot's cycle between pivot and its successor.
      const auto cj = state.cycle_of(static_cast<Vertex>(pivot));
      const auto &other = state.cycles()[cj];
      const auto q = state.pos(static_cast<Vertex>(pivot));
      Cycle merged;
      merged.reserve(other.size() + path.size());
      for (std::size_t k = 1; k <= other.size(); ++k)
        merged.push_back(other[(q + k) % other.size()]);
      merged.insert(merged.end(), path.begin(), path.end());
      state.replace(ci, std::move(merged));
      state.erase(cj);
    }
  }

  CycleCover out = canonical(CycleCover{state.release()});
  if (auto verdict = verify_cover(g, out); !verdict)
    throw InternalError("unwound cover fails verification: " + verdict.detail);
  return out;
}

} // namespace mcc
