#pragma once

#include <vector>

#include "mcc/cycle_cover.hpp"
#include "mcc/graph.hpp"

namespace mcc {

/// One edge added by the closure, with both endpoint degrees in the graph
/// just before the addition.
struct ClosureStep {
  Vertex u = 0; // u < v
  Vertex v = 0;
  int deg_u_before = 0;
  int deg_v_before = 0;

  friend bool operator==(const ClosureStep &, const ClosureStep &) = default;
};

struct ClosureTrace {
  int ell = 0;
  std::vector<ClosureStep> steps;
};

struct ClosureResult {
  Graph graph;
  ClosureTrace trace;
};

/**
 * (n + ell)-closure: joins nonadjacent pairs whose degree sum is at least
 * n + ell until none remains.
 *
 * Pairs are processed from a FIFO queue seeded with the initially eligible
 * pairs in lexicographic order. After an addition only pairs touching one of
 * the two endpoints are rescanned, since eligibility can only appear when an
 * endpoint's degree grows.
 */
ClosureResult compute_closure(const Graph &g, int ell = 0);

/// g plus every edge of the trace.
Graph apply_trace(const Graph &g, const ClosureTrace &trace);

/// True when no nonadjacent pair has degree sum >= n + ell.
bool is_closed(const Graph &g, int ell = 0);

/// Checks both trace invariants (per-step eligibility, final fixpoint).
bool trace_is_valid(const Graph &g, const ClosureTrace &trace);

/**
 * Rewiring state for one removed closure edge uw, built against the graph
 * just before uw was added. `path` is the cycle that used uw, opened at that
 * edge so path.front() == u and path.back() == w.
 *
 * The four sets are those of the stability argument for bounded cycle covers:
 *  - x_path:   path[q] (2 <= q <= h-2, 0-based) whose predecessor is adjacent to w
 *  - x_cycles: vertices of other cycles whose successor is adjacent to w
 *  - y_path:   path[q] (2 <= q <= h-2) adjacent to u
 *  - y_cycles: vertices of other cycles adjacent to u
 * A trivial cycle is its own successor.
 */
struct RewireContext {
  std::vector<Vertex> path;
  VertexSet x_path;
  VertexSet x_cycles;
  VertexSet y_path;
  VertexSet y_cycles;

  VertexSet x() const { return x_path | x_cycles; }
  VertexSet y() const { return y_path | y_cycles; }
};

/**
 * Builds the rewire sets. `cycles` is the current cover of the graph that
 * still contains uw; `path_cycle` indexes the cycle being opened. `before`
 * must not contain the edge path.front()-path.back().
 */
RewireContext make_rewire_context(const Graph &before, const std::vector<Cycle> &cycles,
                                  std::size_t path_cycle, std::vector<Vertex> path);

/**
 * Maps a cycle cover of apply_trace(g, trace) back to a cover of g of no
 * larger size, undoing trace steps in reverse order.
 *
 * Throws PreconditionError if `cover` does not verify against the closure and
 * InternalError if a rewire pivot is missing (a trace or adjacency bug).
 */
CycleCover unwind_cover(const Graph &g, const ClosureTrace &trace, const CycleCover &cover);

} // namespace mcc
