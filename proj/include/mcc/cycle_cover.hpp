#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mcc/graph.hpp"

namespace mcc {

using Cycle = std::vector<Vertex>;

/**
 * A set of vertex-disjoint cycles covering every vertex. Each cycle is listed
 * without repeating its first vertex; a single vertex is a trivial cycle and
 * two-vertex cycles are not allowed.
 */
struct CycleCover {
  std::vector<Cycle> cycles;

  std::size_t size() const { return cycles.size(); }
  bool empty() const { return cycles.empty(); }

  friend bool operator==(const CycleCover &, const CycleCover &) = default;
  friend auto operator<=>(const CycleCover &, const CycleCover &) = default;
};

/// Rotates the minimum vertex first, orients towards its smaller neighbour.
Cycle canonical_cycle(Cycle cycle);

/// Canonical form of every cycle, cycles sorted by first vertex.
CycleCover canonical(CycleCover cover);

enum class CoverViolation {
  none,
  empty_cycle,
  two_cycle,
  vertex_out_of_range,
  repeated_vertex,
  uncovered_vertex,
  missing_edge,
};

const char *to_string(CoverViolation v);

struct CoverVerdict {
  CoverViolation violation = CoverViolation::none;
  /// Index of the offending cycle, or -1 when no single cycle is at fault
  /// (an uncovered vertex).
  int cycle_index = -1;
  std::string detail;

  bool ok() const { return violation == CoverViolation::none; }
  explicit operator bool() const { return ok(); }
};

/// Checks every cover invariant against g, reporting the first violation.
CoverVerdict verify_cover(const Graph &g, const CycleCover &cover);

/// Applies `map` to every vertex; used when moving between id spaces.
CycleCover relabel(const CycleCover &cover, const std::vector<Vertex> &map);

} // namespace mcc
