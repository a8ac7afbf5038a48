#pragma once

#include <cstddef>
#include <cstdint>

#include "mcc/cycle_cover.hpp"
#include "mcc/graph.hpp"

namespace mcc {

struct DpOptions {
  /// Largest vertex count accepted; the table takes 2^n * n^2 * 2 bytes.
  int max_vertices = 24;
};

struct DpResult {
  int size = 0;
  CycleCover cover;
  /// Recurrence candidates examined while filling the table.
  std::uint64_t evaluations = 0;
};

/// Bytes needed for the table of an n-vertex graph.
std::uint64_t dp_table_bytes(int n);

/**
 * Exact minimum cycle cover by subset dynamic programming.
 *
 * M[X, s, t, p2] is the fewest elements in a family of disjoint cycles plus
 * one open s-t path covering exactly X, the path counting as one element.
 * p2 marks a path of exactly two vertices; with s != t and p2 = 0 the path has
 * at least three vertices, so closing it with the edge st gives a cycle of
 * length >= 3. Extending a path appends t, closing a path into a cycle opens
 * a new trivial path at t. The answer closes the last path instead of opening
 * one at an auxiliary isolated vertex.
 *
 * Throws ResourceRefusal when g has more than options.max_vertices vertices.
 */
DpResult mcc_exact_dp(const Graph &g, const DpOptions &options = {});

/// Closed-form candidate count of the recurrence on K_n: 2^(n-2) * (n^3 - n).
double dp_closed_form_count(int n);

} // namespace mcc
