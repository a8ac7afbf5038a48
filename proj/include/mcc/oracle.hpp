#pragma once

#include <optional>

#include "mcc/cycle_cover.hpp"
#include "mcc/graph.hpp"

namespace mcc {

inline constexpr int oracle_max_vertices = 12;

struct OracleResult {
  int size = 0;
  CycleCover cover;
};

/**
 * Minimum cycle cover by enumerating every set partition of V (restricted
 * growth strings). A block is feasible when it is a single vertex or induces
 * a Hamiltonian graph on >= 3 vertices. Among minimum covers the
 * lexicographically least canonical one is returned.
 *
 * Refuses graphs with more than oracle_max_vertices vertices.
 */
OracleResult mcc_bruteforce(const Graph &g);

/// Lexicographically least canonical Hamiltonian cycle of g[block], found by
/// enumerating orderings with the first vertex fixed.
std::optional<Cycle> hamiltonian_cycle_bruteforce(const Graph &g, const std::vector<Vertex> &block);

bool is_hamiltonian_bruteforce(const Graph &g);

} // namespace mcc
