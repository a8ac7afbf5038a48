#pragma once

#include <cstdint>
#include <random>

#include "mcc/graph.hpp"

namespace mcc {

/// Generator parameters; every generator is a pure function of them.
struct GenSpec {
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
};

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound); identical across standard libraries.
std::uint64_t uniform_below(Rng &rng, std::uint64_t bound);

/// G(n, p) with edges drawn in lexicographic pair order.
Graph random_graph(int n, double p, std::uint64_t seed);

/**
 * Complement of a random k-degenerate graph: vertices are visited in random
 * order and each picks min(k, i) distinct earlier vertices as complement
 * neighbours. The result has co-degeneracy at most k.
 */
Graph gen_co_degenerate(int n, int k, std::uint64_t seed);

/**
 * Graph in which at least n - k vertices have degree >= ceil(n/2). The n - k
 * high vertices get a G(n-k, 1/2) graph, then every deficient high vertex is
 * joined to random vertices until it meets the bound. Each of the k low
 * vertices is attached to 0..2 random vertices.
 */
Graph gen_dirac_deficient(int n, int k, std::uint64_t seed);

inline Graph gen_co_degenerate(const GenSpec &s) { return gen_co_degenerate(s.n, s.k, s.seed); }
inline Graph gen_dirac_deficient(const GenSpec &s) { return gen_dirac_deficient(s.n, s.k, s.seed); }

} // namespace mcc
