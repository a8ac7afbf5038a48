#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "mcc/closure.hpp"
#include "mcc/cycle_cover.hpp"
#include "mcc/graph.hpp"
#include "mcc/kernel.hpp"

namespace mcc {

struct SolveConfig {
  /// Closure offset; unwinding is only guaranteed for ell >= 0.
  int ell = 0;
  int max_dp_vertices = 24;
  /// Re-verify the certificate and cross-check the oracle when n <= 10.
  bool self_check = false;
};

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

struct SolveReport {
  int n = 0;
  std::size_t m = 0;
  int co_deg = 0;
  std::size_t closure_edges_added = 0;
  int cover_budget_used = 0;
  int s_size = 0;
  int kernel_vertices = 0;
  int mcc = 0;
  CycleCover certificate;
  std::vector<StageTiming> stage_timings;
  bool verified = false;
  /// Set when the kernel exceeded the DP ceiling and the closed graph was
  /// solved directly.
  bool dp_on_closure = false;

  double total_seconds() const;
};

/// Everything up to (not including) the exact solve.
struct Reduction {
  int co_deg = 0;
  ClosureResult closure;
  int budget = 0;
  CoVertexCover s;
  bool s_substituted = false; // empty cover replaced by {smallest vertex}
  Kernel kernel;
  std::vector<StageTiming> stage_timings;
};

/// co-degeneracy, closure, budgeted co-vertex cover, kernel.
Reduction reduce_instance(const Graph &g, const SolveConfig &config = {});

/**
 * Exact minimum cycle cover with a certificate in the input's own ids:
 * reduce, solve the kernel by subset DP, lift through the kernel, unwind
 * through the closure, verify.
 *
 * Throws ResourceRefusal when neither the kernel nor the closed graph fits
 * under the DP ceiling, and InternalError (BudgetExceeded included) on any
 * broken invariant.
 */
SolveReport solve_pipeline(const Graph &g, const SolveConfig &config = {});

/// JSON with SolveReport's field names; certificate ids are shifted by
/// `id_offset` (1 for DIMACS input). The certificate is omitted unless
/// `with_certificate` is set.
nlohmann::json to_json(const SolveReport &report, int id_offset, bool with_certificate = true);

/// Reads a certificate back from report JSON, undoing `id_offset`.
CycleCover certificate_from_json(const nlohmann::json &report, int id_offset);

} // namespace mcc
