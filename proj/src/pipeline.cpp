#include "mcc/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <type_traits>
#include <string>
#include <utility>

#include "mcc/dp_solver.hpp"
#include "mcc/errors.hpp"
#include "mcc/oracle.hpp"

namespace mcc {

namespace {

class StageClock {
public:
  explicit StageClock(std::vector<StageTiming> &sink) : sink_(sink) {}

  template <typename F> auto run(const char *stage, F &&f) {
    const auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      record(stage, start);
    } else {
      auto value = f();
      record(stage, start);
      return value;
    }
  }

private:
  void record(const char *stage, std::chrono::steady_clock::time_point start) {
    const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
    sink_.push_back({stage, d.count()});
  }

  std::vector<StageTiming> &sink_;
};

} // namespace

double SolveReport::total_seconds() const {
  double total = 0;
  for (const auto &t : stage_timings)
    total += t.seconds;
  return total;
}

Reduction reduce_instance(const Graph &g, const SolveConfig &config) {
  Reduction r;
  StageClock clock(r.stage_timings);
  r.co_deg = clock.run("co_degeneracy", [&] { return co_degeneracy(g).k; });
  r.closure = clock.run("closure", [&] { return compute_closure(g, config.ell); });
  r.budget = std::max(0, 2 * r.co_deg + config.ell + 1);
  if (g.order() == 0)
    return r;
  r.s = clock.run("co_vertex_cover",
                  [&] { return min_co_vertex_cover(r.closure.graph, r.budget); });
  if (r.s.empty()) {
    r.s.vertices = {0};
    r.s_substituted = true;
  }
  r.kernel = clock.run("kernelize", [&] { return kernelize(r.closure.graph, r.s); });
  return r;
}

SolveReport solve_pipeline(const Graph &g, const SolveConfig &config) {
  SolveReport report;
  report.n = g.order();
  report.m = g.size();
  if (g.order() == 0) {
    report.verified = true;
    return report;
  }

  Reduction red = reduce_instance(g, config);
  report.stage_timings = std::move(red.stage_timings);
  StageClock clock(report.stage_timings);
  const Graph &closed = red.closure.graph;

  report.co_deg = red.co_deg;
  report.closure_edges_added = red.closure.trace.steps.size();
  report.cover_budget_used = red.budget;
  report.s_size = static_cast<int>(red.s.size());
  report.kernel_vertices = red.kernel.reduced.order();

  const DpOptions dp_options{config.max_dp_vertices};
  DpResult dp;
  CycleCover closed_cover;
  if (report.kernel_vertices <= config.max_dp_vertices) {
    dp = clock.run("dp", [&] { return mcc_exact_dp(red.kernel.reduced, dp_options); });
    closed_cover = clock.run("lift_kernel",
                             [&] { return lift_kernel_cover(closed, red.kernel, dp.cover); });
  } else if (closed.order() <= config.max_dp_vertices) {
    dp = clock.run("dp", [&] { return mcc_exact_dp(closed, dp_options); });
    closed_cover = dp.cover;
    report.dp_on_closure = true;
  } else {
    throw ResourceRefusal("dp stage: kernel has " + std::to_string(report.kernel_vertices) +
                          " vertices (|S| = " + std::to_string(report.s_size) +
                          "), above the DP ceiling of " +
                          std::to_string(config.max_dp_vertices));
  }

  report.certificate = clock.run(
      "unwind_closure", [&] { return unwind_cover(g, red.closure.trace, closed_cover); });

  clock.run("verify", [&] {
    if (auto verdict = verify_cover(g, report.certificate); !verdict)
      throw InternalError("final certificate fails verification: " + verdict.detail);
  });
  if (static_cast<int>(report.certificate.size()) != dp.size)
    throw InternalError("certificate has " + std::to_string(report.certificate.size()) +
                        " cycles but the reduced instance needs " + std::to_string(dp.size));
  report.mcc = dp.size;
  report.verified = true;

  if (config.self_check && g.order() <= 10) {
    const auto truth = mcc_bruteforce(g);
    if (truth.size != report.mcc)
      throw InternalError("self-check: pipeline answer " + std::to_string(report.mcc) +
                          " differs from brute force " + std::to_string(truth.size));
  }
  return report;
}

nlohmann::json to_json(const SolveReport &report, int id_offset, bool with_certificate) {
  nlohmann::json timings = nlohmann::json::object();
  for (const auto &t : report.stage_timings)
    timings[t.stage] = t.seconds;
  nlohmann::json j = {
      {"n", report.n},
      {"m", report.m},
      {"co_deg", report.co_deg},
      {"closure_edges_added", report.closure_edges_added},
      {"cover_budget_used", report.cover_budget_used},
      {"s_size", report.s_size},
      {"kernel_vertices", report.kernel_vertices},
      {"mcc", report.mcc},
      {"stage_timings", timings},
      {"verified", report.verified},
  };
  if (with_certificate) {
    nlohmann::json cycles = nlohmann::json::array();
    for (const auto &c : report.certificate.cycles) {
      nlohmann::json ids = nlohmann::json::array();
      for (Vertex v : c)
        ids.push_back(v + id_offset);
      cycles.push_back(std::move(ids));
    }
    j["certificate"] = std::move(cycles);
  }
  return j;
}

CycleCover certificate_from_json(const nlohmann::json &report, int id_offset) {
  CycleCover cover;
  for (const auto &c : report.at("certificate")) {
    Cycle cycle;
    for (const auto &v : c)
      cycle.push_back(v.get<int>() - id_offset);
    cover.cycles.push_back(std::move(cycle));
  }
  return cover;
}

} // namespace mcc
