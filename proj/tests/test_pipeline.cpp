#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "mcc/errors.hpp"
#include "mcc/generators.hpp"
#include "mcc/io.hpp"
#include "mcc/oracle.hpp"
#include "mcc/pipeline.hpp"
#include "support.hpp"

using namespace mcc;

TEST_CASE("small solves") {
  auto k6 = solve_pipeline(complete_graph(6));
  CHECK(k6.mcc == 1);
  CHECK(k6.verified);
  CHECK(k6.co_deg == 0);

  auto c5 = solve_pipeline(cycle_graph(5));
  CHECK(c5.mcc == 1);
  CHECK(c5.closure_edges_added == 0);
  CHECK(c5.certificate == CycleCover{{{0, 1, 2, 3, 4}}});

  auto p3 = solve_pipeline(path_graph(3));
  CHECK(p3.mcc == 3);

  auto empty = solve_pipeline(Graph(0));
  CHECK(empty.mcc == 0);
  CHECK(empty.certificate.empty());

  auto isolated = solve_pipeline(Graph(4));
  CHECK(isolated.mcc == 4);
}

TEST_CASE("pipeline agrees with the oracle") {
  for (const auto &g : test::load_atlas(6)) {
    auto report = solve_pipeline(g);
    REQUIRE(report.mcc == mcc_bruteforce(g).size);
    REQUIRE(verify_cover(g, report.certificate));
  }
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 300; ++iter) {
    int n = 7 + static_cast<int>(rng() % 3);
    double p = 0.2 + 0.7 * static_cast<double>(rng() % 1000) / 1000.0;
    auto g = test::random_graph_rng(n, p, rng);
    auto report = solve_pipeline(g);
    REQUIRE(report.mcc == mcc_bruteforce(g).size);
    REQUIRE(static_cast<int>(report.certificate.size()) == report.mcc);
    REQUIRE(verify_cover(g, report.certificate));
  }
}

TEST_CASE("ell > 0 still gives the optimum on small graphs") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 100; ++iter) {
    auto g = test::random_graph_rng(8, 0.6, rng);
    SolveConfig cfg;
    cfg.ell = 1;
    auto report = solve_pipeline(g, cfg);
    CHECK(verify_cover(g, report.certificate));
    CHECK(report.mcc >= mcc_bruteforce(g).size);
  }
}

TEST_CASE("certificate survives a file round trip") {
  auto dir = std::filesystem::temp_directory_path();
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 30; ++iter) {
    auto g = gen_co_degenerate(30 + static_cast<int>(rng() % 30), static_cast<int>(rng() % 4), rng());
    auto path = dir / ("mcc_roundtrip_" + std::to_string(iter) + ".dimacs");
    {
      std::ofstream out(path);
      out << write_graph(g, Format::dimacs);
    }
    auto parsed = parse_graph(read_file(path.string()), Format::dimacs);
    auto report = solve_pipeline(parsed);
    auto json = to_json(report, 1);
    auto text = json.dump();
    auto cover = certificate_from_json(nlohmann::json::parse(text), 1);
    auto fresh = parse_graph(read_file(path.string()), Format::dimacs);
    CHECK(verify_cover(fresh, cover));
    CHECK(static_cast<int>(cover.size()) == json["mcc"].get<int>());
    std::filesystem::remove(path);
  }
}

TEST_CASE("kernel size stays within 6k+3") {
  for (int n : {50, 100, 200})
    for (int k = 0; k <= 4; ++k)
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        auto g = gen_co_degenerate(n, k, seed);
        auto red = reduce_instance(g);
        CHECK(red.co_deg <= k);
        CHECK(static_cast<int>(red.s.vertices.size()) <= red.budget);
        CHECK(red.kernel.reduced.order() <= 6 * red.co_deg + 3);
      }
}

TEST_CASE("resource ceiling") {
  auto g = cycle_graph(12);
  g.remove_edge(0, 1);
  SolveConfig cfg;
  cfg.max_dp_vertices = 2;
  CHECK_THROWS_AS(solve_pipeline(g, cfg), ResourceRefusal);
}

TEST_CASE("json layout") {
  auto report = solve_pipeline(cycle_graph(4));
  auto j = to_json(report, 1);
  for (const char *key : {"n", "m", "co_deg", "closure_edges_added", "cover_budget_used", "s_size",
                          "kernel_vertices", "mcc", "certificate", "stage_timings", "verified"})
    CHECK(j.contains(key));
  CHECK(j["certificate"][0][0] == 1);
  CHECK_FALSE(to_json(report, 1, false).contains("certificate"));
}
