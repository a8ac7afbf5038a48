#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mcc/closure.hpp"
#include "mcc/errors.hpp"
#include "mcc/generators.hpp"
#include "mcc/graph.hpp"
#include "mcc/io.hpp"
#include "mcc/kernel.hpp"
#include "mcc/oracle.hpp"
#include "mcc/pipeline.hpp"

using namespace mcc;
using nlohmann::json;

namespace {

struct Options {
  std::string input = "-";
  std::string format = "dimacs";
  std::string output = "-";
  std::uint64_t seed = 0;
  int max_dp_vertices = 24;
  bool emit_certificate = false;
  bool self_check = false;
  int ell = 0;
};

struct GenOptions {
  std::string family = "co-degenerate";
  int n = 0;
  int k = 0;
};

struct BenchOptions {
  std::string family = "co-degenerate";
  std::vector<int> sizes{200, 400, 800};
  int k = 2;
  int seeds = 3;
  int jobs = 1;
};

struct Loaded {
  Graph graph;
  Format format;
};

Loaded load(const Options &opt) {
  const auto format = parse_format(opt.format);
  std::string text;
  if (opt.input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    text = read_file(opt.input);
  }
  std::vector<std::string> warnings;
  auto g = parse_graph(text, format, &warnings);
  for (const auto &w : warnings)
    std::cerr << "warning: " << w << '\n';
  return {std::move(g), format};
}

void emit(const Options &opt, const std::string &text) {
  if (opt.output == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(opt.output);
  if (!out)
    throw InputError("cannot write '" + opt.output + "'");
  out << text << '\n';
}

json shifted(const std::vector<Vertex> &ids, int offset) {
  json out = json::array();
  for (Vertex v : ids)
    out.push_back(v + offset);
  return out;
}

Graph generate(const std::string &family, int n, int k, std::uint64_t seed) {
  if (family == "co-degenerate")
    return gen_co_degenerate(n, k, seed);
  if (family == "dirac-deficient")
    return gen_dirac_deficient(n, k, seed);
  throw InputError("unknown family '" + family + "' (co-degenerate, dirac-deficient)");
}

SolveConfig config_of(const Options &opt) {
  SolveConfig cfg;
  cfg.ell = opt.ell;
  cfg.max_dp_vertices = opt.max_dp_vertices;
  cfg.self_check = opt.self_check;
  return cfg;
}

int cmd_solve(const Options &opt) {
  if (opt.ell != 0)
    std::cerr << "warning: --ell " << opt.ell
              << ": certificate unwinding is only guaranteed for ell = 0\n";
  auto [g, format] = load(opt);
  auto report = solve_pipeline(g, config_of(opt));
  auto j = to_json(report, id_offset(format), opt.emit_certificate);
  if (opt.self_check)
    j["self_check"] = g.order() <= 10 ? "oracle" : "verify";
  emit(opt, j.dump(2));
  return 0;
}

int cmd_codeg(const Options &opt) {
  auto [g, format] = load(opt);
  auto d = co_degeneracy(g);
  json j{{"n", g.order()}, {"co_deg", d.k}, {"ordering", shifted(d.ordering, id_offset(format))}};
  emit(opt, j.dump(2));
  return 0;
}

int cmd_closure(const Options &opt) {
  auto [g, format] = load(opt);
  auto closure = compute_closure(g, opt.ell);
  const int off = id_offset(format);
  json added = json::array();
  for (const auto &step : closure.trace.steps)
    added.push_back({step.u + off, step.v + off});
  json j{{"n", g.order()},
         {"m", g.size()},
         {"ell", opt.ell},
         {"closure_edges_added", closure.trace.steps.size()},
         {"closed_m", closure.graph.size()},
         {"added", added}};
  emit(opt, j.dump(2));
  return 0;
}

int cmd_kernelize(const Options &opt) {
  auto [g, format] = load(opt);
  auto red = reduce_instance(g, config_of(opt));
  const int off = id_offset(format);
  std::vector<Vertex> s_orig, c_orig;
  for (Vertex v : red.kernel.s)
    s_orig.push_back(red.kernel.to_original[v]);
  for (Vertex v : red.kernel.c_prime)
    c_orig.push_back(red.kernel.to_original[v]);
  json j{{"n", g.order()},
         {"co_deg", red.co_deg},
         {"closure_edges_added", red.closure.trace.steps.size()},
         {"cover_budget_used", red.budget},
         {"s_size", red.s.vertices.size()},
         {"s_substituted", red.s_substituted},
         {"kernel_vertices", red.kernel.reduced.order()},
         {"untouched", red.kernel.untouched},
         {"s", shifted(s_orig, off)},
         {"c_prime", shifted(c_orig, off)},
         {"omitted", shifted(red.kernel.omitted, off)},
         {"kernel", write_graph(red.kernel.reduced, format)}};
  emit(opt, j.dump(2));
  return 0;
}

int cmd_oracle(const Options &opt) {
  auto [g, format] = load(opt);
  auto result = mcc_bruteforce(g);
  const int off = id_offset(format);
  json j{{"n", g.order()}, {"mcc", result.size}};
  if (opt.emit_certificate) {
    json cycles = json::array();
    for (const auto &c : result.cover.cycles)
      cycles.push_back(shifted(c, off));
    j["certificate"] = cycles;
  }
  emit(opt, j.dump(2));
  return 0;
}

int cmd_gen(const Options &opt, const GenOptions &gen) {
  auto g = generate(gen.family, gen.n, gen.k, opt.seed);
  auto text = write_graph(g, parse_format(opt.format));
  text.pop_back();
  emit(opt, text);
  return 0;
}

int cmd_bench(const Options &opt, const BenchOptions &bench) {
  struct Job {
    int n;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (int n : bench.sizes)
    for (int s = 0; s < bench.seeds; ++s)
      jobs.push_back({n, opt.seed + static_cast<std::uint64_t>(s)});

  const auto cfg = config_of(opt);
  auto run = [&](Job job) {
    auto g = generate(bench.family, job.n, bench.k, job.seed);
    auto t0 = std::chrono::steady_clock::now();
    auto report = solve_pipeline(g, cfg);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json j = to_json(report, 0, false);
    j["seed"] = job.seed;
    j["k"] = bench.k;
    j["family"] = bench.family;
    j["wall_seconds"] = wall;
    return j;
  };

  json rows = json::array();
  const std::size_t width = static_cast<std::size_t>(std::max(1, bench.jobs));
  for (std::size_t i = 0; i < jobs.size(); i += width) {
    std::vector<std::future<json>> batch;
    for (std::size_t j = i; j < std::min(jobs.size(), i + width); ++j)
      batch.push_back(std::async(std::launch::async, run, jobs[j]));
    for (auto &f : batch)
      rows.push_back(f.get());
  }
  emit(opt, rows.dump(2));
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact minimum cycle cover solver"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--input", opt.input, "Graph file, '-' for stdin");
  app.add_option("--format", opt.format, "Graph format")->check(CLI::IsMember({"dimacs", "edgelist"}));
  app.add_option("--output", opt.output, "Output file, '-' for stdout");
  app.add_option("--seed", opt.seed, "Generator seed");
  app.add_option("--max-dp-vertices", opt.max_dp_vertices, "Largest graph handed to the subset DP")
      ->check(CLI::Range(1, 30));
  app.add_flag("--emit-certificate", opt.emit_certificate, "Include the cycles in the report");
  app.add_flag("--self-check", opt.self_check, "Re-verify, and compare with the oracle when n <= 10");
  app.add_option("--ell", opt.ell, "Closure offset (experimental)");

  auto *solve = app.add_subcommand("solve", "Minimum cycle cover with certificate");
  auto *codeg = app.add_subcommand("codeg", "Co-degeneracy and elimination order");
  auto *closure = app.add_subcommand("closure", "Closure and the edges it adds");
  auto *kernelize = app.add_subcommand("kernelize", "Co-vertex cover and kernel");
  auto *oracle = app.add_subcommand("oracle", "Brute force answer (n <= 12)");

  GenOptions gen;
  auto *gen_cmd = app.add_subcommand("gen", "Write a generated instance");
  gen_cmd->add_option("--family", gen.family)->check(CLI::IsMember({"co-degenerate", "dirac-deficient"}));
  gen_cmd->add_option("-n", gen.n, "Vertices")->required();
  gen_cmd->add_option("-k", gen.k, "Parameter k");

  BenchOptions bench;
  auto *bench_cmd = app.add_subcommand("bench", "Time the pipeline on generated instances");
  bench_cmd->add_option("--family", bench.family)->check(CLI::IsMember({"co-degenerate", "dirac-deficient"}));
  bench_cmd->add_option("--sizes", bench.sizes, "Vertex counts")->delimiter(',');
  bench_cmd->add_option("-k", bench.k, "Parameter k");
  bench_cmd->add_option("--seeds", bench.seeds, "Seeds per size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--jobs", bench.jobs, "Instances solved at once")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*solve)
      return cmd_solve(opt);
    if (*codeg)
      return cmd_codeg(opt);
    if (*closure)
      return cmd_closure(opt);
    if (*kernelize)
      return cmd_kernelize(opt);
    if (*oracle)
      return cmd_oracle(opt);
    if (*gen_cmd)
      return cmd_gen(opt, gen);
    if (*bench_cmd)
      return cmd_bench(opt, bench);
  } catch (const InputError &e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError &e) {
    std::cerr << "bad argument: " << e.what() << '\n';
    return 2;
  } catch (const ResourceRefusal &e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 3;
  } catch (const InternalError &e) {
    std::cerr << "internal error (please report): " << e.what() << '\n';
    return 4;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
