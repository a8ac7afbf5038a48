#include "mcc/oracle.hpp"

#include <algorithm>
#include <string>

#include "mcc/errors.hpp"

namespace mcc {

namespace {

bool extend(const Graph &g, const std::vector<Vertex> &block, std::vector<Vertex> &order,
            std::vector<bool> &used) {
  if (order.size() == block.size())
    return g.adjacent(order.back(), order.front());
  for (std::size_t i = 1; i < block.size(); ++i) {
    if (used[i] || !g.adjacent(order.back(), block[i]))
      continue;
    used[i] = true;
    order.push_back(block[i]);
    if (extend(g, block, order, used))
      return true;
    order.pop_back();
    used[i] = false;
  }
  return false;
}

} // namespace

std::optional<Cycle> hamiltonian_cycle_bruteforce(const Graph &g, const std::vector<Vertex> &block) {
  if (block.size() == 1)
    return Cycle{block.front()};
  if (block.size() < 3)
    return std::nullopt;
  std::vector<Vertex> sorted = block;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vertex> order{sorted.front()};
  std::vector<bool> used(sorted.size(), false);
  used[0] = true;
  if (!extend(g, sorted, order, used))
    return std::nullopt;
  return order;
}

bool is_hamiltonian_bruteforce(const Graph &g) {
  std::vector<Vertex> all(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    all[v] = v;
  return g.order() > 0 && hamiltonian_cycle_bruteforce(g, all).has_value();
}

namespace {

class PartitionSearch {
public:
  explicit PartitionSearch(const Graph &g)
      : g_(g), n_(g.order()), known_(std::size_t{1} << n_, 0),
        cycle_(std::size_t{1} << n_), label_(n_, 0) {}

  OracleResult run() {
    assign(0, 0);
    return {best_count_, best_};
  }

private:
  // 0 unknown, 1 feasible, 2 infeasible.
  bool feasible(unsigned mask) {
    if (known_[mask] == 0) {
      std::vector<Vertex> block;
      for (Vertex v = 0; v < n_; ++v)
        if (mask >> v & 1)
          block.push_back(v);
      auto c = hamiltonian_cycle_bruteforce(g_, block);
      known_[mask] = c ? 1 : 2;
      if (c)
        cycle_[mask] = std::move(*c);
    }
    return known_[mask] == 1;
  }

  void assign(int v, int blocks) {
    if (blocks > best_count_)
      return;
    if (v == n_) {
      evaluate(blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label_[v] = b;
      assign(v + 1, std::max(blocks, b + 1));
    }
  }

  void evaluate(int blocks) {
    std::vector<unsigned> masks(blocks, 0);
    for (Vertex v = 0; v < n_; ++v)
      masks[label_[v]] |= 1u << v;
    CycleCover cover;
    for (unsigned m : masks) {
      if (!feasible(m))
        return;
      cover.cycles.push_back(cycle_[m]);
    }
    cover = canonical(std::move(cover));
    if (blocks < best_count_ || cover < best_) {
      best_count_ = blocks;
      best_ = std::move(cover);
    }
  }

  const Graph &g_;
  int n_;
  std::vector<unsigned char> known_;
  std::vector<Cycle> cycle_;
  std::vector<int> label_;
  int best_count_ = oracle_max_vertices + 1;
  CycleCover best_;
};

} // namespace

OracleResult mcc_bruteforce(const Graph &g) {
  if (g.order() > oracle_max_vertices)
    throw ResourceRefusal("brute-force oracle refused for " + std::to_string(g.order()) +
                          " vertices (limit " + std::to_string(oracle_max_vertices) + ")");
  if (g.order() == 0)
    return {};
  return PartitionSearch(g).run();
}

} // namespace mcc
