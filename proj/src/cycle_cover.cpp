#include "mcc/cycle_cover.hpp"

#include <algorithm>

namespace mcc {

Cycle canonical_cycle(Cycle cycle) {
  if (cycle.size() < 2)
    return cycle;
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  if (cycle.back() < cycle[1])
    std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

CycleCover canonical(CycleCover cover) {
  for (auto &c : cover.cycles)
    c = canonical_cycle(std::move(c));
  std::sort(cover.cycles.begin(), cover.cycles.end());
  return cover;
}

const char *to_string(CoverViolation v) {
  switch (v) {
  case CoverViolation::none:
    return "none";
  case CoverViolation::empty_cycle:
    return "empty cycle";
  case CoverViolation::two_cycle:
    return "cycle of length 2";
  case CoverViolation::vertex_out_of_range:
    return "vertex out of range";
  case CoverViolation::repeated_vertex:
    return "vertex covered more than once";
  case CoverViolation::uncovered_vertex:
    return "vertex not covered";
  case CoverViolation::missing_edge:
    return "consecutive vertices not adjacent";
  }
  return "unknown";
}

CoverVerdict verify_cover(const Graph &g, const CycleCover &cover) {
  const int n = g.order();
  VertexSet seen(n);
  auto fail = [](CoverViolation v, int idx, std::string detail) {
    return CoverVerdict{v, idx, std::move(detail)};
  };
  for (std::size_t i = 0; i < cover.cycles.size(); ++i) {
    const auto &c = cover.cycles[i];
    const int idx = static_cast<int>(i);
    if (c.empty())
      return fail(CoverViolation::empty_cycle, idx, "cycle " + std::to_string(i) + " is empty");
    if (c.size() == 2)
      return fail(CoverViolation::two_cycle, idx, "cycle " + std::to_string(i) + " has length 2");
    for (Vertex v : c) {
      if (v < 0 || v >= n)
        return fail(CoverViolation::vertex_out_of_range, idx,
                    "vertex " + std::to_string(v) + " in cycle " + std::to_string(i));
      if (seen.test(v))
        return fail(CoverViolation::repeated_vertex, idx,
                    "vertex " + std::to_string(v) + " in cycle " + std::to_string(i));
      seen.set(v);
    }
    if (c.size() >= 3) {
      for (std::size_t j = 0; j < c.size(); ++j) {
        Vertex a = c[j], b = c[(j + 1) % c.size()];
        if (!g.adjacent(a, b))
          return fail(CoverViolation::missing_edge, idx,
                      "edge " + std::to_string(a) + "-" + std::to_string(b) + " in cycle " +
                          std::to_string(i));
      }
    }
  }
  if (static_cast<int>(seen.count()) != n) {
    auto missing = (~seen).find_first();
    return fail(CoverViolation::uncovered_vertex, -1,
                "vertex " + std::to_string(missing) + " is not covered");
  }
  return {};
}

CycleCover relabel(const CycleCover &cover, const std::vector<Vertex> &map) {
  CycleCover out;
  out.cycles.reserve(cover.size());
  for (const auto &c : cover.cycles) {
    Cycle mapped;
    mapped.reserve(c.size());
    for (Vertex v : c)
      mapped.push_back(map[v]);
    out.cycles.push_back(std::move(mapped));
  }
  return out;
}

} // namespace mcc
