#include "mincycle/witness.hpp"

#include <algorithm>
#include <unordered_set>

namespace mincycle {

std::optional<std::int64_t> closed_walk_weight(const Graph& g, const std::vector<int>& nodes) {
  if (nodes.size() < 2) return std::nullopt;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    int u = nodes[i];
    int v = nodes[(i + 1) % nodes.size()];
    auto w = g.step_weight(u, v);
    if (!w) return std::nullopt;
    total += *w;
  }
  return total;
}

std::string validate_cycle(const Graph& g, const CycleWitness& c) {
  const auto& nodes = c.nodes;
  if (nodes.size() < 2) return "cycle has fewer than 2 nodes";
  std::unordered_set<int> seen(nodes.begin(), nodes.end());
  if (seen.size() != nodes.size()) return "cycle repeats a vertex";
  if (nodes.size() == 2) {
    if (!g.step_is_arc(nodes[0], nodes[1]) || !g.step_is_arc(nodes[1], nodes[0]))
      return "2-node cycle requires two antiparallel directed arcs";
  }
  auto w = closed_walk_weight(g, nodes);
  if (!w) return "cycle uses a nonexistent edge";
  if (*w != c.weight) return "stated weight " + std::to_string(c.weight) +
                             " differs from edge sum " + std::to_string(*w);
  return "";
}

namespace {

bool segment_is_valid_cycle(const Graph& g, const std::vector<int>& seg) {
  if (seg.size() < 2) return false;
  if (seg.size() == 2)
    return g.step_is_arc(seg[0], seg[1]) && g.step_is_arc(seg[1], seg[0]);
  return true;
}

}  // namespace

std::optional<CycleWitness> extract_cycle_from_closed_walk(const Graph& g,
                                                           std::vector<int> walk) {
  while (true) {
    int len = static_cast<int>(walk.size());
    if (len < 2) return std::nullopt;
    // find a closest pair of copies of a node (minimal cyclic gap)
    int best_i = -1, best_gap = 0;
    for (int gap = 2; gap < len && best_i < 0; ++gap) {
      for (int i = 0; i < len; ++i) {
        if (walk[i] == walk[(i + gap) % len]) {
          best_i = i;
          best_gap = gap;
          break;
        }
      }
    }
    if (best_i < 0) {
      // walk is already a simple cycle (or too short / degenerate)
      if (!segment_is_valid_cycle(g, walk)) return std::nullopt;
      auto w = closed_walk_weight(g, walk);
      if (!w) return std::nullopt;
      return CycleWitness{std::move(walk), *w};
    }
    std::rotate(walk.begin(), walk.begin() + best_i, walk.end());
    std::vector<int> inner(walk.begin(), walk.begin() + best_gap);
    if (segment_is_valid_cycle(g, inner)) {
      auto w = closed_walk_weight(g, inner);
      if (w) return CycleWitness{std::move(inner), *w};
    }
    // degenerate repeat (one undirected edge back and forth): splice it out
    walk.erase(walk.begin() + 1, walk.begin() + best_gap + 1);
  }
}

}  // namespace mincycle
