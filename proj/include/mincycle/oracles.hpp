#pragma once

#include <optional>
#include <stdexcept>

#include "mincycle/graph.hpp"
#include "mincycle/witness.hpp"

namespace mincycle {

/// Deliberately naive ground truth. Shares no code with the reduction
/// pipelines; cubic or worse is fine here.
namespace oracles {

struct OracleResult {
  std::optional<std::int64_t> weight;      // nullopt = no cycle
  std::optional<CycleWitness> witness;
};

class NegativeCycleError : public std::runtime_error {
 public:
  NegativeCycleError() : std::runtime_error("graph contains a negative cycle") {}
};

struct ApspResult {
  WeightMatrix dist;
  bool negative_cycle = false;
};

/// Floyd-Warshall distances; negative_cycle iff some d(v,v) < 0 is achievable.
ApspResult oracle_apsp(const Graph& g);

/// Exact weighted girth. Directed: min over arcs (u,v) of w(u,v) + d(v,u).
/// Undirected/mixed closing edges: edge deletion + Dijkstra per edge, which
/// avoids mistaking the closing edge itself for the return path.
/// Throws NegativeCycleError for directed inputs containing one.
OracleResult oracle_girth(const Graph& g);

/// Exact minimum triangle weight of an undirected graph by cubic enumeration.
OracleResult oracle_min_triangle(const Graph& g);

/// Exact minimum weight over simple cycles with exactly k vertices, by DFS
/// enumeration. Guarded: n <= 40 and 3 <= k <= 6.
OracleResult oracle_min_kcycle(const Graph& g, int k);

}  // namespace oracles
}  // namespace mincycle
