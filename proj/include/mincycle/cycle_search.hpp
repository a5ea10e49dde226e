#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mincycle/graph.hpp"
#include "mincycle/weight_matrix.hpp"
#include "mincycle/witness.hpp"

namespace mincycle {

/// Result of the bounded cycle-or-distances search from one source.
/// Exactly one branch is taken: either a simple cycle of weight <= 2t, or
/// the exact distances (each <= t) with tree predecessors.
struct SourceOutcome {
  std::optional<CycleWitness> cycle;
  std::vector<std::int64_t> dist;  // kInf where not computed
  std::vector<int> pred;           // -1 where none
};

/// Dijkstra-like search from s that relaxes (u,v) at u's extraction only when
/// d[u] + w(u,v) <= t, and reports a cycle as soon as a relaxation hits a
/// vertex that already carries a finite label. The edge back to u's own tree
/// parent is skipped: it would close the degenerate "cycle" made of one edge
/// traversed twice.
SourceOutcome cycle_or_distances(const Graph& g, int s, std::int64_t t);

/// Outcome of running the search from every source.
struct SweepOutcome {
  std::optional<CycleWitness> cycle;        // best cycle over sources, weight <= 2t
  WeightMatrix dist;                        // distance branch only
  std::vector<int> pred;                    // flat n*n, -1 where none
};

SweepOutcome min_cycle_sweep(const Graph& g, std::int64_t t, int threads = 0);

/// Boundary point of the threshold search: min_cycle_sweep(g, t) takes the
/// distance branch while min_cycle_sweep(g, t+1) reports a cycle of weight
/// <= 2t+2 -- or t = nM with no report, in which case the graph is acyclic.
struct ThresholdOutcome {
  std::int64_t t = 0;
  std::optional<CycleWitness> candidate;    // the <= 2t+2 cycle, when present
  WeightMatrix dist;                        // table of the sweep at t
  std::vector<int> pred;
};

ThresholdOutcome find_threshold(const Graph& g, int threads = 0);

}  // namespace mincycle
