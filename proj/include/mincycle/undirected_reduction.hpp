#pragma once

#include <cstdint>
#include <vector>

#include "mincycle/coloring.hpp"
#include "mincycle/cycle_search.hpp"
#include "mincycle/girth_report.hpp"
#include "mincycle/graph.hpp"
#include "mincycle/triangle_instance.hpp"
#include "mincycle/witness.hpp"

namespace mincycle {

/// Two-layer instance for one coloring, from the boundary-point distance
/// table: V1 = all vertices, V2 = the C2-colored ones. E22 keeps the edges of
/// g with both endpoints C2 at their original weight. E12 connects x^1 to z^2
/// when the table has d[x,z] <= t, z's tree predecessor is colored C1 and z
/// is colored C2; only weights in (t-M, t] are kept and they are shifted down
/// by t, so a triangle touching V1 certifies its weight + 2t.
TriangleInstance build_undirected_instance(const Graph& g, std::int64_t t,
                                           const WeightMatrix& dist,
                                           const std::vector<int>& pred,
                                           const Coloring& chi);

/// Weighted girth of an undirected graph with weights in [1,M], by reduction
/// to minimum triangle over the colorings. The report's cycle is a validated
/// witness; its weight equals the girth with probability >= 1 - n^-3 in
/// randomized mode and always in deterministic mode.
GirthReport girth_undirected(const Graph& g, const GirthOptions& opt = {});

}  // namespace mincycle
