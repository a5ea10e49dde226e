#pragma once

#include "mincycle/coloring.hpp"
#include "mincycle/directed_reduction.hpp"
#include "mincycle/girth_report.hpp"
#include "mincycle/graph.hpp"

namespace mincycle {

/// Tripartite instance for one coloring of a mixed graph. Directed arcs
/// (u,v) always yield (u^2,v^3); undirected edges yield both (u^2,v^3) and
/// (v^2,u^3) only when both endpoints are C2. A finite D[x,y] yields
/// (x^1,y^2) unconditionally when the last step of its witness walk is an
/// arc, and under the C1/C2 gate on (predecessor, y) when it is undirected;
/// symmetrically (x^3,y^1) is gated by the first step (x, successor).
/// Zero-length diagonal estimates are added unconditionally.
TriangleInstance build_mixed_instance(const Graph& g, const DistanceEstimates& est,
                                      const Coloring& chi);

/// Weighted girth of a mixed graph with weights in [1,M]: distance estimates
/// as in the directed pipeline, color coding on the undirected edges, one
/// reduced tripartite instance per coloring, minimum over colorings.
GirthReport girth_mixed(const Graph& g, const GirthOptions& opt = {});

}  // namespace mincycle
