#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mincycle/graph.hpp"
#include "mincycle/triangle_instance.hpp"

namespace mincycle {

/// Three copies of every node; each edge (u,v) becomes the six cross-copy
/// edges, so triangles correspond (up to copy rotation) to original
/// triangles of equal weight and the output is tripartite by index thirds.
Graph tripartitize(const Graph& g);

struct KcycleGadget {
  Graph graph;                // undirected, weights in [0, 6M]
  int k = 0;
  std::int64_t m_bound = 1;   // the M of the input; min k-cycle = W + 15M
  std::vector<int> back_map;  // gadget node -> input node (path nodes -> their
                              // first-partition node)
};

/// Triangle -> k-cycle gadget. `tri` must be tripartite by index thirds
/// (partition p = id / (n/3)), weights in [-m_bound, m_bound]. Every
/// first-partition node becomes a zero-weight path on k-2 nodes; edges from
/// the second partition attach to its head, from the third to its tail; all
/// non-path edges gain 5M. If the input has a triangle of minimum weight W,
/// the minimum k-cycle of the output weighs exactly W + 15M.
KcycleGadget triangle_to_kcycle(const Graph& tri, int k, std::int64_t m_bound);

/// Composed verification-scale pipeline: cycle -> triangle reduction for the
/// graph's kind, gadget, brute-force k-cycle solve, and weight mapping back
/// (subtract 15M, add the triangle-stage offset). k in [4,6]; sizes must fit
/// the k-cycle oracle. Returns the girth weight, nullopt for acyclic input.
std::optional<std::int64_t> girth_via_kcycle(const Graph& g, int k,
                                             std::uint64_t seed);

}  // namespace mincycle
