#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mincycle/graph.hpp"

namespace mincycle {

/// A simple cycle: ordered vertex list plus total weight. The closing edge
/// (back to nodes.front()) is implicit.
struct CycleWitness {
  std::vector<int> nodes;
  std::int64_t weight = 0;
};

/// Empty string when the witness is a valid simple cycle of the stated
/// weight in g; otherwise a human-readable reason. A 2-node cycle is legal
/// only via two distinct antiparallel arcs.
std::string validate_cycle(const Graph& g, const CycleWitness& c);

/// Recomputes the weight of a vertex sequence treated as a closed walk.
/// Returns nullopt when some step has no edge.
std::optional<std::int64_t> closed_walk_weight(const Graph& g, const std::vector<int>& nodes);

/// Extracts a simple cycle of weight at most the walk's weight from a closed
/// walk (consecutive steps, incl. the closing one, must be edges of g).
/// Degenerate repeats that traverse one undirected edge back and forth are
/// spliced out, so for nonnegative weights the result never exceeds the walk
/// weight. Returns nullopt when no simple cycle remains.
std::optional<CycleWitness> extract_cycle_from_closed_walk(const Graph& g,
                                                           std::vector<int> walk);

}  // namespace mincycle
