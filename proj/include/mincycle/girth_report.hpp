#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "mincycle/triangle_instance.hpp"
#include "mincycle/witness.hpp"

namespace mincycle {

/// Shared knobs of the girth pipelines.
struct GirthOptions {
  std::uint64_t seed = 0;
  int trials = 0;             // 0 = default_coloring_trials(n); coloring-based modes only
  bool deterministic = false; // falls back to randomized above the family cap
  int threads = 0;
  /// Test hook: called with every reduced instance the pipeline builds.
  std::function<void(const TriangleInstance&)> on_instance;
};

struct GirthReport {
  std::optional<CycleWitness> cycle;  // nullopt = no cycle in the graph
  std::int64_t t = 0;                 // threshold the reduction settled on
  int instances = 0;                  // reduced instances solved
  bool deterministic = false;         // mode actually used
};

}  // namespace mincycle
