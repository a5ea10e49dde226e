#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mincycle::verify {

/// One property, counted over its sample. `allowed_misses` is nonzero only
/// for properties that hold with high probability rather than always.
struct Check {
  std::string name;
  int passed = 0;
  int total = 0;
  int allowed_misses = 0;
  std::string note;  // first failure, for diagnostics

  bool ok() const { return passed + allowed_misses >= total; }
};

/// Pipeline-vs-oracle sweeps. `seeds` graphs per suite; every graph, trial
/// and instance derives from `seed`, so a failing run is reproducible.
std::vector<Check> suite_undirected(int seeds, std::uint64_t seed = 1, int threads = 0);
std::vector<Check> suite_directed(int seeds, std::uint64_t seed = 1, int threads = 0);
std::vector<Check> suite_mixed(int seeds, std::uint64_t seed = 1, int threads = 0);

/// Gadget identity (min k-cycle = W + 15M), weight range, path-node degrees,
/// and the composed girth-via-k-cycle pipeline against the oracle.
std::vector<Check> suite_kcycle(int seeds, std::uint64_t seed = 1, int threads = 0);

/// Structural properties: search dichotomy, critical-edge bounds, absence of
/// false triangles on small instances, coloring pattern frequency, distance
/// estimate contract, and blocked-vs-naive kernel equality.
std::vector<Check> suite_properties(int seeds, std::uint64_t seed = 1, int threads = 0);

/// Dispatch by suite name; throws std::invalid_argument on unknown names.
std::vector<Check> run_suite(const std::string& name, int seeds,
                             std::uint64_t seed = 1, int threads = 0);

}  // namespace mincycle::verify
