#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mincycle/girth_report.hpp"
#include "mincycle/graph.hpp"
#include "mincycle/triangle_instance.hpp"
#include "mincycle/weight_matrix.hpp"

namespace mincycle {

class NegativeCycleError : public std::runtime_error {
 public:
  NegativeCycleError() : std::runtime_error("graph contains a negative cycle") {}
};

/// Staged sampled distance estimates. D is an upper bound on every distance
/// (unconditionally); with high probability, for every stage ell, s in
/// B_ell and any v, D[s,v] and D[v,s] are exact whenever the corresponding
/// shortest path has at most (3/2)^ell edges — so D*D is the exact distance
/// matrix whp.
struct DistanceEstimates {
  WeightMatrix D;                        // diagonal 0
  std::vector<int> pred;                 // flat n*n: penultimate node of the
                                         // witness walk for D[i,j], -1 if none
  std::vector<int> succ;                 // flat n*n: second node of that walk
  std::vector<std::vector<int>> stages;  // sampled set B_ell per stage
};

/// Travel is taken from the graph's out-neighbor lists, so undirected edges
/// (mixed inputs) act as arc pairs.
DistanceEstimates sampled_estimates(const Graph& g, std::uint64_t seed,
                                    int threads = 0);

/// Exact, weight-free cycle existence (DFS). An undirected edge straight back
/// to the DFS parent does not count as a cycle.
bool has_any_cycle(const Graph& g);

/// Walk x .. y that witnesses the estimate D[x,y], by following the
/// predecessor matrix. Every consecutive pair is a real edge; nullopt when
/// the chain fails to close within 3n steps (callers rerun on that).
std::optional<std::vector<int>> expand_estimate_walk(const DistanceEstimates& est,
                                                     int x, int y);

/// True iff some diagonal entry of D*D is negative. Sound: true implies a
/// negative closed walk, hence a negative cycle. Complete whp.
bool detect_negative_cycle(const DistanceEstimates& est, int threads = 0);

/// Unreduced tripartite instance. Nodes: a^1 = a, b^2 = n+b, c^3 = 2n+c.
/// Every arc (u,v) yields (u^2,v^3) of weight w(u,v); every finite D[x,y]
/// yields (x^1,y^2) and (x^3,y^1) of weight D[x,y]. A triangle (a^1,b^2,c^3)
/// weighs D[a,b] + w(b,c) + D[c,a], a closed walk a -> b -> c -> a.
TriangleInstance build_tripartite(const Graph& g, const DistanceEstimates& est);

/// Binary-searches the smallest t in [0, Mn] admitting a triangle whose two
/// V1-incident edges are both <= t, deletes V1-incident edges with weight
/// > t + M/2 (compared as doubled integers) or < t - M, shifts survivors by
/// -t and records offset 2t. All weights end in [-M, M]. nullopt when no
/// triangle exists at all (the graph has no cycle the estimates can see).
std::optional<TriangleInstance> threshold_and_reduce(const TriangleInstance& inst,
                                                     std::int64_t m_bound,
                                                     int threads = 0);

/// Weighted girth of a directed graph with weights in [-M,M]. Throws
/// NegativeCycleError when one is detected. On the whp-rare event that
/// recovery contradicts the claimed weight the pipeline reruns with derived
/// seeds up to 3 times before surfacing a diagnostic (std::runtime_error).
GirthReport girth_directed(const Graph& g, const GirthOptions& opt = {});

}  // namespace mincycle
