#include "mincycle/kcycle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mincycle/coloring.hpp"
#include "mincycle/cycle_search.hpp"
#include "mincycle/detail/rng.hpp"
#include "mincycle/directed_reduction.hpp"
#include "mincycle/minplus.hpp"
#include "mincycle/mixed_reduction.hpp"
#include "mincycle/oracles.hpp"
#include "mincycle/undirected_reduction.hpp"

namespace mincycle {

Graph tripartitize(const Graph& g) {
  const int n0 = g.order();
  std::vector<Edge> out;
  out.reserve(6 * g.edges().size());
  for (const Edge& e : g.edges()) {
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      out.push_back({a, n0 + b, e.w, EdgeOrient::Undirected});
      out.push_back({n0 + a, 2 * n0 + b, e.w, EdgeOrient::Undirected});
      out.push_back({2 * n0 + a, b, e.w, EdgeOrient::Undirected});
    }
  }
  return Graph(3 * n0, GraphKind::Undirected, std::move(out), true);
}

KcycleGadget triangle_to_kcycle(const Graph& tri, int k, std::int64_t m_bound) {
  if (k < 4) throw std::invalid_argument("triangle_to_kcycle: k must be >= 4");
  if (tri.order() % 3 != 0)
    throw std::invalid_argument("triangle_to_kcycle: order not divisible by 3");
  const int n0 = tri.order() / 3;
  const std::int64_t bump = 5 * m_bound;
  // new ids: second partition 0..n0-1, third partition n0..2n0-1, then the
  // k-2 path nodes of first-partition node v at 2n0 + v*(k-2)
  const auto path_base = [&](int v) { return 2 * n0 + v * (k - 2); };
  std::vector<Edge> edges;
  for (const Edge& e : tri.edges()) {
    const int pu = e.u / n0, pv = e.v / n0;
    if (pu == 0 && pv == 0)
      throw std::invalid_argument("triangle_to_kcycle: first-partition edge");
    int a, b;
    if (pu == 0)
      a = pv == 1 ? path_base(e.u) : path_base(e.u) + k - 3, b = e.v - n0;
    else if (pv == 0)
      a = pu == 1 ? path_base(e.v) : path_base(e.v) + k - 3, b = e.u - n0;
    else
      a = e.u - n0, b = e.v - n0;
    edges.push_back({a, b, e.w + bump, EdgeOrient::Undirected});
  }
  for (int v = 0; v < n0; ++v)
    for (int j = 0; j + 1 < k - 2; ++j)
      edges.push_back({path_base(v) + j, path_base(v) + j + 1, 0,
                       EdgeOrient::Undirected});
  const int order = 2 * n0 + n0 * (k - 2);
  std::vector<int> back_map(order);
  for (int i = 0; i < 2 * n0; ++i) back_map[i] = i + n0;
  for (int v = 0; v < n0; ++v)
    for (int j = 0; j < k - 2; ++j) back_map[path_base(v) + j] = v;
  return {Graph(order, GraphKind::Undirected, std::move(edges), true), k, m_bound,
          std::move(back_map)};
}

namespace {

constexpr std::int64_t kInf = WeightMatrix::kInf;

// Solve the gadget for one instance; nullopt when triangle-free. The offset
// is applied per the instance's class rule, with the triangle's three
// instance nodes read back through the gadget and copy maps.
std::optional<std::int64_t> solve_instance(const TriangleInstance& inst, int k,
                                           const Graph& tri) {
  KcycleGadget gad = triangle_to_kcycle(tri, k, inst.weight_bound);
  oracles::OracleResult res = oracles::oracle_min_kcycle(gad.graph, k);
  if (!res.weight) return std::nullopt;
  std::int64_t w = *res.weight - 15 * inst.weight_bound;
  if (inst.class_rule == TriangleInstance::ClassRule::All) return w + inst.offset;
  for (int node : res.witness->nodes)
    if (inst.part[gad.back_map[node] % inst.n] == 1) return w + inst.offset;
  return w;
}

std::optional<std::int64_t> via_undirected(const Graph& g, int k,
                                           std::uint64_t seed) {
  const int n = g.order();
  ThresholdOutcome thr = find_threshold(g);
  if (!thr.candidate) return std::nullopt;
  std::int64_t best = thr.candidate->weight;
  if (auto pure = min_triangle(to_weight_matrix(g)))
    best = std::min(best, pure->weight);
  for (const Coloring& chi :
       sample_colorings(n, default_coloring_trials(n), seed)) {
    TriangleInstance inst =
        build_undirected_instance(g, thr.t, thr.dist, thr.pred, chi);
    Graph tri = tripartitize(inst.to_graph());
    if (auto w = solve_instance(inst, k, tri)) best = std::min(best, *w);
  }
  return best;
}

std::optional<std::int64_t> via_directed(const Graph& g, int k,
                                         std::uint64_t seed) {
  for (int attempt = 0; attempt < 4; ++attempt) {
    const std::uint64_t s =
        attempt == 0 ? seed : detail::mix(seed + 0x6b63 * attempt);
    DistanceEstimates est = sampled_estimates(g, s);
    if (detect_negative_cycle(est)) throw NegativeCycleError();
    auto reduced = threshold_and_reduce(build_tripartite(g, est), g.weight_bound());
    if (!reduced) {
      if (!has_any_cycle(g)) return std::nullopt;
      continue;
    }
    if (auto w = solve_instance(*reduced, k, reduced->to_graph())) return *w;
  }
  throw std::runtime_error("girth_via_kcycle: estimates missed every cycle");
}

std::optional<std::int64_t> via_mixed(const Graph& g, int k, std::uint64_t seed) {
  const int n = g.order();
  for (int attempt = 0; attempt < 4; ++attempt) {
    const std::uint64_t s =
        attempt == 0 ? seed : detail::mix(seed + 0x6b63 * attempt);
    DistanceEstimates est = sampled_estimates(g, s);
    std::int64_t best = kInf;
    for (const Coloring& chi :
         sample_colorings(n, default_coloring_trials(n), s)) {
      auto reduced = threshold_and_reduce(build_mixed_instance(g, est, chi),
                                          g.weight_bound());
      if (!reduced) continue;
      if (auto w = solve_instance(*reduced, k, reduced->to_graph()))
        best = std::min(best, *w);
    }
    if (best < kInf) return best;
    if (!has_any_cycle(g)) return std::nullopt;
  }
  throw std::runtime_error("girth_via_kcycle: estimates missed every cycle");
}

}  // namespace

std::optional<std::int64_t> girth_via_kcycle(const Graph& g, int k,
                                             std::uint64_t seed) {
  if (k < 4 || k > 6)
    throw std::invalid_argument("girth_via_kcycle: k must be in [4,6]");
  switch (g.kind()) {
    case GraphKind::Undirected:
      return via_undirected(g, k, seed);
    case GraphKind::Directed:
      return via_directed(g, k, seed);
    default:
      return via_mixed(g, k, seed);
  }
}

}  // namespace mincycle
