#include "mincycle/cycle_search.hpp"

#include <algorithm>
#include <queue>

#include "mincycle/detail/parallel.hpp"

namespace mincycle {

namespace {

constexpr std::int64_t kInf = WeightMatrix::kInf;

// Per-vertex edge lists pre-sorted by weight once, so the per-vertex queue of
// Controlled-Relax is a cursor advance.
using SortedAdj = std::vector<std::vector<std::pair<std::int64_t, int>>>;

SortedAdj sorted_adjacency(const Graph& g) {
  SortedAdj adj(g.order());
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back({e.w, e.v});
    if (e.orient == EdgeOrient::Undirected) adj[e.v].push_back({e.w, e.u});
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

CycleWitness extract_collision_cycle(const std::vector<std::int64_t>& dist,
                                     const std::vector<int>& pred, int u, int v,
                                     std::int64_t w) {
  // tree paths from the source to u and v meet at their lowest common
  // ancestor; the two LCA-to-endpoint paths plus the edge (u,v) are simple
  std::vector<int> up{u};
  for (int x = u; pred[x] != -1; x = pred[x]) up.push_back(pred[x]);
  std::vector<char> on_up(dist.size(), 0);
  for (int x : up) on_up[x] = 1;
  std::vector<int> down{v};
  int lca = v;
  while (!on_up[lca]) {
    lca = pred[lca];
    down.push_back(lca);
  }
  std::vector<int> nodes;
  for (auto it = up.begin(); *it != lca; ++it) nodes.push_back(*it);
  nodes.push_back(lca);
  std::reverse(nodes.begin(), nodes.end());  // lca .. u
  for (int x : down)
    if (x != lca) nodes.push_back(x);        // then v climbing back toward lca
  std::int64_t weight = (dist[u] - dist[lca]) + w + (dist[v] - dist[lca]);
  return CycleWitness{std::move(nodes), weight};
}

SourceOutcome search_from(const Graph& g, const SortedAdj& adj, int s, std::int64_t t) {
  const int n = g.order();
  SourceOutcome out;
  out.dist.assign(n, kInf);
  out.pred.assign(n, -1);
  out.dist[s] = 0;
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.push({0, s});
  std::vector<char> done(n, 0);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (auto [w, v] : adj[u]) {
      if (d + w > t) break;  // lists are weight-sorted
      if (v == out.pred[u]) continue;
      if (out.dist[v] != kInf) {
        out.cycle = extract_collision_cycle(out.dist, out.pred, u, v, w);
        return out;
      }
      out.dist[v] = d + w;
      out.pred[v] = u;
      pq.push({out.dist[v], v});
    }
  }
  return out;
}

}  // namespace

SourceOutcome cycle_or_distances(const Graph& g, int s, std::int64_t t) {
  return search_from(g, sorted_adjacency(g), s, t);
}

SweepOutcome min_cycle_sweep(const Graph& g, std::int64_t t, int threads) {
  const int n = g.order();
  SortedAdj adj = sorted_adjacency(g);
  std::vector<SourceOutcome> per_source(n);
  detail::run_chunked(threads, n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t s = lo; s < hi; ++s)
      per_source[s] = search_from(g, adj, static_cast<int>(s), t);
  });
  SweepOutcome out;
  for (int s = 0; s < n; ++s) {
    const auto& c = per_source[s].cycle;
    if (c && (!out.cycle || c->weight < out.cycle->weight)) out.cycle = c;
  }
  if (out.cycle) return out;
  out.dist = WeightMatrix(n);
  out.pred.assign(static_cast<std::size_t>(n) * n, -1);
  for (int s = 0; s < n; ++s) {
    for (int v = 0; v < n; ++v) {
      out.dist.at(s, v) = per_source[s].dist[v];
      out.pred[static_cast<std::size_t>(s) * n + v] = per_source[s].pred[v];
    }
  }
  return out;
}

ThresholdOutcome find_threshold(const Graph& g, int threads) {
  const std::int64_t hi_limit =
      static_cast<std::int64_t>(g.order()) * g.weight_bound();
  // lo never reports (weights >= 1, so t=0 relaxes nothing); search for a
  // boundary point lo / lo+1. Monotonicity of "reports" is not required.
  std::int64_t lo = 0, hi = hi_limit + 1;
  SweepOutcome at_lo = min_cycle_sweep(g, 0, threads);
  std::optional<SweepOutcome> at_hi;
  {
    SweepOutcome top = min_cycle_sweep(g, hi_limit, threads);
    if (!top.cycle) {
      // acyclic: t = nM with the full distance table and no candidate
      return ThresholdOutcome{hi_limit, std::nullopt, std::move(top.dist),
                              std::move(top.pred)};
    }
    at_hi = std::move(top);
    hi = hi_limit;
  }
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    SweepOutcome m = min_cycle_sweep(g, mid, threads);
    if (m.cycle) {
      hi = mid;
      at_hi = std::move(m);
    } else {
      lo = mid;
      at_lo = std::move(m);
    }
  }
  return ThresholdOutcome{lo, at_hi->cycle, std::move(at_lo.dist), std::move(at_lo.pred)};
}

}  // namespace mincycle
