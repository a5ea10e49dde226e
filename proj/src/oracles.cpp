#include "mincycle/oracles.hpp"

#include <algorithm>
#include <queue>

namespace mincycle {
namespace oracles {

namespace {

constexpr std::int64_t kInf = WeightMatrix::kInf;

struct FloydWarshall {
  WeightMatrix dist;
  std::vector<int> next;  // successor on a shortest path, -1 when none
  bool negative_cycle = false;
};

FloydWarshall floyd_warshall(const Graph& g) {
  const int n = g.order();
  FloydWarshall fw{WeightMatrix(n), std::vector<int>(static_cast<std::size_t>(n) * n, -1)};
  for (int i = 0; i < n; ++i) fw.dist.at(i, i) = 0;
  for (const Edge& e : g.edges()) {
    if (e.w < fw.dist.at(e.u, e.v)) {
      fw.dist.at(e.u, e.v) = e.w;
      fw.next[static_cast<std::size_t>(e.u) * n + e.v] = e.v;
    }
    if (e.orient == EdgeOrient::Undirected && e.w < fw.dist.at(e.v, e.u)) {
      fw.dist.at(e.v, e.u) = e.w;
      fw.next[static_cast<std::size_t>(e.v) * n + e.u] = e.u;
    }
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      std::int64_t dik = fw.dist.at(i, k);
      if (WeightMatrix::is_inf(dik)) continue;
      for (int j = 0; j < n; ++j) {
        std::int64_t cand = WeightMatrix::add(dik, fw.dist.at(k, j));
        if (cand < fw.dist.at(i, j)) {
          fw.dist.at(i, j) = cand;
          fw.next[static_cast<std::size_t>(i) * n + j] =
              fw.next[static_cast<std::size_t>(i) * n + k];
        }
      }
    }
  for (int v = 0; v < n; ++v)
    if (fw.dist.at(v, v) < 0) fw.negative_cycle = true;
  return fw;
}

std::vector<int> fw_path(const FloydWarshall& fw, int n, int from, int to) {
  std::vector<int> path{from};
  int cur = from;
  int guard = 2 * n + 2;
  while (cur != to && guard-- > 0) {
    cur = fw.next[static_cast<std::size_t>(cur) * n + to];
    path.push_back(cur);
  }
  return path;
}

struct DijkstraResult {
  std::vector<std::int64_t> dist;
  std::vector<int> pred;
};

// Nonnegative weights only; skip_edge suppresses one edge (by index) in both
// directions so the closing edge cannot double as the return path.
DijkstraResult dijkstra(const Graph& g, int source, int skip_edge = -1) {
  const int n = g.order();
  DijkstraResult r{std::vector<std::int64_t>(n, kInf), std::vector<int>(n, -1)};
  // adjacency with the skipped edge removed
  std::vector<std::vector<std::pair<int, std::int64_t>>> adj(n);
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (static_cast<int>(i) == skip_edge) continue;
    const Edge& e = edges[i];
    adj[e.u].push_back({e.v, e.w});
    if (e.orient == EdgeOrient::Undirected) adj[e.v].push_back({e.u, e.w});
  }
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  r.dist[source] = 0;
  pq.push({0, source});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != r.dist[u]) continue;
    for (auto [v, w] : adj[u]) {
      if (d + w < r.dist[v]) {
        r.dist[v] = d + w;
        r.pred[v] = u;
        pq.push({r.dist[v], v});
      }
    }
  }
  return r;
}

std::vector<int> dijkstra_path(const DijkstraResult& r, int source, int to) {
  std::vector<int> rev{to};
  int cur = to;
  while (cur != source) {
    cur = r.pred[cur];
    rev.push_back(cur);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

OracleResult directed_girth(const Graph& g) {
  const int n = g.order();
  FloydWarshall fw = floyd_warshall(g);
  if (fw.negative_cycle) throw NegativeCycleError();
  OracleResult best;
  const Edge* best_arc = nullptr;
  for (const Edge& e : g.edges()) {
    std::int64_t back = fw.dist.at(e.v, e.u);
    if (WeightMatrix::is_inf(back)) continue;
    std::int64_t w = e.w + back;
    if (!best.weight || w < *best.weight) {
      best.weight = w;
      best_arc = &e;
    }
  }
  if (best_arc) {
    std::vector<int> path = fw_path(fw, n, best_arc->v, best_arc->u);
    std::vector<int> nodes{best_arc->u};
    nodes.insert(nodes.end(), path.begin(), path.end() - 1);
    best.witness = CycleWitness{std::move(nodes), *best.weight};
  }
  return best;
}

OracleResult undirected_or_mixed_girth(const Graph& g) {
  OracleResult best;
  const auto& edges = g.edges();
  // undirected closing edge: delete it, then shortest path between endpoints
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.orient != EdgeOrient::Undirected) continue;
    DijkstraResult r = dijkstra(g, e.u, static_cast<int>(i));
    if (WeightMatrix::is_inf(r.dist[e.v])) continue;
    std::int64_t w = e.w + r.dist[e.v];
    if (!best.weight || w < *best.weight) {
      best.weight = w;
      best.witness = CycleWitness{dijkstra_path(r, e.u, e.v), w};
    }
  }
  // directed closing arc (mixed graphs): w(u,v) + d(v,u) in the full graph
  std::vector<std::optional<DijkstraResult>> from(g.order());
  for (const Edge& e : edges) {
    if (e.orient != EdgeOrient::Directed) continue;
    if (!from[e.v]) from[e.v] = dijkstra(g, e.v);
    const DijkstraResult& r = *from[e.v];
    if (WeightMatrix::is_inf(r.dist[e.u])) continue;
    std::int64_t w = e.w + r.dist[e.u];
    if (!best.weight || w < *best.weight) {
      std::vector<int> path = dijkstra_path(r, e.v, e.u);  // v .. u
      std::vector<int> nodes{e.u};
      nodes.insert(nodes.end(), path.begin(), path.end() - 1);
      best.weight = w;
      best.witness = CycleWitness{std::move(nodes), w};
    }
  }
  return best;
}

}  // namespace

ApspResult oracle_apsp(const Graph& g) {
  FloydWarshall fw = floyd_warshall(g);
  return {std::move(fw.dist), fw.negative_cycle};
}

OracleResult oracle_girth(const Graph& g) {
  if (g.kind() == GraphKind::Directed) return directed_girth(g);
  return undirected_or_mixed_girth(g);
}

OracleResult oracle_min_triangle(const Graph& g) {
  const int n = g.order();
  WeightMatrix a = to_weight_matrix(g);
  OracleResult best;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (WeightMatrix::is_inf(a.at(i, j))) continue;
      for (int k = j + 1; k < n; ++k) {
        if (WeightMatrix::is_inf(a.at(j, k)) || WeightMatrix::is_inf(a.at(i, k))) continue;
        std::int64_t w = a.at(i, j) + a.at(j, k) + a.at(i, k);
        if (!best.weight || w < *best.weight) {
          best.weight = w;
          best.witness = CycleWitness{{i, j, k}, w};
        }
      }
    }
  return best;
}

OracleResult oracle_min_kcycle(const Graph& g, int k) {
  const int n = g.order();
  if (n > 40 || k < 3 || k > 6)
    throw std::invalid_argument("oracle_min_kcycle: instance too large (n <= 40, k <= 6)");
  OracleResult best;
  std::vector<int> stack;
  std::vector<bool> used(n, false);
  // enumerate simple cycles whose smallest vertex is the DFS root
  auto dfs = [&](auto&& self, int root, int u, int depth) -> void {
    if (depth == k) {
      auto w = g.step_weight(u, root);
      if (!w) return;
      std::int64_t total = 0;
      for (int i = 0; i + 1 < k; ++i) total += *g.step_weight(stack[i], stack[i + 1]);
      total += *w;
      if (!best.weight || total < *best.weight)
        best = OracleResult{total, CycleWitness{stack, total}};
      return;
    }
    for (auto [v, w] : g.out(u)) {
      if (v <= root || used[v]) continue;
      used[v] = true;
      stack.push_back(v);
      self(self, root, v, depth + 1);
      stack.pop_back();
      used[v] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = true;
    stack = {s};
    dfs(dfs, s, s, 1);
    used[s] = false;
  }
  return best;
}

}  // namespace oracles
}  // namespace mincycle
