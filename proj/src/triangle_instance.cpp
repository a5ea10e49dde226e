#include "mincycle/triangle_instance.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "mincycle/minplus.hpp"

namespace mincycle {

WeightMatrix TriangleInstance::adjacency() const {
  WeightMatrix a(n);
  for (const Edge& e : edges) {
    a.at(e.u, e.v) = std::min(a.at(e.u, e.v), e.w);
    a.at(e.v, e.u) = std::min(a.at(e.v, e.u), e.w);
  }
  return a;
}

Graph TriangleInstance::to_graph() const {
  // collapse parallel duplicates to the minimum weight; only the lightest
  // edge can participate in a minimum triangle
  std::vector<Edge> collapsed = edges;
  for (Edge& e : collapsed) {
    if (e.u > e.v) std::swap(e.u, e.v);
    e.orient = EdgeOrient::Undirected;
  }
  std::sort(collapsed.begin(), collapsed.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v, a.w) < std::tie(b.u, b.v, b.w);
  });
  collapsed.erase(std::unique(collapsed.begin(), collapsed.end(),
                              [](const Edge& a, const Edge& b) {
                                return a.u == b.u && a.v == b.v;
                              }),
                  collapsed.end());
  return Graph(n, GraphKind::Undirected, std::move(collapsed), /*relaxed_weights=*/true);
}

std::int64_t TriangleInstance::triangle_offset(int a, int b, int c) const {
  if (class_rule == ClassRule::All) return offset;
  return (part[a] == 1 || part[b] == 1 || part[c] == 1) ? offset : 0;
}

std::string TriangleInstance::serialize_graph() const { return to_graph().serialize(); }

std::string TriangleInstance::serialize_sidecar() const {
  nlohmann::json j;
  j["t"] = t;
  j["M"] = weight_bound;
  j["offset"] = offset;
  j["class_rule"] = class_rule == ClassRule::TouchesV1 ? "touches_v1" : "all";
  j["partition"] = part;
  j["back_map"] = back_map;
  return j.dump(2) + "\n";
}

TriangleInstance TriangleInstance::deserialize(const std::string& graph_text,
                                               const std::string& sidecar_json) {
  Graph g = Graph::parse(graph_text, /*relaxed_weights=*/true);
  nlohmann::json j = nlohmann::json::parse(sidecar_json);
  TriangleInstance inst;
  inst.n = g.order();
  inst.edges = g.edges();
  inst.t = j.at("t").get<std::int64_t>();
  inst.weight_bound = j.at("M").get<std::int64_t>();
  inst.offset = j.at("offset").get<std::int64_t>();
  inst.class_rule = j.at("class_rule").get<std::string>() == "all"
                        ? ClassRule::All
                        : ClassRule::TouchesV1;
  inst.part = j.at("partition").get<std::vector<int>>();
  inst.back_map = j.at("back_map").get<std::vector<int>>();
  return inst;
}

std::optional<std::int64_t> min_certified_triangle(const TriangleInstance& inst) {
  const WeightMatrix a = inst.adjacency();
  std::optional<std::int64_t> best;
  for (int i = 0; i < inst.n; ++i)
    for (int j = i + 1; j < inst.n; ++j) {
      if (WeightMatrix::is_inf(a.at(i, j))) continue;
      for (int k = j + 1; k < inst.n; ++k) {
        if (WeightMatrix::is_inf(a.at(j, k)) || WeightMatrix::is_inf(a.at(k, i))) continue;
        const std::int64_t w =
            a.at(i, j) + a.at(j, k) + a.at(k, i) + inst.triangle_offset(i, j, k);
        if (!best || w < *best) best = w;
      }
    }
  return best;
}

std::optional<std::int64_t> certified_minimum(const TriangleInstance& inst) {
  constexpr std::int64_t kInf = WeightMatrix::kInf;
  const int n = inst.n;
  std::optional<std::int64_t> best;
  auto consider = [&](std::int64_t w) {
    if (!best || w < *best) best = w;
  };
  const bool tripartite =
      std::find(inst.part.begin(), inst.part.end(), 3) != inst.part.end();
  if (tripartite) {
    std::vector<std::int64_t> d12(static_cast<std::size_t>(n) * n, kInf);
    std::vector<std::int64_t> d31(static_cast<std::size_t>(n) * n, kInf);
    std::vector<int> v1;
    for (int i = 0; i < n; ++i)
      if (inst.part[i] == 1) v1.push_back(i);
    // edges are undirected; orient each by its partition pair
    for (const Edge& e : inst.edges) {
      const bool fwd = inst.part[e.u] < inst.part[e.v];
      const int lo = fwd ? e.u : e.v, hi = fwd ? e.v : e.u;
      if (inst.part[lo] == 1 && inst.part[hi] == 2) {
        auto& slot = d12[static_cast<std::size_t>(lo) * n + hi];
        slot = std::min(slot, e.w);
      } else if (inst.part[lo] == 1 && inst.part[hi] == 3) {
        auto& slot = d31[static_cast<std::size_t>(hi) * n + lo];
        slot = std::min(slot, e.w);
      }
    }
    for (const Edge& e : inst.edges) {
      const bool fwd = inst.part[e.u] < inst.part[e.v];
      const int b = fwd ? e.u : e.v, c = fwd ? e.v : e.u;
      if (inst.part[b] != 2 || inst.part[c] != 3) continue;
      for (int a : v1) {
        const std::int64_t l = d12[static_cast<std::size_t>(a) * n + b];
        const std::int64_t r = d31[static_cast<std::size_t>(c) * n + a];
        if (l == kInf || r == kInf) continue;
        consider(l + e.w + r + inst.triangle_offset(a, b, c));
      }
    }
    return best;
  }

  // two-layer: triangles are (x^1, u^2, v^2) plus the ones inside V2
  std::vector<int> v1, v2, v2_index(n, -1);
  for (int i = 0; i < n; ++i)
    (inst.part[i] == 1 ? v1 : v2).push_back(i);
  for (std::size_t k = 0; k < v2.size(); ++k) v2_index[v2[k]] = static_cast<int>(k);
  std::vector<std::int64_t> red(static_cast<std::size_t>(n) * n, kInf);
  WeightMatrix sub(static_cast<int>(v2.size()));
  for (const Edge& e : inst.edges) {
    const int pu = inst.part[e.u], pv = inst.part[e.v];
    if (pu == 2 && pv == 2) {
      const int a = v2_index[e.u], b = v2_index[e.v];
      sub.at(a, b) = std::min(sub.at(a, b), e.w);
      sub.at(b, a) = sub.at(a, b);
    } else if (pu != pv) {
      const int x = pu == 1 ? e.u : e.v, z = pu == 1 ? e.v : e.u;
      auto& slot = red[static_cast<std::size_t>(x) * n + z];
      slot = std::min(slot, e.w);
    }
  }
  for (const Edge& e : inst.edges) {
    if (inst.part[e.u] != 2 || inst.part[e.v] != 2) continue;
    for (int x : v1) {
      const std::int64_t a = red[static_cast<std::size_t>(x) * n + e.u];
      const std::int64_t b = red[static_cast<std::size_t>(x) * n + e.v];
      if (a == kInf || b == kInf) continue;
      consider(a + e.w + b + inst.triangle_offset(x, e.u, e.v));
    }
  }
  if (auto tri = min_triangle(sub))
    consider(tri->weight + inst.triangle_offset(v2[tri->i], v2[tri->j], v2[tri->k]));
  return best;
}

}  // namespace mincycle
