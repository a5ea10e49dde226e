#include "mincycle/undirected_reduction.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mincycle/minplus.hpp"

namespace mincycle {

namespace {

constexpr std::int64_t kInf = WeightMatrix::kInf;

// Closed walk for a triangle (x^1, u^2, v^2): the tree path x..u, the edge
// (u,v), then the tree path v..x. The two tree paths diverge after their
// common prefix and never re-meet, so the extraction below only has to strip
// that prefix (and the rare back-and-forth repeat, which the walk extractor
// splices out).
std::optional<CycleWitness> cycle_from_touching_triangle(
    const Graph& g, const std::vector<int>& pred, int x, int u, int v) {
  const int n = g.order();
  std::vector<int> walk;
  for (int c = u; c != -1; c = pred[static_cast<std::size_t>(x) * n + c])
    walk.push_back(c);
  std::reverse(walk.begin(), walk.end());  // x .. u
  for (int c = v; c != x; c = pred[static_cast<std::size_t>(x) * n + c])
    walk.push_back(c);                     // v, .., first vertex after x
  return extract_cycle_from_closed_walk(g, std::move(walk));
}

}  // namespace

TriangleInstance build_undirected_instance(const Graph& g, std::int64_t t,
                                           const WeightMatrix& dist,
                                           const std::vector<int>& pred,
                                           const Coloring& chi) {
  const int n = g.order();
  const std::int64_t m_bound = g.weight_bound();
  TriangleInstance inst;
  inst.t = t;
  inst.weight_bound = m_bound;
  inst.offset = 2 * t;
  inst.class_rule = TriangleInstance::ClassRule::TouchesV1;
  inst.part.assign(n, 1);
  inst.back_map.resize(n);
  std::iota(inst.back_map.begin(), inst.back_map.end(), 0);
  std::vector<int> v2_index(n, -1);
  for (int v = 0; v < n; ++v)
    if (chi.is_c2(v)) {
      v2_index[v] = static_cast<int>(inst.back_map.size());
      inst.part.push_back(2);
      inst.back_map.push_back(v);
    }
  inst.n = static_cast<int>(inst.back_map.size());

  for (const Edge& e : g.edges())
    if (chi.is_c2(e.u) && chi.is_c2(e.v))
      inst.edges.push_back({v2_index[e.u], v2_index[e.v], e.w, EdgeOrient::Undirected});

  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      const std::int64_t d = dist.at(x, z);
      if (d == kInf || d > t || d <= t - m_bound) continue;
      const int zp = pred[static_cast<std::size_t>(x) * n + z];
      if (zp < 0) continue;  // also skips z == x
      if (chi.is_c1(zp) && chi.is_c2(z))
        inst.edges.push_back({x, v2_index[z], d - t, EdgeOrient::Undirected});
    }
  return inst;
}

GirthReport girth_undirected(const Graph& g, const GirthOptions& opt) {
  if (g.kind() != GraphKind::Undirected)
    throw std::invalid_argument("girth_undirected: graph is not undirected");
  const int n = g.order();
  GirthReport rep;

  ThresholdOutcome th = find_threshold(g, opt.threads);
  rep.t = th.t;
  if (!th.candidate) return rep;  // acyclic

  rep.deterministic = opt.deterministic && n <= kDeterministicColoringCap;
  std::vector<Coloring> colorings =
      rep.deterministic
          ? deterministic_colorings(n)
          : sample_colorings(n, opt.trials > 0 ? opt.trials : default_coloring_trials(n),
                             opt.seed);
  rep.instances = static_cast<int>(colorings.size());

  std::optional<CycleWitness> best = th.candidate;
  // Triangles of g itself cover the instance triangles that stay inside V2
  // (those certify their raw weight); one global solve dominates them all.
  if (auto tri = min_triangle(to_weight_matrix(g), MinPlusOptions{opt.threads})) {
    if (tri->weight < best->weight)
      best = CycleWitness{{tri->j, tri->i, tri->k}, tri->weight};
  }

  // reduced E12 weight by source pair, refilled per coloring
  std::vector<std::int64_t> red(static_cast<std::size_t>(n) * n);
  for (const Coloring& chi : colorings) {
    TriangleInstance inst = build_undirected_instance(g, th.t, th.dist, th.pred, chi);
    if (opt.on_instance) opt.on_instance(inst);

    std::fill(red.begin(), red.end(), kInf);
    for (const Edge& e : inst.edges)
      if (inst.part[e.u] == 1)
        red[static_cast<std::size_t>(e.u) * n + inst.back_map[e.v]] = e.w;

    // minimum triangle touching V1: x^1 against each E22 edge
    std::int64_t best_raw = kInf;
    int bx = -1, bu = -1, bv = -1;
    for (const Edge& e : inst.edges) {
      if (inst.part[e.u] != 2 || inst.part[e.v] != 2) continue;
      const int u = inst.back_map[e.u], v = inst.back_map[e.v];
      for (int x = 0; x < n; ++x) {
        const std::int64_t a = red[static_cast<std::size_t>(x) * n + u];
        const std::int64_t b = red[static_cast<std::size_t>(x) * n + v];
        if (a == kInf || b == kInf) continue;
        const std::int64_t w = a + e.w + b;
        if (w < best_raw) {
          best_raw = w;
          bx = x;
          bu = u;
          bv = v;
        }
      }
    }
    if (bx < 0) continue;
    const std::int64_t certified = best_raw + inst.offset;
    if (certified >= best->weight) continue;
    auto cyc = cycle_from_touching_triangle(g, th.pred, bx, bu, bv);
    if (cyc && cyc->weight < best->weight) best = std::move(cyc);
  }
  rep.cycle = std::move(best);
  return rep;
}

}  // namespace mincycle
