#include <doctest.h>

#include <algorithm>

#include "mincycle/oracles.hpp"
#include "mincycle/undirected_reduction.hpp"

using namespace mincycle;

namespace {

Graph cycle_graph(const std::vector<std::int64_t>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({i, (i + 1) % n, w[i], EdgeOrient::Undirected});
  return Graph(n, GraphKind::Undirected, std::move(edges));
}

}  // namespace

TEST_CASE("all-C1 coloring yields an empty instance") {
  Graph g = random_graph(8, 0.5, 1, 5, GraphKind::Undirected, 1);
  ThresholdOutcome th = find_threshold(g);
  Coloring all_c1{std::vector<std::uint8_t>(8, 0), 0};
  TriangleInstance inst = build_undirected_instance(g, th.t, th.dist, th.pred, all_c1);
  CHECK(inst.edges.empty());
  CHECK(inst.n == 8);  // V2 empty, V1 = all vertices
}

TEST_CASE("boundary-distance edges keep only the (t-M, t] window") {
  // chains from vertex 0 reaching distances 5, 6, 10, 11 with M = 5
  std::vector<Edge> edges{
      {0, 1, 5, EdgeOrient::Undirected},                                    // d=5
      {0, 2, 3, EdgeOrient::Undirected}, {2, 3, 3, EdgeOrient::Undirected}, // d=6
      {0, 4, 5, EdgeOrient::Undirected}, {4, 5, 5, EdgeOrient::Undirected}, // d=10
      {0, 6, 4, EdgeOrient::Undirected}, {6, 7, 4, EdgeOrient::Undirected},
      {7, 8, 3, EdgeOrient::Undirected}};                                   // d=11
  Graph g(9, GraphKind::Undirected, std::move(edges));
  REQUIRE(g.weight_bound() == 5);
  const std::int64_t t = 10;
  SweepOutcome sw = min_cycle_sweep(g, t);
  REQUIRE(!sw.cycle);
  std::vector<std::uint8_t> color(9, 0);
  for (int v : {1, 3, 5, 8}) color[v] = 1;  // the chain tips are C2
  TriangleInstance inst =
      build_undirected_instance(g, t, sw.dist, sw.pred, Coloring{color, 0});
  std::vector<std::int64_t> from_zero;
  for (const Edge& e : inst.edges)
    if (inst.part[e.u] == 1 && e.u == 0) from_zero.push_back(e.w);
  std::sort(from_zero.begin(), from_zero.end());
  // d=5 dropped (<= t-M), d=11 dropped (> t); 6 and 10 shift by -t
  CHECK(from_zero == std::vector<std::int64_t>{-4, 0});
  CHECK(inst.offset == 2 * t);
}

TEST_CASE("a successful coloring certifies the C5 girth") {
  Graph c5 = cycle_graph({1, 1, 1, 1, 1});
  ThresholdOutcome th = find_threshold(c5);
  CHECK(th.t == 2);
  std::int64_t best = WeightMatrix::kInf;
  for (const Coloring& chi : deterministic_colorings(5)) {
    TriangleInstance inst = build_undirected_instance(c5, th.t, th.dist, th.pred, chi);
    if (auto w = min_certified_triangle(inst)) best = std::min(best, *w);
  }
  CHECK(best == 5);
}

TEST_CASE("girth of hand instances") {
  auto weight = [](const GirthReport& r) {
    REQUIRE(r.cycle);
    return r.cycle->weight;
  };
  CHECK(weight(girth_undirected(cycle_graph({1, 1, 1}))) == 3);
  CHECK(weight(girth_undirected(cycle_graph({1, 2, 3, 4}))) == 10);
  CHECK(weight(girth_undirected(cycle_graph({1, 1, 1, 1, 1}))) == 5);
  Graph forest(4, GraphKind::Undirected, {{0, 1, 3, EdgeOrient::Undirected}});
  CHECK(!girth_undirected(forest).cycle);
}

TEST_CASE("deterministic mode matches the oracle without luck") {
  for (std::uint64_t s = 0; s < 12; ++s) {
    Graph g = random_graph(4 + static_cast<int>(s) * 3 % 20, 0.4, 1, 9,
                           GraphKind::Undirected, s);
    GirthOptions opt;
    opt.deterministic = true;
    GirthReport rep = girth_undirected(g, opt);
    CHECK(rep.deterministic);
    auto want = oracles::oracle_girth(g).weight;
    CHECK((rep.cycle ? std::optional(rep.cycle->weight) : std::nullopt) == want);
  }
}

TEST_CASE("randomized mode matches the oracle on a quick sweep") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Graph g = random_graph(16, 0.35, 1, 20, GraphKind::Undirected, 900 + s);
    GirthOptions opt;
    opt.seed = s;
    GirthReport rep = girth_undirected(g, opt);
    auto want = oracles::oracle_girth(g).weight;
    CHECK((rep.cycle ? std::optional(rep.cycle->weight) : std::nullopt) == want);
    if (rep.cycle) CHECK(validate_cycle(g, *rep.cycle).empty());
  }
}
