#include <doctest.h>

#include "mincycle/cycle_search.hpp"
#include "mincycle/oracles.hpp"
#include "mincycle/witness.hpp"

using namespace mincycle;

namespace {

constexpr std::int64_t kInf = WeightMatrix::kInf;

Graph cycle_graph(const std::vector<std::int64_t>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({i, (i + 1) % n, w[i], EdgeOrient::Undirected});
  return Graph(n, GraphKind::Undirected, std::move(edges));
}

}  // namespace

TEST_CASE("bounded search on a path takes the distance branch") {
  Graph g(3, GraphKind::Undirected,
          {{0, 1, 2, EdgeOrient::Undirected}, {1, 2, 3, EdgeOrient::Undirected}});
  SourceOutcome out = cycle_or_distances(g, 0, 5);
  CHECK(!out.cycle);
  CHECK(out.dist == std::vector<std::int64_t>{0, 2, 5});
  CHECK(out.pred[1] == 0);
  CHECK(out.pred[2] == 1);
}

TEST_CASE("unit K3 flips branch between t=1 and t=2") {
  Graph k3 = cycle_graph({1, 1, 1});
  SourceOutcome low = cycle_or_distances(k3, 0, 1);
  CHECK(!low.cycle);
  CHECK(low.dist == std::vector<std::int64_t>{0, 1, 1});
  SourceOutcome high = cycle_or_distances(k3, 0, 2);
  REQUIRE(high.cycle);
  CHECK(high.cycle->weight == 3);
  CHECK(high.cycle->weight <= 4);  // the 2t bound
  CHECK(validate_cycle(k3, *high.cycle).empty());
}

TEST_CASE("sweep outcomes") {
  Graph forest(4, GraphKind::Undirected,
               {{0, 1, 2, EdgeOrient::Undirected}, {2, 3, 5, EdgeOrient::Undirected}});
  SweepOutcome sw = min_cycle_sweep(forest, 6);
  CHECK(!sw.cycle);
  oracles::ApspResult apsp = oracles::oracle_apsp(forest);
  for (int s = 0; s < 4; ++s)
    for (int v = 0; v < 4; ++v) {
      const std::int64_t d = apsp.dist.at(s, v);
      if (d <= 6)
        CHECK(sw.dist.at(s, v) == d);
      else
        CHECK(sw.dist.at(s, v) == kInf);
    }

  CHECK(min_cycle_sweep(cycle_graph({1, 1, 1}), 2).cycle->weight == 3);

  Graph c6 = cycle_graph({1, 1, 1, 1, 1, 1});
  SweepOutcome c6sw = min_cycle_sweep(c6, 2);
  CHECK(!c6sw.cycle);
  oracles::ApspResult c6d = oracles::oracle_apsp(c6);
  for (int s = 0; s < 6; ++s)
    for (int v = 0; v < 6; ++v)
      if (c6d.dist.at(s, v) <= 2) CHECK(c6sw.dist.at(s, v) == c6d.dist.at(s, v));
}

TEST_CASE("threshold search boundary") {
  Graph forest(4, GraphKind::Undirected,
               {{0, 1, 2, EdgeOrient::Undirected}, {2, 3, 5, EdgeOrient::Undirected}});
  ThresholdOutcome th = find_threshold(forest);
  CHECK(!th.candidate);
  CHECK(th.t == 4 * 5);  // nM

  ThresholdOutcome k3 = find_threshold(cycle_graph({1, 1, 1}));
  CHECK(k3.t == 1);
  REQUIRE(k3.candidate);
  CHECK(k3.candidate->weight == 3);

  Graph c4 = cycle_graph({1, 2, 3, 4});
  ThresholdOutcome c4th = find_threshold(c4);
  REQUIRE(c4th.candidate);
  CHECK(c4th.candidate->weight <= 2 * c4th.t + 2);
  CHECK(validate_cycle(c4, *c4th.candidate).empty());
  // no cycle reported at t itself: the sweep's table branch was taken
  CHECK(!min_cycle_sweep(c4, c4th.t).cycle);
  CHECK(min_cycle_sweep(c4, c4th.t + 1).cycle);
}

TEST_CASE("closed-walk extraction and witness validation") {
  Graph k3 = cycle_graph({1, 1, 1});
  CHECK(validate_cycle(k3, CycleWitness{{0, 1, 2}, 3}).empty());
  CHECK(!validate_cycle(k3, CycleWitness{{0, 1, 2}, 4}).empty());   // wrong weight
  CHECK(!validate_cycle(k3, CycleWitness{{0, 1}, 2}).empty());      // doubled edge
  CHECK(!validate_cycle(k3, CycleWitness{{0, 1, 1, 2}, 4}).empty());

  // back-and-forth repeat gets spliced out
  auto cyc = extract_cycle_from_closed_walk(k3, {0, 1, 0, 1, 2});
  REQUIRE(cyc);
  CHECK(cyc->weight == 3);
  CHECK(!extract_cycle_from_closed_walk(k3, {0, 1, 0}));  // nothing simple remains

  Graph two = Graph::parse("p directed 2 2\na 1 2 5\na 2 1 -3\n");
  CHECK(validate_cycle(two, CycleWitness{{0, 1}, 2}).empty());
  auto two_cyc = extract_cycle_from_closed_walk(two, {0, 1});
  REQUIRE(two_cyc);
  CHECK(two_cyc->weight == 2);
}
