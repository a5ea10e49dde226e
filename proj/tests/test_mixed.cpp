#include <doctest.h>

#include "mincycle/mixed_reduction.hpp"
#include "mincycle/oracles.hpp"
#include "mincycle/witness.hpp"

using namespace mincycle;

TEST_CASE("arc beats the undirected triangle") {
  // 2-cycle of arcs weight (1,1) next to an undirected triangle weight (5,5,5)
  Graph g(4, GraphKind::Mixed,
          {{0, 1, 1, EdgeOrient::Directed},
           {1, 0, 1, EdgeOrient::Directed},
           {1, 2, 5, EdgeOrient::Undirected},
           {2, 3, 5, EdgeOrient::Undirected},
           {1, 3, 5, EdgeOrient::Undirected}});
  GirthReport rep = girth_mixed(g);
  REQUIRE(rep.cycle);
  CHECK(rep.cycle->weight == 2);
  CHECK(oracles::oracle_girth(g).weight == 2);
}

TEST_CASE("instance gates undirected edges by color") {
  Graph g(3, GraphKind::Mixed,
          {{0, 1, 2, EdgeOrient::Undirected}, {1, 2, 3, EdgeOrient::Directed}});
  DistanceEstimates est = sampled_estimates(g, 1);
  Coloring all_c1{std::vector<std::uint8_t>(3, 0), 0};
  TriangleInstance closed = build_mixed_instance(g, est, all_c1);
  // the arc's instance edge survives any coloring, the undirected one does not
  bool has_arc = false, has_undirected = false;
  for (const Edge& e : closed.edges) {
    if (e.u == 3 + 1 && e.v == 6 + 2) has_arc = true;
    if ((e.u == 3 + 0 && e.v == 6 + 1) || (e.u == 3 + 1 && e.v == 6 + 0))
      has_undirected = true;
  }
  CHECK(has_arc);
  CHECK(!has_undirected);

  Coloring all_c2{std::vector<std::uint8_t>(3, 1), 0};
  TriangleInstance open = build_mixed_instance(g, est, all_c2);
  int undirected_pairs = 0;
  for (const Edge& e : open.edges)
    if ((e.u == 3 + 0 && e.v == 6 + 1) || (e.u == 3 + 1 && e.v == 6 + 0))
      ++undirected_pairs;
  CHECK(undirected_pairs == 2);  // both orientations once both endpoints are C2
}

TEST_CASE("purely directed input matches the directed pipeline") {
  Graph base = random_graph(10, 0.4, 1, 9, GraphKind::Directed, 21);
  std::vector<Edge> arcs = base.edges();
  Graph as_mixed(10, GraphKind::Mixed, std::move(arcs));
  GirthOptions opt;
  opt.seed = 3;
  GirthReport mixed_rep = girth_mixed(as_mixed, opt);
  GirthReport directed_rep = girth_directed(base, opt);
  CHECK((mixed_rep.cycle ? std::optional(mixed_rep.cycle->weight) : std::nullopt) ==
        (directed_rep.cycle ? std::optional(directed_rep.cycle->weight) : std::nullopt));
}

TEST_CASE("nonpositive weights are rejected") {
  Graph g(2, GraphKind::Mixed, {{0, 1, -1, EdgeOrient::Directed}}, /*relaxed=*/true);
  CHECK_THROWS_AS(girth_mixed(g), std::invalid_argument);
}

TEST_CASE("mixed girth matches the oracle on a quick sweep") {
  for (std::uint64_t s = 0; s < 25; ++s) {
    Graph g = random_graph(4 + static_cast<int>(s % 12), 0.45, 1, 9,
                           GraphKind::Mixed, 300 + s);
    GirthOptions opt;
    opt.seed = s;
    GirthReport rep = girth_mixed(g, opt);
    auto want = oracles::oracle_girth(g).weight;
    CHECK((rep.cycle ? std::optional(rep.cycle->weight) : std::nullopt) == want);
    if (rep.cycle) CHECK(validate_cycle(g, *rep.cycle).empty());
  }
}
