#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "mincycle/graph.hpp"
#include "mincycle/oracles.hpp"
#include "mincycle/witness.hpp"

using namespace mincycle;
using namespace mincycle::oracles;

namespace {

Graph cycle_graph(const std::vector<std::int64_t>& w, GraphKind kind) {
  const int n = static_cast<int>(w.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({i, (i + 1) % n, w[i],
                     kind == GraphKind::Directed ? EdgeOrient::Directed
                                                 : EdgeOrient::Undirected});
  return Graph(n, kind, std::move(edges));
}

}  // namespace

TEST_CASE("girth of hand instances") {
  CHECK(oracle_girth(cycle_graph({1, 1, 1}, GraphKind::Undirected)).weight == 3);
  CHECK(oracle_girth(cycle_graph({1, 2, 3, 4}, GraphKind::Undirected)).weight == 10);
  CHECK(oracle_girth(cycle_graph({2, -1, 3}, GraphKind::Directed)).weight == 4);
  Graph two = Graph::parse("p directed 2 2\na 1 2 5\na 2 1 -3\n");
  CHECK(oracle_girth(two).weight == 2);
  CHECK(!oracle_girth(Graph(3, GraphKind::Undirected,
                            {{0, 1, 1, EdgeOrient::Undirected}}))
             .weight);
}

TEST_CASE("girth witnesses validate") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Graph g = random_graph(12, 0.4, 1, 9, GraphKind::Undirected, s);
    auto res = oracle_girth(g);
    if (!res.weight) continue;
    REQUIRE(res.witness);
    CHECK(validate_cycle(g, *res.witness).empty());
    CHECK(res.witness->weight == *res.weight);
  }
}

TEST_CASE("directed girth equals exhaustive enumeration on K4") {
  Graph g = random_graph(4, 1.0, 1, 9, GraphKind::Directed, 11);
  std::int64_t best = -1;
  // every simple cycle is a closed tour over some permutation prefix
  std::vector<int> perm{0, 1, 2, 3};
  do {
    for (int len = 2; len <= 4; ++len) {
      std::int64_t w = 0;
      bool ok = true;
      for (int i = 0; i < len && ok; ++i) {
        auto step = g.step_weight(perm[i], perm[(i + 1) % len]);
        ok = step.has_value();
        if (ok) w += *step;
      }
      if (ok && (best < 0 || w < best)) best = w;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  auto res = oracle_girth(g);
  REQUIRE(res.weight);
  CHECK(*res.weight == best);
}

TEST_CASE("apsp distances and negative-cycle flag") {
  Graph path(3, GraphKind::Directed,
             {{0, 1, 2, EdgeOrient::Directed}, {1, 2, 3, EdgeOrient::Directed}});
  ApspResult r = oracle_apsp(path);
  CHECK(r.dist.at(0, 2) == 5);
  CHECK(WeightMatrix::is_inf(r.dist.at(2, 0)));
  CHECK(!r.negative_cycle);

  Graph neg(3, GraphKind::Directed,
            {{0, 1, 1, EdgeOrient::Directed},
             {1, 2, -3, EdgeOrient::Directed},
             {2, 0, 1, EdgeOrient::Directed}});
  CHECK(oracle_apsp(neg).negative_cycle);
  CHECK_THROWS_AS(oracle_girth(neg), oracles::NegativeCycleError);

  for (std::uint64_t s = 0; s < 5; ++s) {
    Graph base = random_graph(8, 0.5, 0, 9, GraphKind::Directed, s);
    Graph shifted = apply_random_potentials(base, 9, s);
    CHECK(!oracle_apsp(shifted).negative_cycle);
  }
}

TEST_CASE("minimum triangle oracle") {
  Graph k3(3, GraphKind::Undirected,
           {{0, 1, 1, EdgeOrient::Undirected},
            {1, 2, 2, EdgeOrient::Undirected},
            {0, 2, 3, EdgeOrient::Undirected}});
  CHECK(oracle_min_triangle(k3).weight == 6);
  Graph bip(4, GraphKind::Undirected,
            {{0, 2, 1, EdgeOrient::Undirected},
             {0, 3, 1, EdgeOrient::Undirected},
             {1, 2, 1, EdgeOrient::Undirected},
             {1, 3, 1, EdgeOrient::Undirected}});
  CHECK(!oracle_min_triangle(bip).weight);
}

TEST_CASE("minimum k-cycle oracle") {
  Graph c4 = cycle_graph({1, 1, 1, 1}, GraphKind::Undirected);
  CHECK(oracle_min_kcycle(c4, 4).weight == 4);
  CHECK(!oracle_min_kcycle(c4, 3).weight);
  Graph big = random_graph(41, 0.1, 1, 5, GraphKind::Undirected, 1);
  CHECK_THROWS_AS(oracle_min_kcycle(big, 4), std::invalid_argument);
}

TEST_CASE("girth is invariant under relabeling") {
  std::mt19937_64 rng(5);
  for (std::uint64_t s = 0; s < 8; ++s) {
    Graph g = random_graph(10, 0.4, 1, 9,
                           s % 2 ? GraphKind::Undirected : GraphKind::Mixed, s);
    std::vector<int> pi(g.order());
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges) {
      e.u = pi[e.u];
      e.v = pi[e.v];
    }
    Graph h(g.order(), g.kind(), std::move(edges));
    CHECK(oracle_girth(g).weight == oracle_girth(h).weight);
  }
}
