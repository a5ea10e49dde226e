#include <doctest.h>

#include "mincycle/graph.hpp"
#include "mincycle/oracles.hpp"

using namespace mincycle;

namespace {
const char* kK3 = "p undirected 3 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\n";
}

TEST_CASE("parse smallest legal instance") {
  Graph g = Graph::parse(kK3);
  CHECK(g.order() == 3);
  CHECK(g.kind() == GraphKind::Undirected);
  CHECK(g.edges().size() == 3);
  CHECK(g.weight_bound() == 1);
  CHECK(g.step_weight(0, 1) == 1);
  CHECK(g.step_weight(1, 0) == 1);  // undirected permits both directions
}

TEST_CASE("parse antiparallel arcs") {
  Graph g = Graph::parse("p directed 2 2\na 1 2 5\na 2 1 -3\n");
  CHECK(g.step_weight(0, 1) == 5);
  CHECK(g.step_weight(1, 0) == -3);
  CHECK(g.step_is_arc(0, 1));
  CHECK(g.weight_bound() == 5);
}

TEST_CASE("validation rejects malformed graphs") {
  CHECK_THROWS_AS(Graph::parse("p undirected 2 2\ne 1 2 1\ne 1 2 2\n"), GraphError);
  CHECK_THROWS_AS(Graph::parse("p undirected 2 1\ne 1 1 1\n"), GraphError);
  CHECK_THROWS_AS(Graph::parse("p undirected 2 1\ne 1 2 0\n"), GraphError);
  CHECK_THROWS_AS(Graph::parse("p mixed 2 2\ne 1 2 1\na 1 2 1\n"), GraphError);
  CHECK_THROWS_AS(Graph::parse("p directed 2 1\ne 1 2 1\n"), GraphError);
  CHECK_THROWS_AS(Graph::parse("p undirected 2 2\ne 1 2 1\n"), GraphError);  // count lie
  CHECK_THROWS_AS(Graph::parse("e 1 2 1\n"), GraphError);                   // no header
  CHECK_NOTHROW(Graph::parse("p undirected 2 1\ne 1 2 0\n", /*relaxed=*/true));
}

TEST_CASE("serialize round-trips") {
  for (const char* text :
       {kK3, "p directed 3 2\na 1 2 4\na 3 1 -2\n", "p mixed 3 2\ne 1 2 2\na 2 3 3\n"}) {
    Graph g = Graph::parse(text);
    CHECK(Graph::parse(g.serialize()).serialize() == g.serialize());
  }
}

TEST_CASE("weight matrix of K3 and of a single arc") {
  Graph k3(3, GraphKind::Undirected,
           {{0, 1, 1, EdgeOrient::Undirected},
            {1, 2, 2, EdgeOrient::Undirected},
            {0, 2, 3, EdgeOrient::Undirected}});
  WeightMatrix a = to_weight_matrix(k3);
  CHECK(a.at(0, 1) == 1);
  CHECK(a.at(1, 0) == 1);
  CHECK(a.at(2, 1) == 2);
  CHECK(WeightMatrix::is_inf(a.at(0, 0)));

  Graph arc(2, GraphKind::Directed, {{0, 1, 4, EdgeOrient::Directed}});
  WeightMatrix b = to_weight_matrix(arc);
  CHECK(b.at(0, 1) == 4);
  CHECK(WeightMatrix::is_inf(b.at(1, 0)));

  Graph mix(2, GraphKind::Mixed, {{0, 1, 7, EdgeOrient::Undirected}});
  WeightMatrix c = to_weight_matrix(mix, /*symmetrize=*/true);
  CHECK(c.at(0, 1) == 7);
  CHECK(c.at(1, 0) == 7);
}

TEST_CASE("random_graph is deterministic and respects bounds") {
  Graph a = random_graph(20, 0.3, 1, 10, GraphKind::Undirected, 7);
  Graph b = random_graph(20, 0.3, 1, 10, GraphKind::Undirected, 7);
  CHECK(a.serialize() == b.serialize());
  CHECK(oracles::oracle_girth(a).weight == oracles::oracle_girth(b).weight);
  Graph k5 = random_graph(5, 1.0, 1, 1, GraphKind::Undirected, 1);
  CHECK(k5.edges().size() == 10);
  CHECK(random_graph(1, 1.0, 1, 5, GraphKind::Mixed, 1).edges().empty());
  CHECK(random_graph(0, 1.0, 1, 5, GraphKind::Directed, 1).edges().empty());
}

TEST_CASE("potential shift keeps every cycle weight") {
  Graph g(3, GraphKind::Directed,
          {{0, 1, 1, EdgeOrient::Directed},
           {1, 2, 1, EdgeOrient::Directed},
           {2, 0, 2, EdgeOrient::Directed}});
  CHECK(apply_random_potentials(g, 0, 9).serialize() == g.serialize());
  for (std::uint64_t s = 0; s < 8; ++s) {
    Graph shifted = apply_random_potentials(g, 10, s);
    CHECK(oracles::oracle_girth(shifted).weight == 4);
  }
  for (std::uint64_t s = 0; s < 8; ++s) {
    Graph base = random_graph(10, 0.4, 1, 9, GraphKind::Directed, s);
    Graph shifted = apply_random_potentials(base, 9, s + 100);
    CHECK(oracles::oracle_girth(shifted).weight == oracles::oracle_girth(base).weight);
  }
}
