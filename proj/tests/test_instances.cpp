#include <doctest.h>

#include "mincycle/coloring.hpp"
#include "mincycle/cycle_search.hpp"
#include "mincycle/directed_reduction.hpp"
#include "mincycle/mixed_reduction.hpp"
#include "mincycle/undirected_reduction.hpp"

using namespace mincycle;

namespace {

std::vector<TriangleInstance> sample_instances(std::uint64_t seed) {
  std::vector<TriangleInstance> out;
  Graph u = random_graph(10, 0.4, 1, 5, GraphKind::Undirected, seed);
  ThresholdOutcome th = find_threshold(u);
  for (const Coloring& chi : sample_colorings(10, 4, seed))
    out.push_back(build_undirected_instance(u, th.t, th.dist, th.pred, chi));

  Graph base = random_graph(8, 0.5, 1, 5, GraphKind::Directed, seed);
  Graph d = apply_random_potentials(base, 5, seed);
  DistanceEstimates est = sampled_estimates(d, seed);
  out.push_back(build_tripartite(d, est));
  if (auto red = threshold_and_reduce(build_tripartite(d, est), d.weight_bound()))
    out.push_back(*red);

  Graph m = random_graph(8, 0.5, 1, 5, GraphKind::Mixed, seed);
  DistanceEstimates mest = sampled_estimates(m, seed);
  for (const Coloring& chi : sample_colorings(8, 3, seed))
    if (auto red = threshold_and_reduce(build_mixed_instance(m, mest, chi),
                                        m.weight_bound()))
      out.push_back(*red);
  return out;
}

}  // namespace

TEST_CASE("structured certified minimum agrees with cubic enumeration") {
  for (std::uint64_t s = 0; s < 6; ++s)
    for (const TriangleInstance& inst : sample_instances(s))
      CHECK(certified_minimum(inst) == min_certified_triangle(inst));
}

TEST_CASE("instance serialization round-trips") {
  for (const TriangleInstance& inst : sample_instances(42)) {
    TriangleInstance back =
        TriangleInstance::deserialize(inst.serialize_graph(), inst.serialize_sidecar());
    CHECK(back.n == inst.n);
    CHECK(back.t == inst.t);
    CHECK(back.offset == inst.offset);
    CHECK(back.weight_bound == inst.weight_bound);
    CHECK(back.class_rule == inst.class_rule);
    CHECK(back.part == inst.part);
    CHECK(back.back_map == inst.back_map);
    CHECK(min_certified_triangle(back) == min_certified_triangle(inst));
    CHECK(certified_minimum(back) == certified_minimum(inst));
  }
}
