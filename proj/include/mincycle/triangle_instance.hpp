#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mincycle/graph.hpp"
#include "mincycle/weight_matrix.hpp"

namespace mincycle {

/// A reduced minimum-triangle instance: an undirected graph whose minimum
/// triangle weight, plus the recorded offset, certifies a cycle weight in the
/// source graph.
struct TriangleInstance {
  /// How the offset applies to a triangle's weight.
  enum class ClassRule {
    TouchesV1,  // add offset iff the triangle has a partition-1 node
    All,        // add offset to every triangle
  };

  int n = 0;                        // instance node count
  std::vector<Edge> edges;          // undirected, weights may be negative
  std::vector<int> part;            // partition label per node: 1, 2 or 3
  std::vector<int> back_map;        // instance node -> source vertex
  std::int64_t offset = 0;
  ClassRule class_rule = ClassRule::TouchesV1;
  std::int64_t t = 0;
  std::int64_t weight_bound = 1;    // M of the source graph

  /// Adjacency matrix (symmetric, infinite diagonal); parallel duplicates
  /// collapse to the minimum weight.
  WeightMatrix adjacency() const;

  /// As a validated (relaxed-weight) undirected Graph.
  Graph to_graph() const;

  /// Offset applicable to a triangle on instance nodes (a, b, c).
  std::int64_t triangle_offset(int a, int b, int c) const;

  /// Edge-list text in the graph-core format plus a JSON side-file.
  std::string serialize_graph() const;
  std::string serialize_sidecar() const;
  static TriangleInstance deserialize(const std::string& graph_text,
                                      const std::string& sidecar_json);
};

/// Minimum certified cycle weight over all triangles of the instance
/// (triangle weight + its applicable offset), by cubic enumeration.
/// nullopt when the instance is triangle-free.
std::optional<std::int64_t> min_certified_triangle(const TriangleInstance& inst);

/// Same minimum, computed through the partition structure: tripartite
/// instances are scanned per closing edge, two-layer instances per V2-V2
/// edge plus a dense solve on the V2-induced subgraph. Used where the cubic
/// enumeration over all nodes would be too slow.
std::optional<std::int64_t> certified_minimum(const TriangleInstance& inst);

}  // namespace mincycle
