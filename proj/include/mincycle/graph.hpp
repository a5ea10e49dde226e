#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mincycle/weight_matrix.hpp"

namespace mincycle {

enum class GraphKind { Undirected, Directed, Mixed };

enum class EdgeOrient { Undirected, Directed };

struct Edge {
  int u = 0;
  int v = 0;
  std::int64_t w = 0;
  EdgeOrient orient = EdgeOrient::Undirected;
};

class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Simple weighted graph with per-edge orientation. Vertices are 0-indexed
/// internally; the 1-indexed convention exists only in the file format.
/// Immutable after construction and safe to read from multiple threads.
class Graph {
 public:
  /// Validates simplicity and (unless relaxed_weights) the per-kind weight
  /// range: undirected/mixed weights in [1,M], directed in [-M,M].
  /// relaxed_weights admits nonpositive undirected weights; reduced triangle
  /// instances need this.
  Graph(int n, GraphKind kind, std::vector<Edge> edges, bool relaxed_weights = false);

  static Graph parse(const std::string& text, bool relaxed_weights = false);
  std::string serialize() const;

  int order() const { return n_; }
  GraphKind kind() const { return kind_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::int64_t weight_bound() const { return weight_bound_; }  // M

  /// Weight of the unique edge permitting travel u -> v, if any.
  std::optional<std::int64_t> step_weight(int u, int v) const;

  /// True when travel u -> v uses a directed arc (as opposed to an
  /// undirected edge). Only meaningful when step_weight(u, v) is set.
  bool step_is_arc(int u, int v) const;

  /// Out-neighbors of u: pairs (v, w) over all travel-permitting edges.
  const std::vector<std::pair<int, std::int64_t>>& out(int u) const { return adj_[u]; }

 private:
  int n_;
  GraphKind kind_;
  std::vector<Edge> edges_;
  std::int64_t weight_bound_ = 1;
  std::vector<std::vector<std::pair<int, std::int64_t>>> adj_;
  // ordered-pair lookup, sorted by key = u * n + v
  std::vector<std::uint64_t> step_keys_;
  std::vector<std::int64_t> step_weights_;
  std::vector<char> step_arcs_;
  int find_step(int u, int v) const;
};

/// Adjacency matrix over the (min,+) semiring: A[i][j] = w(i,j) when travel
/// i -> j is permitted, +inf otherwise, +inf on the diagonal. With symmetrize,
/// undirected edges are expanded into arc pairs (they already permit both
/// directions, so the matrix is unchanged; the flag exists for call-site
/// clarity when feeding a mixed graph into directed machinery).
WeightMatrix to_weight_matrix(const Graph& g, bool symmetrize = false);

/// Seeded Erdos-Renyi style generator; deterministic for a fixed seed.
Graph random_graph(int n, double edge_probability, std::int64_t weight_low,
                   std::int64_t weight_high, GraphKind kind, std::uint64_t seed);

/// Reweights a nonnegative directed graph by random node potentials:
/// w'(u,v) = w(u,v) + p(u) - p(v). Every cycle keeps its weight, so the
/// output has negative edges but no negative cycles. Test generator only.
Graph apply_random_potentials(const Graph& g, std::int64_t potential_bound,
                              std::uint64_t seed);

}  // namespace mincycle
