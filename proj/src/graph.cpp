#include "mincycle/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>
#include <unordered_set>

namespace mincycle {

namespace {

constexpr std::int64_t kWeightProductCap = std::int64_t{1} << 60;

const char* kind_name(GraphKind k) {
  switch (k) {
    case GraphKind::Undirected: return "undirected";
    case GraphKind::Directed: return "directed";
    case GraphKind::Mixed: return "mixed";
  }
  return "?";
}

}  // namespace

Graph::Graph(int n, GraphKind kind, std::vector<Edge> edges, bool relaxed_weights)
    : n_(n), kind_(kind), edges_(std::move(edges)) {
  if (n_ < 0) throw GraphError("vertex count must be nonnegative");
  std::unordered_set<std::uint64_t> undirected_pairs;   // key by sorted pair
  std::unordered_set<std::uint64_t> directed_pairs;     // key by ordered pair
  std::unordered_set<std::uint64_t> any_pairs;          // sorted pair -> any directed arc seen
  auto sorted_key = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n_) + b;
  };
  auto ordered_key = [&](int a, int b) {
    return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n_) + b;
  };

  std::int64_t max_abs = 1;
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw GraphError("edge endpoint out of range");
    if (e.u == e.v) throw GraphError("self-loops are not allowed");
    if (e.orient == EdgeOrient::Undirected) {
      if (kind_ == GraphKind::Directed)
        throw GraphError("undirected edge in a directed graph");
      if (!undirected_pairs.insert(sorted_key(e.u, e.v)).second)
        throw GraphError("duplicate undirected edge (" + std::to_string(e.u + 1) + "," +
                         std::to_string(e.v + 1) + ")");
      if (directed_pairs.count(ordered_key(e.u, e.v)) ||
          directed_pairs.count(ordered_key(e.v, e.u)))
        throw GraphError("vertex pair carries both a directed and an undirected edge");
      if (!relaxed_weights && e.w < 1)
        throw GraphError("undirected edge weight must be >= 1, got " + std::to_string(e.w));
    } else {
      if (kind_ == GraphKind::Undirected)
        throw GraphError("directed arc in an undirected graph");
      if (!directed_pairs.insert(ordered_key(e.u, e.v)).second)
        throw GraphError("duplicate directed arc (" + std::to_string(e.u + 1) + "," +
                         std::to_string(e.v + 1) + ")");
      if (undirected_pairs.count(sorted_key(e.u, e.v)))
        throw GraphError("vertex pair carries both a directed and an undirected edge");
      if (!relaxed_weights && kind_ == GraphKind::Mixed && e.w < 1)
        throw GraphError("mixed-graph weight must be >= 1, got " + std::to_string(e.w));
    }
    max_abs = std::max<std::int64_t>(max_abs, std::abs(e.w));
  }
  weight_bound_ = max_abs;
  if (n_ > 0 && weight_bound_ > kWeightProductCap / (4 * std::int64_t{n_}))
    throw GraphError("weight magnitudes too large: M*n must fit in 62 bits");

  adj_.assign(n_, {});
  step_keys_.reserve(edges_.size() * 2);
  std::vector<std::pair<std::uint64_t, std::pair<std::int64_t, char>>> steps;
  for (const Edge& e : edges_) {
    adj_[e.u].push_back({e.v, e.w});
    steps.push_back({ordered_key(e.u, e.v), {e.w, e.orient == EdgeOrient::Directed}});
    if (e.orient == EdgeOrient::Undirected) {
      adj_[e.v].push_back({e.u, e.w});
      steps.push_back({ordered_key(e.v, e.u), {e.w, 0}});
    }
  }
  std::sort(steps.begin(), steps.end());
  step_keys_.resize(steps.size());
  step_weights_.resize(steps.size());
  step_arcs_.resize(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    step_keys_[i] = steps[i].first;
    step_weights_[i] = steps[i].second.first;
    step_arcs_[i] = steps[i].second.second;
  }
}

int Graph::find_step(int u, int v) const {
  std::uint64_t key = static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n_) + v;
  auto it = std::lower_bound(step_keys_.begin(), step_keys_.end(), key);
  if (it == step_keys_.end() || *it != key) return -1;
  return static_cast<int>(it - step_keys_.begin());
}

std::optional<std::int64_t> Graph::step_weight(int u, int v) const {
  int i = find_step(u, v);
  if (i < 0) return std::nullopt;
  return step_weights_[i];
}

bool Graph::step_is_arc(int u, int v) const {
  int i = find_step(u, v);
  return i >= 0 && step_arcs_[i];
}

Graph Graph::parse(const std::string& text, bool relaxed_weights) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int n = 0;
  long long m = 0;
  GraphKind kind = GraphKind::Undirected;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& what) {
    throw GraphError("parse error at line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header) fail("duplicate header");
      std::string kname;
      if (!(ls >> kname >> n >> m)) fail("malformed header, expected 'p <kind> <n> <m>'");
      if (kname == "undirected") kind = GraphKind::Undirected;
      else if (kname == "directed") kind = GraphKind::Directed;
      else if (kname == "mixed") kind = GraphKind::Mixed;
      else fail("unknown graph kind '" + kname + "'");
      if (n < 0 || m < 0) fail("negative counts in header");
      have_header = true;
      continue;
    }
    if (tag == "e" || tag == "a") {
      if (!have_header) fail("edge line before header");
      long long u, v, w;
      if (!(ls >> u >> v >> w)) fail("malformed edge line");
      if (u < 1 || u > n || v < 1 || v > n) fail("vertex id out of range [1," + std::to_string(n) + "]");
      if (tag == "e" && kind == GraphKind::Directed)
        fail("'e' line in a directed graph");
      if (tag == "a" && kind == GraphKind::Undirected)
        fail("'a' line in an undirected graph");
      edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1), w,
                       tag == "e" ? EdgeOrient::Undirected : EdgeOrient::Directed});
      continue;
    }
    fail("unknown line tag '" + tag + "'");
  }
  ++lineno;
  if (!have_header) fail("missing header");
  if (static_cast<long long>(edges.size()) != m)
    fail("header declares " + std::to_string(m) + " edges, file has " +
         std::to_string(edges.size()));
  try {
    return Graph(n, kind, std::move(edges), relaxed_weights);
  } catch (const GraphError& e) {
    throw GraphError(std::string("invalid graph: ") + e.what());
  }
}

std::string Graph::serialize() const {
  std::ostringstream out;
  out << "p " << kind_name(kind_) << ' ' << n_ << ' ' << edges_.size() << '\n';
  for (const Edge& e : edges_) {
    out << (e.orient == EdgeOrient::Undirected ? 'e' : 'a') << ' ' << e.u + 1 << ' '
        << e.v + 1 << ' ' << e.w << '\n';
  }
  return out.str();
}

WeightMatrix to_weight_matrix(const Graph& g, bool symmetrize) {
  (void)symmetrize;  // undirected edges already permit both directions
  WeightMatrix a(g.order());
  for (const Edge& e : g.edges()) {
    a.at(e.u, e.v) = std::min(a.at(e.u, e.v), e.w);
    if (e.orient == EdgeOrient::Undirected)
      a.at(e.v, e.u) = std::min(a.at(e.v, e.u), e.w);
  }
  return a;
}

Graph random_graph(int n, double edge_probability, std::int64_t weight_low,
                   std::int64_t weight_high, GraphKind kind, std::uint64_t seed) {
  if (weight_low > weight_high) throw GraphError("infeasible weight bounds");
  if (kind != GraphKind::Directed && weight_low < 1)
    throw GraphError("undirected/mixed weights must be >= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(std::clamp(edge_probability, 0.0, 1.0));
  std::uniform_int_distribution<std::int64_t> weight(weight_low, weight_high);
  std::vector<Edge> edges;
  if (kind == GraphKind::Directed) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && keep(rng))
          edges.push_back({u, v, weight(rng), EdgeOrient::Directed});
  } else if (kind == GraphKind::Undirected) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (keep(rng))
          edges.push_back({u, v, weight(rng), EdgeOrient::Undirected});
  } else {
    std::uniform_int_distribution<int> shape(0, 3);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (!keep(rng)) continue;
        switch (shape(rng)) {
          case 0:
            edges.push_back({u, v, weight(rng), EdgeOrient::Undirected});
            break;
          case 1:
            edges.push_back({u, v, weight(rng), EdgeOrient::Directed});
            break;
          case 2:
            edges.push_back({v, u, weight(rng), EdgeOrient::Directed});
            break;
          default:
            edges.push_back({u, v, weight(rng), EdgeOrient::Directed});
            edges.push_back({v, u, weight(rng), EdgeOrient::Directed});
            break;
        }
      }
  }
  return Graph(n, kind, std::move(edges));
}

Graph apply_random_potentials(const Graph& g, std::int64_t potential_bound,
                              std::uint64_t seed) {
  if (g.kind() != GraphKind::Directed)
    throw GraphError("apply_random_potentials requires a directed graph");
  for (const Edge& e : g.edges())
    if (e.w < 0) throw GraphError("apply_random_potentials requires nonnegative weights");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pot(0, potential_bound);
  std::vector<std::int64_t> p(g.order());
  for (auto& x : p) x = pot(rng);
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) e.w += p[e.u] - p[e.v];
  return Graph(g.order(), GraphKind::Directed, std::move(edges));
}

}  // namespace mincycle
