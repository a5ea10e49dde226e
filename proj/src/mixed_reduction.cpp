#include "mincycle/mixed_reduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mincycle/detail/rng.hpp"
#include "mincycle/minplus.hpp"
#include "mincycle/witness.hpp"

namespace mincycle {

namespace {

constexpr std::int64_t kInf = WeightMatrix::kInf;

}  // namespace

TriangleInstance build_mixed_instance(const Graph& g, const DistanceEstimates& est,
                                      const Coloring& chi) {
  const int n = g.order();
  TriangleInstance inst;
  inst.n = 3 * n;
  inst.weight_bound = g.weight_bound();
  inst.offset = 0;
  inst.class_rule = TriangleInstance::ClassRule::All;
  inst.part.resize(3 * n);
  inst.back_map.resize(3 * n);
  for (int i = 0; i < 3 * n; ++i) {
    inst.part[i] = i / n + 1;
    inst.back_map[i] = i % n;
  }
  for (const Edge& e : g.edges()) {
    if (e.orient == EdgeOrient::Directed) {
      inst.edges.push_back({n + e.u, 2 * n + e.v, e.w, EdgeOrient::Undirected});
    } else if (chi.is_c2(e.u) && chi.is_c2(e.v)) {
      inst.edges.push_back({n + e.u, 2 * n + e.v, e.w, EdgeOrient::Undirected});
      inst.edges.push_back({n + e.v, 2 * n + e.u, e.w, EdgeOrient::Undirected});
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const std::int64_t d = est.D.at(x, y);
      if (d >= kInf) continue;
      if (x == y) {
        // zero-length walk: no step to gate on, and it contributes no edges
        inst.edges.push_back({x, n + y, d, EdgeOrient::Undirected});
        inst.edges.push_back({2 * n + x, y, d, EdgeOrient::Undirected});
        continue;
      }
      const int yp = est.pred[static_cast<std::size_t>(x) * n + y];
      if (yp >= 0 &&
          (g.step_is_arc(yp, y) || (chi.is_c1(yp) && chi.is_c2(y))))
        inst.edges.push_back({x, n + y, d, EdgeOrient::Undirected});
      const int xs = est.succ[static_cast<std::size_t>(x) * n + y];
      if (xs >= 0 &&
          (g.step_is_arc(x, xs) || (chi.is_c1(xs) && chi.is_c2(x))))
        inst.edges.push_back({2 * n + x, y, d, EdgeOrient::Undirected});
    }
  return inst;
}

GirthReport girth_mixed(const Graph& g, const GirthOptions& opt) {
  const int n = g.order();
  for (const Edge& e : g.edges())
    if (e.w < 1) throw std::invalid_argument("girth_mixed: weights must be positive");
  GirthReport rep;
  std::string last_problem = "estimates missed every cycle";

  for (int attempt = 0; attempt < 4; ++attempt) {
    const std::uint64_t seed =
        attempt == 0 ? opt.seed : detail::mix(opt.seed + 0x6d78 * attempt);
    DistanceEstimates est = sampled_estimates(g, seed, opt.threads);

    rep.deterministic = opt.deterministic && n <= kDeterministicColoringCap;
    std::vector<Coloring> colorings =
        rep.deterministic
            ? deterministic_colorings(n)
            : sample_colorings(
                  n, opt.trials > 0 ? opt.trials : default_coloring_trials(n), seed);
    rep.instances = static_cast<int>(colorings.size());

    // best claimed triangle over all colorings, then one recovery
    std::int64_t best_claimed = kInf;
    int best_a = -1, best_b = -1, best_c = -1;
    std::int64_t best_t = 0;
    bool any_triangle = false;
    std::vector<std::int64_t> d12(static_cast<std::size_t>(n) * n);
    std::vector<std::int64_t> d31(static_cast<std::size_t>(n) * n);

    for (const Coloring& chi : colorings) {
      TriangleInstance inst = build_mixed_instance(g, est, chi);
      auto reduced = threshold_and_reduce(inst, g.weight_bound(), opt.threads);
      if (!reduced) continue;
      any_triangle = true;
      if (opt.on_instance) opt.on_instance(*reduced);
      // tripartite minimum by direct scan: closing edges against each a^1
      std::fill(d12.begin(), d12.end(), kInf);
      std::fill(d31.begin(), d31.end(), kInf);
      for (const Edge& e : reduced->edges) {
        const int pu = reduced->part[e.u], pv = reduced->part[e.v];
        const std::size_t key = static_cast<std::size_t>(reduced->back_map[e.u]) * n +
                                reduced->back_map[e.v];
        if (pu == 1 && pv == 2)
          d12[key] = std::min(d12[key], e.w);
        else if (pu == 3 && pv == 1)
          d31[key] = std::min(d31[key], e.w);
      }
      for (const Edge& e : reduced->edges) {
        if (reduced->part[e.u] != 2 || reduced->part[e.v] != 3) continue;
        const int b = reduced->back_map[e.u], c = reduced->back_map[e.v];
        for (int a = 0; a < n; ++a) {
          const std::int64_t l = d12[static_cast<std::size_t>(a) * n + b];
          const std::int64_t r = d31[static_cast<std::size_t>(c) * n + a];
          if (l >= kInf || r >= kInf) continue;
          const std::int64_t claimed = l + e.w + r + reduced->offset;
          if (claimed < best_claimed) {
            best_claimed = claimed;
            best_a = a;
            best_b = b;
            best_c = c;
            best_t = reduced->t;
          }
        }
      }
    }

    if (!any_triangle) {
      if (!has_any_cycle(g)) return rep;  // genuinely acyclic
      last_problem = "estimates missed every cycle";
      continue;
    }
    if (best_a < 0) {
      last_problem = "thresholds passed but no solvable triangle remained";
      continue;
    }
    rep.t = best_t;
    auto seg1 = expand_estimate_walk(est, best_a, best_b);
    auto seg2 = expand_estimate_walk(est, best_c, best_a);
    if (seg1 && seg2) {
      std::vector<int> walk = std::move(*seg1);
      walk.insert(walk.end(), seg2->begin(), seg2->end() - 1);
      if (auto cyc = extract_cycle_from_closed_walk(g, std::move(walk))) {
        if (cyc->weight == best_claimed) {
          rep.cycle = std::move(cyc);
          return rep;
        }
        last_problem = "recovered cycle weighs " + std::to_string(cyc->weight) +
                       ", triangle claimed " + std::to_string(best_claimed);
      } else {
        last_problem = "walk expansion yielded no simple cycle";
      }
    } else {
      last_problem = "predecessor chain did not close";
    }
  }
  throw std::runtime_error("girth_mixed: retries exhausted: " + last_problem);
}

}  // namespace mincycle
