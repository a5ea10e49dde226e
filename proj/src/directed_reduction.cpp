#include "mincycle/directed_reduction.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "mincycle/detail/rng.hpp"
#include "mincycle/minplus.hpp"

namespace mincycle {

namespace {

constexpr std::int64_t kInf = WeightMatrix::kInf;

}  // namespace

// Used to tell "truly acyclic" apart from "the sampled estimates missed the
// cycle", so the no-cycle answer is never probabilistic.
bool has_any_cycle(const Graph& g) {
  const int n = g.order();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::pair<int, std::size_t>> stack;
  for (int r = 0; r < n; ++r) {
    if (state[r]) continue;
    stack.push_back({r, 0});
    state[r] = 1;
    while (!stack.empty()) {
      auto& [u, idx] = stack.back();
      if (idx < g.out(u).size()) {
        int v = g.out(u)[idx++].first;
        if (g.kind() != GraphKind::Directed && !g.step_is_arc(u, v) &&
            !stack.empty() && stack.size() >= 2 && stack[stack.size() - 2].first == v)
          continue;  // undirected edge back to the DFS parent is not a cycle
        if (state[v] == 1) return true;
        if (state[v] == 0) {
          state[v] = 1;
          stack.push_back({v, 0});
        }
      } else {
        state[u] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

std::optional<std::vector<int>> expand_estimate_walk(const DistanceEstimates& est,
                                                     int x, int y) {
  const int n = est.D.size();
  std::vector<int> rev{y};
  int cur = y;
  int guard = 3 * n + 3;
  while (cur != x) {
    if (--guard < 0) return std::nullopt;
    cur = est.pred[static_cast<std::size_t>(x) * n + cur];
    if (cur < 0) return std::nullopt;
    rev.push_back(cur);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

DistanceEstimates sampled_estimates(const Graph& g, std::uint64_t seed, int threads) {
  (void)threads;  // the stage loops below are already cheap at library scale
  const int n = g.order();
  DistanceEstimates est;
  est.D = WeightMatrix(n);
  est.pred.assign(static_cast<std::size_t>(n) * n, -1);
  est.succ.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) est.D.at(i, i) = 0;
  for (int u = 0; u < n; ++u)
    for (auto [v, w] : g.out(u))
      if (w < est.D.at(u, v)) {
        est.D.at(u, v) = w;
        est.pred[static_cast<std::size_t>(u) * n + v] = u;
        est.succ[static_cast<std::size_t>(u) * n + v] = v;
      }
  if (n < 2) return est;

  const int stages =
      static_cast<int>(std::ceil(std::log(static_cast<double>(n)) / std::log(1.5)));
  const double ln_n = std::log(static_cast<double>(std::max(n, 2)));
  std::vector<int> b_prev(n);
  for (int i = 0; i < n; ++i) b_prev[i] = i;
  double p_prev = 1.0;
  std::vector<char> in_b(n);
  std::vector<std::int64_t> d_old;

  for (int ell = 1; ell <= stages; ++ell) {
    const double p = std::min(1.0, 9.0 * std::pow(2.0 / 3.0, ell) * ln_n);
    const double keep = std::min(1.0, p / p_prev);
    std::mt19937_64 rng(detail::mix(seed ^ detail::mix(0x5741 + ell)));
    std::bernoulli_distribution coin(keep);
    std::vector<int> b;
    for (int v : b_prev)
      if (keep >= 1.0 || coin(rng)) b.push_back(v);
    est.stages.push_back(b);
    p_prev = p;
    b_prev = b;
    if (b.empty()) continue;

    std::fill(in_b.begin(), in_b.end(), 0);
    for (int v : b) in_b[v] = 1;
    // stage-start snapshot: all reads below go through the old values
    d_old.assign(est.D.row(0), est.D.row(0) + static_cast<std::size_t>(n) * n);
    const std::vector<int> pred_old = est.pred;
    const std::vector<int> succ_old = est.succ;
    auto old_at = [&](int i, int j) {
      return d_old[static_cast<std::size_t>(i) * n + j];
    };
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (!in_b[u] && !in_b[v]) continue;
        std::int64_t best = est.D.at(u, v);
        int best_b = -1;
        for (int bb : b) {
          const std::int64_t cand = WeightMatrix::add(old_at(u, bb), old_at(bb, v));
          if (cand < best) {
            best = cand;
            best_b = bb;
          }
        }
        if (best_b < 0) continue;
        est.D.at(u, v) = best;
        est.pred[static_cast<std::size_t>(u) * n + v] =
            best_b == v ? pred_old[static_cast<std::size_t>(u) * n + best_b]
                        : pred_old[static_cast<std::size_t>(best_b) * n + v];
        est.succ[static_cast<std::size_t>(u) * n + v] =
            best_b == u ? succ_old[static_cast<std::size_t>(best_b) * n + v]
                        : succ_old[static_cast<std::size_t>(u) * n + best_b];
      }
  }
  return est;
}

bool detect_negative_cycle(const DistanceEstimates& est, int threads) {
  const WeightMatrix p = distance_product(est.D, est.D, MinPlusOptions{threads});
  for (int v = 0; v < p.size(); ++v)
    if (!WeightMatrix::is_inf(p.at(v, v)) && p.at(v, v) < 0) return true;
  return false;
}

TriangleInstance build_tripartite(const Graph& g, const DistanceEstimates& est) {
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
  for (int u = 0; u < n; ++u)
    for (auto [v, w] : g.out(u))
      inst.edges.push_back({n + u, 2 * n + v, w, EdgeOrient::Undirected});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const std::int64_t d = est.D.at(x, y);
      if (WeightMatrix::is_inf(d)) continue;
      inst.edges.push_back({x, n + y, d, EdgeOrient::Undirected});
      inst.edges.push_back({2 * n + x, y, d, EdgeOrient::Undirected});
    }
  return inst;
}

std::optional<TriangleInstance> threshold_and_reduce(const TriangleInstance& inst,
                                                     std::int64_t m_bound,
                                                     int threads) {
  (void)threads;
  const int n = inst.n / 3;
  WeightMatrix d12(n), d31(n), closing(n);
  for (const Edge& e : inst.edges) {
    const int pu = inst.part[e.u], pv = inst.part[e.v];
    const int su = inst.back_map[e.u], sv = inst.back_map[e.v];
    if (pu == 1 && pv == 2)
      d12.at(su, sv) = std::min(d12.at(su, sv), e.w);
    else if (pu == 2 && pv == 3)
      closing.at(su, sv) = std::min(closing.at(su, sv), e.w);
    else if (pu == 3 && pv == 1)
      d31.at(su, sv) = std::min(d31.at(su, sv), e.w);
  }
  const std::int64_t hi_limit = m_bound * n;
  if (!threshold_triangle_exists(d12, d31, closing, hi_limit)) return std::nullopt;
  std::int64_t t;
  if (threshold_triangle_exists(d12, d31, closing, 0)) {
    t = 0;
  } else {
    std::int64_t lo = 0, hi = hi_limit;  // lo: no triangle; hi: triangle
    while (hi - lo > 1) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      (threshold_triangle_exists(d12, d31, closing, mid) ? hi : lo) = mid;
    }
    t = hi;
  }

  TriangleInstance out = inst;
  out.edges.clear();
  out.t = t;
  out.offset = 2 * t;
  for (const Edge& e : inst.edges) {
    const bool v1_incident = inst.part[e.u] == 1 || inst.part[e.v] == 1;
    if (!v1_incident) {
      out.edges.push_back(e);
      continue;
    }
    if (2 * e.w > 2 * t + m_bound || e.w < t - m_bound) continue;
    Edge shifted = e;
    shifted.w -= t;
    out.edges.push_back(shifted);
  }
  return out;
}

GirthReport girth_directed(const Graph& g, const GirthOptions& opt) {
  if (g.kind() != GraphKind::Directed)
    throw std::invalid_argument("girth_directed: graph is not directed");
  const int n = g.order();
  GirthReport rep;
  std::string last_problem = "estimates missed every cycle";
  for (int attempt = 0; attempt < 4; ++attempt) {
    const std::uint64_t seed =
        attempt == 0 ? opt.seed : detail::mix(opt.seed + 0x9e37 * attempt);
    DistanceEstimates est = sampled_estimates(g, seed, opt.threads);
    if (detect_negative_cycle(est, opt.threads)) throw NegativeCycleError();
    TriangleInstance inst = build_tripartite(g, est);
    auto reduced = threshold_and_reduce(inst, g.weight_bound(), opt.threads);
    if (!reduced) {
      if (!has_any_cycle(g)) {
        rep.t = 0;
        rep.instances = attempt + 1;
        return rep;  // genuinely acyclic
      }
      continue;  // cyclic but unseen by the estimates: rerun
    }
    rep.t = reduced->t;
    rep.instances = attempt + 1;
    if (opt.on_instance) opt.on_instance(*reduced);
    auto tri = min_triangle(reduced->adjacency(), MinPlusOptions{opt.threads});
    if (!tri) {
      last_problem = "threshold saw a triangle the solver did not";
      continue;
    }
    const std::int64_t claimed = tri->weight + reduced->offset;
    int a = -1, b = -1, c = -1;
    for (int node : {tri->i, tri->j, tri->k}) {
      (reduced->part[node] == 1 ? a : reduced->part[node] == 2 ? b : c) =
          reduced->back_map[node];
    }
    auto seg1 = expand_estimate_walk(est, a, b);
    auto seg2 = expand_estimate_walk(est, c, a);
    if (seg1 && seg2) {
      std::vector<int> walk = std::move(*seg1);
      walk.insert(walk.end(), seg2->begin(), seg2->end() - 1);
      if (auto cyc = extract_cycle_from_closed_walk(g, std::move(walk))) {
        if (cyc->weight == claimed) {
          rep.cycle = std::move(cyc);
          return rep;
        }
        last_problem = "recovered cycle weighs " + std::to_string(cyc->weight) +
                       ", triangle claimed " + std::to_string(claimed);
      } else {
        last_problem = "walk expansion yielded no simple cycle";
      }
    } else {
      last_problem = "predecessor chain did not close";
    }
  }
  throw std::runtime_error("girth_directed: retries exhausted: " + last_problem);
}

}  // namespace mincycle
