#include "mincycle/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <optional>
#include <random>
#include <set>
#include <utility>

#include "mincycle/coloring.hpp"
#include "mincycle/cycle_search.hpp"
#include "mincycle/detail/rng.hpp"
#include "mincycle/directed_reduction.hpp"
#include "mincycle/graph.hpp"
#include "mincycle/kcycle.hpp"
#include "mincycle/minplus.hpp"
#include "mincycle/mixed_reduction.hpp"
#include "mincycle/oracles.hpp"
#include "mincycle/undirected_reduction.hpp"
#include "mincycle/witness.hpp"

namespace mincycle::verify {

namespace {

constexpr std::int64_t kInf = WeightMatrix::kInf;
constexpr std::int64_t kMChoices[] = {1, 5, 20};
constexpr double kDensChoices[] = {0.1, 0.3, 0.7};

void record(Check& c, bool pass, const std::string& why) {
  ++c.total;
  if (pass)
    ++c.passed;
  else if (c.note.empty())
    c.note = why;
}

std::mt19937_64 item_rng(std::uint64_t seed, std::uint64_t tag, int i) {
  return std::mt19937_64(detail::mix(seed ^ detail::mix(tag + 0x9e3779b97f4a7c15ULL * (i + 1))));
}

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return static_cast<int>(std::uniform_int_distribution<int>(lo, hi)(rng));
}

bool weights_within(const TriangleInstance& inst) {
  for (const Edge& e : inst.edges)
    if (e.w < -inst.weight_bound || e.w > inst.weight_bound) return false;
  return true;
}

std::string match_oracle(const Graph& g, const GirthReport& rep,
                         const oracles::OracleResult& o) {
  if (!o.weight) return rep.cycle ? "pipeline found a cycle in an acyclic graph" : "";
  if (!rep.cycle) return "pipeline reported no cycle, oracle found one";
  if (rep.cycle->weight != *o.weight)
    return "weight " + std::to_string(rep.cycle->weight) + " vs oracle " +
           std::to_string(*o.weight);
  std::string bad = validate_cycle(g, *rep.cycle);
  if (!bad.empty()) return "invalid witness: " + bad;
  return "";
}

template <class Fn>
void oracle_sweep(Check& match, Check& weights, int seeds, std::uint64_t seed,
                  std::uint64_t tag, Fn run_one) {
  for (int i = 0; i < seeds; ++i) {
    auto rng = item_rng(seed, tag, i);
    try {
      run_one(i, rng, match, weights);
    } catch (const std::exception& ex) {
      record(match, false, std::string("exception: ") + ex.what());
    }
  }
}

}  // namespace

std::vector<Check> suite_undirected(int seeds, std::uint64_t seed, int threads) {
  Check match{"girth equals oracle (undirected)"};
  Check weights{"reduced instance weights within [-M,M]"};
  oracle_sweep(match, weights, seeds, seed, 0x756e,
               [&](int i, std::mt19937_64& rng, Check& m, Check& w) {
                 const int n = rand_int(rng, 4, 64);
                 const std::int64_t mb = kMChoices[i % 3];
                 Graph g = random_graph(n, kDensChoices[(i / 3) % 3], 1, mb,
                                        GraphKind::Undirected, rng());
                 GirthOptions opt;
                 opt.seed = rng();
                 opt.threads = threads;
                 opt.on_instance = [&](const TriangleInstance& inst) {
                   record(w, weights_within(inst), "weight outside [-M,M]");
                 };
                 GirthReport rep = girth_undirected(g, opt);
                 std::string why = match_oracle(g, rep, oracles::oracle_girth(g));
                 record(m, why.empty(), why);
               });
  return {match, weights};
}

std::vector<Check> suite_directed(int seeds, std::uint64_t seed, int threads) {
  Check match{"girth equals oracle (directed, negative weights)"};
  Check weights{"reduced instance weights within [-M,M]"};
  Check preshift{"potential shift preserves the girth"};
  oracle_sweep(match, weights, seeds, seed, 0x646972,
               [&](int i, std::mt19937_64& rng, Check& m, Check& w) {
                 const int n = rand_int(rng, 4, 48);
                 const std::int64_t mb = kMChoices[i % 3];
                 Graph base = random_graph(n, kDensChoices[(i / 3) % 3], 1, mb,
                                           GraphKind::Directed, rng());
                 Graph g = apply_random_potentials(base, mb, rng());
                 oracles::OracleResult o0 = oracles::oracle_girth(base);
                 oracles::OracleResult o = oracles::oracle_girth(g);
                 record(preshift, o.weight == o0.weight, "shift changed the girth");
                 GirthOptions opt;
                 opt.seed = rng();
                 opt.threads = threads;
                 opt.on_instance = [&](const TriangleInstance& inst) {
                   record(w, weights_within(inst), "weight outside [-M,M]");
                 };
                 GirthReport rep = girth_directed(g, opt);
                 std::string why = match_oracle(g, rep, o);
                 record(m, why.empty(), why);
               });
  return {match, weights, preshift};
}

std::vector<Check> suite_mixed(int seeds, std::uint64_t seed, int threads) {
  Check match{"girth equals oracle (mixed)"};
  Check weights{"reduced instance weights within [-M,M]"};
  oracle_sweep(match, weights, seeds, seed, 0x6d6978,
               [&](int i, std::mt19937_64& rng, Check& m, Check& w) {
                 const int n = rand_int(rng, 4, 40);
                 const std::int64_t mb = kMChoices[i % 3];
                 Graph g = random_graph(n, kDensChoices[(i / 3) % 3], 1, mb,
                                        GraphKind::Mixed, rng());
                 GirthOptions opt;
                 opt.seed = rng();
                 opt.threads = threads;
                 opt.on_instance = [&](const TriangleInstance& inst) {
                   record(w, weights_within(inst), "weight outside [-M,M]");
                 };
                 GirthReport rep = girth_mixed(g, opt);
                 std::string why = match_oracle(g, rep, oracles::oracle_girth(g));
                 record(m, why.empty(), why);
               });
  return {match, weights};
}

std::vector<Check> suite_kcycle(int seeds, std::uint64_t seed, int threads) {
  (void)threads;
  Check identity{"gadget minimum k-cycle equals W + 15M"};
  Check range{"gadget weights within [0,6M]"};
  Check degree{"internal path nodes have degree 2"};
  Check composed{"composed k-cycle pipeline equals oracle girth"};

  for (int i = 0; i < seeds; ++i) {
    auto rng = item_rng(seed, 0x6b6379, i);
    const int n0 = rand_int(rng, 2, 5);
    const std::int64_t mb = kMChoices[i % 3] == 20 ? 7 : kMChoices[i % 3];
    std::set<std::pair<int, int>> seen;
    std::vector<Edge> edges;
    auto add = [&](int a, int b, std::int64_t w) {
      if (seen.insert({a, b}).second)
        edges.push_back({a, b, w, EdgeOrient::Undirected});
    };
    std::uniform_int_distribution<std::int64_t> weight(-mb, mb);
    std::bernoulli_distribution keep(0.7);
    for (int a = 0; a < n0; ++a)
      for (int b = 0; b < n0; ++b) {
        if (keep(rng)) add(a, n0 + b, weight(rng));
        if (keep(rng)) add(n0 + a, 2 * n0 + b, weight(rng));
        if (keep(rng)) add(2 * n0 + a, b, weight(rng));
      }
    add(0, n0, weight(rng));          // plant one triangle so W exists
    add(n0, 2 * n0, weight(rng));
    add(2 * n0, 0, weight(rng));
    Graph tri(3 * n0, GraphKind::Undirected, std::move(edges), true);

    std::int64_t w_min = kInf;
    for (int a = 0; a < n0; ++a)
      for (int b = 0; b < n0; ++b)
        for (int c = 0; c < n0; ++c) {
          auto e1 = tri.step_weight(a, n0 + b);
          auto e2 = tri.step_weight(n0 + b, 2 * n0 + c);
          auto e3 = tri.step_weight(2 * n0 + c, a);
          if (e1 && e2 && e3) w_min = std::min(w_min, *e1 + *e2 + *e3);
        }

    for (int k : {4, 5}) {
      KcycleGadget gad = triangle_to_kcycle(tri, k, mb);
      bool in_range = true;
      for (const Edge& e : gad.graph.edges())
        if (e.w < 0 || e.w > 6 * mb) in_range = false;
      record(range, in_range, "gadget weight outside [0,6M]");
      if (k >= 5) {
        bool deg_ok = true;
        for (int v = 0; v < n0; ++v)
          for (int j = 1; j + 1 < k - 2; ++j)
            if (gad.graph.out(2 * n0 + v * (k - 2) + j).size() != 2) deg_ok = false;
        record(degree, deg_ok, "internal path node with degree != 2");
      }
      oracles::OracleResult res = oracles::oracle_min_kcycle(gad.graph, k);
      record(identity, res.weight && *res.weight == w_min + 15 * mb,
             "gadget minimum differs from W + 15M");
    }

    // composed pipeline on a tiny graph of the kind this index draws
    try {
      const GraphKind kind =
          i % 3 == 0 ? GraphKind::Undirected : i % 3 == 1 ? GraphKind::Directed
                                                          : GraphKind::Mixed;
      const int k = kind == GraphKind::Undirected ? 4 : 4 + (i & 1);
      const int n = kind == GraphKind::Undirected ? rand_int(rng, 4, 5)
                                                  : rand_int(rng, 4, 8);
      Graph g = random_graph(n, 0.6, 1, mb, kind, rng());
      if (kind == GraphKind::Directed) g = apply_random_potentials(g, mb, rng());
      auto got = girth_via_kcycle(g, k, rng());
      auto want = oracles::oracle_girth(g).weight;
      record(composed, got == want, "composed answer differs from oracle");
    } catch (const std::exception& ex) {
      record(composed, false, std::string("exception: ") + ex.what());
    }
  }
  return {identity, range, degree, composed};
}

std::vector<Check> suite_properties(int seeds, std::uint64_t seed, int threads) {
  Check dichotomy{"bounded search returns a cycle <= 2t or exact distances"};
  Check critical{"critical edge exists for every start vertex"};
  Check falsetri{"every instance triangle certifies a real cycle"};
  Check freq{"coloring pattern frequency within 1/16 +- 0.005"};
  Check exact{"estimate square equals exact distances (whp)"};
  exact.allowed_misses = std::max(1, seeds / 100);
  Check sound{"estimates never underestimate distances"};
  Check kernel{"blocked kernel matches the naive product"};

  for (int i = 0; i < seeds; ++i) {
    auto rng = item_rng(seed, 0x6469, i);
    const int n = rand_int(rng, 4, 32);
    const std::int64_t mb = kMChoices[i % 3];
    Graph g = random_graph(n, kDensChoices[(i / 3) % 3], 1, mb,
                           GraphKind::Undirected, rng());
    oracles::ApspResult apsp = oracles::oracle_apsp(g);
    const std::int64_t t =
        std::uniform_int_distribution<std::int64_t>(0, n * mb + 1)(rng);
    bool ok = true;
    std::string why;
    for (int s = 0; s < n && ok; ++s) {
      SourceOutcome out = cycle_or_distances(g, s, t);
      if (out.cycle) {
        std::string bad = validate_cycle(g, *out.cycle);
        if (!bad.empty() || out.cycle->weight > 2 * t) {
          ok = false;
          why = bad.empty() ? "reported cycle heavier than 2t" : bad;
        }
        continue;
      }
      for (int v = 0; v < n && ok; ++v) {
        const std::int64_t d = apsp.dist.at(s, v);
        if (d <= t && out.dist[v] != d) ok = false, why = "missing short distance";
        if (out.dist[v] < kInf && out.dist[v] != d) ok = false, why = "wrong table entry";
      }
    }
    record(dichotomy, ok, why);
  }

  for (int i = 0; i < seeds; ++i) {
    auto rng = item_rng(seed, 0x6372, i);
    const int len = rand_int(rng, 3, 40);
    std::uniform_int_distribution<std::int64_t> weight(1, kMChoices[i % 3]);
    std::vector<std::int64_t> w(len);
    std::int64_t total = 0;
    for (auto& x : w) total += (x = weight(rng));
    const std::int64_t fl = total / 2, ce = total - fl;
    bool all_starts = true;
    for (int s = 0; s < len && all_starts; ++s) {
      bool found = false;
      std::int64_t prefix = 0;  // distance s -> v_i along the traversal
      for (int j = 0; j < len && !found; ++j) {
        const std::int64_t we = w[(s + j) % len];
        const std::int64_t a = prefix;          // forward to edge tail
        const std::int64_t b = total - prefix - we;  // backward to edge head
        found = a <= fl && b <= fl && a >= ce - we && b >= ce - we;
        prefix += we;
      }
      all_starts = found;
    }
    record(critical, all_starts, "some start vertex has no critical edge");
  }

  const int small_graphs = std::max(18, seeds / 3);
  for (int i = 0; i < small_graphs; ++i) {
    auto rng = item_rng(seed, 0x6674, i);
    const int n = rand_int(rng, 4, 24);
    const std::int64_t mb = kMChoices[i % 3];
    try {
      auto check_inst = [&](const TriangleInstance& inst,
                            std::optional<std::int64_t> girth) {
        auto mc = min_certified_triangle(inst);
        record(falsetri, !mc || (girth && *mc >= *girth),
               "triangle certifies less than the girth");
      };
      if (i % 3 == 0) {
        Graph g = random_graph(n, 0.4, 1, mb, GraphKind::Undirected, rng());
        auto girth = oracles::oracle_girth(g).weight;
        ThresholdOutcome th = find_threshold(g, threads);
        for (const Coloring& chi : sample_colorings(n, 6, rng()))
          check_inst(build_undirected_instance(g, th.t, th.dist, th.pred, chi), girth);
      } else if (i % 3 == 1) {
        Graph base = random_graph(n, 0.4, 1, mb, GraphKind::Directed, rng());
        Graph g = apply_random_potentials(base, mb, rng());
        auto girth = oracles::oracle_girth(g).weight;
        DistanceEstimates est = sampled_estimates(g, rng(), threads);
        if (auto red = threshold_and_reduce(build_tripartite(g, est),
                                            g.weight_bound(), threads))
          check_inst(*red, girth);
      } else {
        Graph g = random_graph(n, 0.4, 1, mb, GraphKind::Mixed, rng());
        auto girth = oracles::oracle_girth(g).weight;
        DistanceEstimates est = sampled_estimates(g, rng(), threads);
        for (const Coloring& chi : sample_colorings(n, 4, rng()))
          if (auto red = threshold_and_reduce(build_mixed_instance(g, est, chi),
                                              g.weight_bound(), threads))
            check_inst(*red, girth);
      }
    } catch (const std::exception& ex) {
      record(falsetri, false, std::string("exception: ") + ex.what());
    }
  }

  {
    const int trials = 100000;
    int hits = 0;
    for (const Coloring& chi : sample_colorings(16, trials, detail::mix(seed ^ 0xc01)))
      if (chi.is_c1(3) && chi.is_c2(7) && chi.is_c2(11) && chi.is_c1(13)) ++hits;
    const double f = static_cast<double>(hits) / trials;
    record(freq, std::abs(f - 1.0 / 16.0) <= 0.005,
           "observed frequency " + std::to_string(f));
  }

  for (int i = 0; i < seeds; ++i) {
    auto rng = item_rng(seed, 0x6573, i);
    const int n = rand_int(rng, 4, 48);
    const std::int64_t mb = kMChoices[i % 3];
    Graph base = random_graph(n, kDensChoices[(i / 3) % 3], 1, mb,
                              GraphKind::Directed, rng());
    Graph g = apply_random_potentials(base, mb, rng());
    DistanceEstimates est = sampled_estimates(g, rng(), threads);
    oracles::ApspResult apsp = oracles::oracle_apsp(g);
    WeightMatrix dd = distance_product(est.D, est.D, MinPlusOptions{threads});
    record(exact, dd == apsp.dist, "squared estimates differ from distances");
    bool never_under = true;
    for (int u = 0; u < n && never_under; ++u)
      for (int v = 0; v < n; ++v)
        if (est.D.at(u, v) < apsp.dist.at(u, v)) {
          never_under = false;
          break;
        }
    record(sound, never_under, "estimate below the true distance");
  }

  for (int i = 0; i < seeds; ++i) {
    auto rng = item_rng(seed, 0x6b65, i);
    const int n = 64;
    WeightMatrix a(n), b(n);
    std::uniform_int_distribution<std::int64_t> entry(-50, 50);
    std::bernoulli_distribution inf(0.15);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        a.at(r, c) = inf(rng) ? kInf : entry(rng);
        b.at(r, c) = inf(rng) ? kInf : entry(rng);
      }
    WeightMatrix blocked = distance_product(a, b, MinPlusOptions{threads});
    bool equal = true;
    for (int r = 0; r < n && equal; ++r)
      for (int c = 0; c < n; ++c) {
        std::int64_t best = kInf + kInf;
        for (int k = 0; k < n; ++k)
          best = std::min(best, a.at(r, k) + b.at(k, c));
        if (best >= kInf / 2) best = kInf;  // the kernel's saturation point
        if (blocked.at(r, c) != best) {
          equal = false;
          break;
        }
      }
    record(kernel, equal, "blocked product differs from the naive one");
  }

  return {dichotomy, critical, falsetri, freq, exact, sound, kernel};
}

std::vector<Check> run_suite(const std::string& name, int seeds, std::uint64_t seed,
                             int threads) {
  if (name == "undirected") return suite_undirected(seeds, seed, threads);
  if (name == "directed") return suite_directed(seeds, seed, threads);
  if (name == "mixed") return suite_mixed(seeds, seed, threads);
  if (name == "kcycle") return suite_kcycle(seeds, seed, threads);
  if (name == "properties") return suite_properties(seeds, seed, threads);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace mincycle::verify
