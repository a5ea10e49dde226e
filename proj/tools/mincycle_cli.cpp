// mincycle: weighted girth by reduction to minimum triangle.
//
// Subcommands: girth, oracle, reduce, verify, gen. Exit codes: 0 success,
// 1 bad input, 2 no cycle, 3 negative cycle.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mincycle/coloring.hpp"
#include "mincycle/cycle_search.hpp"
#include "mincycle/directed_reduction.hpp"
#include "mincycle/graph.hpp"
#include "mincycle/kcycle.hpp"
#include "mincycle/minplus.hpp"
#include "mincycle/mixed_reduction.hpp"
#include "mincycle/oracles.hpp"
#include "mincycle/triangle_instance.hpp"
#include "mincycle/undirected_reduction.hpp"
#include "mincycle/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace mincycle;

namespace {

constexpr int kExitOk = 0, kExitBadInput = 1, kExitNoCycle = 2, kExitNegCycle = 3;

int default_workers() {
  if (const char* env = std::getenv("MINCYCLE_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

const char* mode_name(GraphKind k) {
  switch (k) {
    case GraphKind::Undirected: return "undirected";
    case GraphKind::Directed: return "directed";
    case GraphKind::Mixed: return "mixed";
  }
  return "?";
}

Graph load_graph(const std::string& path, const std::string& mode) {
  Graph g = Graph::parse(read_file(path));
  if (mode != "auto" && mode != mode_name(g.kind()))
    throw GraphError("file declares a " + std::string(mode_name(g.kind())) +
                     " graph, --mode asked for " + mode);
  return g;
}

struct GirthArgs {
  std::string path, mode = "auto";
  std::uint64_t seed = 0;
  int trials = 0;
  int threads = default_workers();
  bool deterministic = false, json_out = false, from_instances = false;
};

int emit_answer(const GirthArgs& a, const std::string& mode,
                std::optional<std::int64_t> weight, const std::vector<int>& nodes,
                std::int64_t t, double elapsed_ms) {
  if (a.json_out) {
    json j;
    j["weight"] = weight ? json(*weight) : json(nullptr);
    json ns = json::array();
    for (int v : nodes) ns.push_back(v + 1);
    j["nodes"] = ns;
    j["mode"] = mode;
    j["t"] = t;
    j["seed"] = a.seed;
    j["elapsed_ms"] = elapsed_ms;
    std::cout << j.dump(2) << "\n";
  } else if (weight) {
    std::cout << "girth " << *weight << "\n";
    if (!nodes.empty()) {
      std::cout << "cycle";
      for (int v : nodes) std::cout << ' ' << v + 1;
      std::cout << "\n";
    }
  } else {
    std::cout << "no cycle\n";
  }
  return weight ? kExitOk : kExitNoCycle;
}

int run_girth(const GirthArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  Graph g = load_graph(a.path, a.mode);
  GirthOptions opt;
  opt.seed = a.seed;
  opt.trials = a.trials;
  opt.deterministic = a.deterministic;
  opt.threads = a.threads;
  GirthReport rep;
  switch (g.kind()) {
    case GraphKind::Undirected: rep = girth_undirected(g, opt); break;
    case GraphKind::Directed: rep = girth_directed(g, opt); break;
    case GraphKind::Mixed: rep = girth_mixed(g, opt); break;
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return emit_answer(a, mode_name(g.kind()),
                     rep.cycle ? std::optional(rep.cycle->weight) : std::nullopt,
                     rep.cycle ? rep.cycle->nodes : std::vector<int>{}, rep.t, ms);
}

// Certified weight of one emitted k-cycle gadget, solved by brute force.
std::optional<std::int64_t> solve_gadget_files(const std::string& graph_text,
                                               const json& side) {
  Graph gg = Graph::parse(graph_text, /*relaxed_weights=*/true);
  const int k = side.at("k").get<int>();
  auto res = oracles::oracle_min_kcycle(gg, k);
  if (!res.weight) return std::nullopt;
  std::int64_t w = *res.weight - side.at("offset_15m").get<std::int64_t>();
  if (side.at("class_rule").get<std::string>() == "all")
    return w + side.at("offset").get<std::int64_t>();
  const auto back = side.at("back_map").get<std::vector<int>>();
  const auto part = side.at("partition").get<std::vector<int>>();
  for (int node : res.witness->nodes)
    if (part[back[node]] == 1) return w + side.at("offset").get<std::int64_t>();
  return w;
}

int run_from_instances(const GirthArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const fs::path dir(a.path);
  json manifest = json::parse(read_file((dir / "manifest.json").string()));
  const std::string target = manifest.at("target").get<std::string>();
  const int count = manifest.at("count").get<int>();
  std::optional<std::int64_t> best;
  if (!manifest.at("upper_bound").is_null())
    best = manifest.at("upper_bound").get<std::int64_t>();
  for (int i = 0; i < count; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "instance_%03d", i);
    const std::string gr = read_file((dir / (std::string(name) + ".gr")).string());
    const std::string sc = read_file((dir / (std::string(name) + ".json")).string());
    std::optional<std::int64_t> cand;
    if (target == "triangle")
      cand = certified_minimum(TriangleInstance::deserialize(gr, sc));
    else
      cand = solve_gadget_files(gr, json::parse(sc));
    if (cand && (!best || *cand < *best)) best = *cand;
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return emit_answer(a, manifest.at("mode").get<std::string>(), best, {},
                     manifest.at("t").get<std::int64_t>(), ms);
}

int run_oracle(const GirthArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  Graph g = load_graph(a.path, a.mode);
  auto res = oracles::oracle_girth(g);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  return emit_answer(a, mode_name(g.kind()), res.weight,
                     res.witness ? res.witness->nodes : std::vector<int>{}, 0, ms);
}

struct ReduceArgs {
  std::string path, target = "triangle", out;
  int k = 4;
  std::uint64_t seed = 0;
  int trials = 0;
  int threads = default_workers();
};

void write_instance(const fs::path& dir, int index, const TriangleInstance& inst,
                    const std::string& target, int k) {
  char name[32];
  std::snprintf(name, sizeof name, "instance_%03d", index);
  if (target == "triangle") {
    write_file(dir / (std::string(name) + ".gr"), inst.serialize_graph());
    write_file(dir / (std::string(name) + ".json"), inst.serialize_sidecar());
    return;
  }
  // k-cycle gadget: two-layer instances are tripartitized first; reduced
  // tripartite instances already have partitions laid out in index thirds
  const bool two_layer = inst.class_rule == TriangleInstance::ClassRule::TouchesV1;
  KcycleGadget gad = triangle_to_kcycle(
      two_layer ? tripartitize(inst.to_graph()) : inst.to_graph(), k,
      inst.weight_bound);
  json side;
  side["k"] = k;
  side["M"] = inst.weight_bound;
  side["offset_15m"] = 15 * inst.weight_bound;
  side["offset"] = inst.offset;
  side["class_rule"] =
      inst.class_rule == TriangleInstance::ClassRule::All ? "all" : "touches_v1";
  std::vector<int> back(gad.back_map.size());
  for (std::size_t i = 0; i < back.size(); ++i)
    back[i] = gad.back_map[i] % inst.n;  // gadget node -> instance node
  side["back_map"] = back;
  side["partition"] = inst.part;
  write_file(dir / (std::string(name) + ".gr"), gad.graph.serialize());
  write_file(dir / (std::string(name) + ".json"), side.dump(2) + "\n");
}

int run_reduce(const ReduceArgs& a) {
  Graph g = load_graph(a.path, "auto");
  const fs::path dir(a.out);
  fs::create_directories(dir);
  std::vector<TriangleInstance> instances;
  std::optional<std::int64_t> upper;
  std::int64_t t = 0;

  if (g.kind() == GraphKind::Undirected) {
    ThresholdOutcome th = find_threshold(g, a.threads);
    t = th.t;
    if (th.candidate) {
      upper = th.candidate->weight;
      if (auto tri = min_triangle(to_weight_matrix(g), MinPlusOptions{a.threads}))
        upper = std::min(*upper, tri->weight);
      const int trials = a.trials > 0 ? a.trials : default_coloring_trials(g.order());
      for (const Coloring& chi : sample_colorings(g.order(), trials, a.seed))
        instances.push_back(build_undirected_instance(g, th.t, th.dist, th.pred, chi));
    }
  } else {
    GirthOptions opt;
    opt.seed = a.seed;
    opt.trials = a.trials;
    opt.threads = a.threads;
    opt.on_instance = [&](const TriangleInstance& inst) {
      instances.push_back(inst);
      t = inst.t;
    };
    // drive the pipeline for its instance stream; the answer is discarded
    GirthReport rep =
        g.kind() == GraphKind::Directed ? girth_directed(g, opt) : girth_mixed(g, opt);
    (void)rep;
  }

  for (std::size_t i = 0; i < instances.size(); ++i)
    write_instance(dir, static_cast<int>(i), instances[i], a.target, a.k);
  json manifest;
  manifest["mode"] = mode_name(g.kind());
  manifest["target"] = a.target;
  manifest["count"] = static_cast<int>(instances.size());
  manifest["seed"] = a.seed;
  manifest["t"] = t;
  manifest["upper_bound"] = upper ? json(*upper) : json(nullptr);
  if (a.target == "kcycle") manifest["k"] = a.k;
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
  std::cout << "wrote " << instances.size() << " instance(s) to " << a.out << "\n";
  return kExitOk;
}

int run_verify(const std::string& suite, int seeds, std::uint64_t seed, int threads) {
  auto checks = verify::run_suite(suite, seeds, seed, threads);
  bool all_ok = true;
  for (const auto& c : checks) {
    std::cout << (c.ok() ? "pass" : "FAIL") << "  " << c.name << ": " << c.passed
              << "/" << c.total;
    if (!c.ok() && !c.note.empty()) std::cout << "  (" << c.note << ")";
    std::cout << "\n";
    all_ok = all_ok && c.ok();
  }
  return all_ok ? kExitOk : kExitBadInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum-weight cycle via reduction to minimum triangle"};
  app.require_subcommand(1);

  GirthArgs ga;
  auto* girth = app.add_subcommand("girth", "weighted girth of a graph file");
  girth->add_option("path", ga.path, "graph file (or instance directory)")->required();
  girth->add_option("--mode", ga.mode, "auto|undirected|directed|mixed")
      ->check(CLI::IsMember({"auto", "undirected", "directed", "mixed"}));
  girth->add_option("--seed", ga.seed, "random seed");
  girth->add_option("--trials", ga.trials, "coloring trials (0 = default)");
  girth->add_option("--threads", ga.threads, "worker count");
  girth->add_flag("--deterministic", ga.deterministic, "deterministic coloring family");
  girth->add_flag("--json", ga.json_out, "JSON report");
  girth->add_flag("--from-instances", ga.from_instances,
                  "treat path as a directory written by reduce");

  GirthArgs oa;
  auto* oracle = app.add_subcommand("oracle", "brute-force girth (ground truth)");
  oracle->add_option("path", oa.path, "graph file")->required();
  oracle->add_option("--mode", oa.mode, "auto|undirected|directed|mixed")
      ->check(CLI::IsMember({"auto", "undirected", "directed", "mixed"}));
  oracle->add_flag("--json", oa.json_out, "JSON report");

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "emit reduced instances");
  reduce->add_option("path", ra.path, "graph file")->required();
  reduce->add_option("--target", ra.target, "triangle|kcycle")
      ->check(CLI::IsMember({"triangle", "kcycle"}));
  reduce->add_option("--k", ra.k, "cycle length for --target kcycle")
      ->check(CLI::Range(4, 6));
  reduce->add_option("--out", ra.out, "output directory")->required();
  reduce->add_option("--seed", ra.seed, "random seed");
  reduce->add_option("--trials", ra.trials, "coloring trials (0 = default)");
  reduce->add_option("--threads", ra.threads, "worker count");

  std::string suite;
  int seeds = 50;
  std::uint64_t vseed = 1;
  int vthreads = default_workers();
  auto* verify_cmd = app.add_subcommand("verify", "property suites vs oracles");
  verify_cmd->add_option("--suite", suite, "undirected|directed|mixed|kcycle|properties")
      ->required()
      ->check(CLI::IsMember({"undirected", "directed", "mixed", "kcycle", "properties"}));
  verify_cmd->add_option("--seeds", seeds, "instances per property");
  verify_cmd->add_option("--seed", vseed, "base seed");
  verify_cmd->add_option("--threads", vthreads, "worker count");

  std::string gkind = "undirected", gout;
  int gn = 8;
  double gdensity = 0.3;
  std::int64_t gwmin = 1, gwmax = 10;
  std::uint64_t gseed = 0;
  auto* gen = app.add_subcommand("gen", "seeded random graph");
  gen->add_option("--kind", gkind, "undirected|directed|mixed")
      ->check(CLI::IsMember({"undirected", "directed", "mixed"}));
  gen->add_option("--n", gn, "vertex count")->required();
  gen->add_option("--density", gdensity, "edge probability");
  gen->add_option("--wmin", gwmin, "minimum weight");
  gen->add_option("--wmax", gwmax, "maximum weight");
  gen->add_option("--seed", gseed, "random seed");
  gen->add_option("-o,--out", gout, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (girth->parsed()) return ga.from_instances ? run_from_instances(ga) : run_girth(ga);
    if (oracle->parsed()) return run_oracle(oa);
    if (reduce->parsed()) return run_reduce(ra);
    if (verify_cmd->parsed()) return run_verify(suite, seeds, vseed, vthreads);
    if (gen->parsed()) {
      const GraphKind kind = gkind == "directed"   ? GraphKind::Directed
                             : gkind == "mixed"    ? GraphKind::Mixed
                                                   : GraphKind::Undirected;
      Graph g = random_graph(gn, gdensity, gwmin, gwmax, kind, gseed);
      if (gout.empty())
        std::cout << g.serialize();
      else
        write_file(gout, g.serialize());
      return kExitOk;
    }
  } catch (const NegativeCycleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegCycle;
  } catch (const oracles::NegativeCycleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegCycle;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
