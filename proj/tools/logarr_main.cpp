// Command-line front end: solve / eval / bench / error-dist / gen.
// Exit codes: 0 success, 1 benchmark expectation failure, 2 usage or input
// error.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "logarr/algebraic_distance.hpp"
#include "logarr/arrangement.hpp"
#include "logarr/baselines.hpp"
#include "logarr/error.hpp"
#include "logarr/experiments.hpp"
#include "logarr/graph.hpp"
#include "logarr/params.hpp"
#include "logarr/report.hpp"
#include "logarr/rng.hpp"
#include "logarr/solver.hpp"
#include "logarr/synthetic.hpp"

namespace {

using namespace logarr;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct GraphOpts {
  std::string input;
  bool directed = false;
  bool weighted = false;
  std::string volumes;
};

void add_graph_opts(CLI::App* sub, GraphOpts& o) {
  sub->add_option("--input", o.input,
                  "edge-list file or synth:... spec (see gen --help)")
      ->required();
  sub->add_flag("--directed,!--undirected", o.directed,
                "treat input edges as directed");
  sub->add_flag("--weighted", o.weighted,
                "read a third per-line weight field");
  sub->add_option("--volumes", o.volumes,
                  "optional 'node volume' side file (original ids)");
}

Graph load_graph(const GraphOpts& o) {
  std::optional<Graph> g;
  if (is_synthetic_uri(o.input)) {
    g = make_synthetic(o.input);
  } else {
    std::ifstream in(o.input);
    if (!in) throw ValidationError("cannot open input file: " + o.input);
    g = parse_edge_list(in, ParseOptions{o.weighted, o.directed});
  }
  if (!o.volumes.empty()) {
    std::ifstream vin(o.volumes);
    if (!vin) throw ValidationError("cannot open volumes file: " + o.volumes);
    g = g->with_volumes(parse_volumes(vin, *g));
  }
  return std::move(*g);
}

struct ParamOpts {
  std::string preset = "default";
  double theta1 = 0.5, theta2 = 0.5, omega = 0.5;
  int vectors = 5, jor_iters = 20, order = 1;
  int nn_k = 5, nn_passes = 1, sweeps = 20, place_tau = 32;
  NodeId coarsest = 9;
  std::uint64_t seed = 0;
};

void add_param_opts(CLI::App* sub, ParamOpts& o) {
  sub->add_option("--preset", o.preset, "default | fast | slow")
      ->check(CLI::IsMember({"default", "fast", "slow"}));
  sub->add_option("--theta1", o.theta1, "coupling share threshold");
  sub->add_option("--theta2", o.theta2, "weight share threshold");
  sub->add_option("--omega", o.omega, "JOR damping");
  sub->add_option("--R,--vectors", o.vectors, "random test vectors");
  sub->add_option("--jor-iters", o.jor_iters, "JOR sweeps per vector");
  sub->add_option("--order", o.order, "interpolation entries per row");
  sub->add_option("--nn-k", o.nn_k, "node-by-node candidate half-window");
  sub->add_option("--nn-passes", o.nn_passes, "node-by-node passes");
  sub->add_option("--sweeps", o.sweeps,
                  "cap for both relaxation sweep counts");
  sub->add_option("--coarsest", o.coarsest, "exhaustive-solve size");
  sub->add_option("--place-tau", o.place_tau,
                  "exact-placement dispatch threshold");
  sub->add_option("--seed", o.seed, "PRNG seed");
}

SolverParams build_params(const CLI::App* sub, const ParamOpts& o) {
  Preset p = Preset::kDefault;
  if (o.preset == "fast") p = Preset::kFast;
  if (o.preset == "slow") p = Preset::kSlow;
  SolverParams sp = SolverParams::preset(p);
  if (sub->count("--theta1")) sp.theta1 = o.theta1;
  if (sub->count("--theta2")) sp.theta2 = o.theta2;
  if (sub->count("--omega")) sp.omega = o.omega;
  if (sub->count("--R") || sub->count("--vectors")) sp.vectors = o.vectors;
  if (sub->count("--jor-iters")) sp.jor_iters = o.jor_iters;
  if (sub->count("--order")) sp.order = o.order;
  if (sub->count("--nn-k")) sp.refine.nn_k = o.nn_k;
  if (sub->count("--nn-passes")) sp.refine.nn_passes = o.nn_passes;
  if (sub->count("--sweeps")) {
    sp.refine.compat_sweeps = o.sweeps;
    sp.refine.gs_sweeps = o.sweeps;
  }
  if (sub->count("--coarsest")) sp.coarsest = o.coarsest;
  if (sub->count("--place-tau")) sp.refine.place_tau = o.place_tau;
  sp.seed = o.seed;
  return sp;
}

std::string graph_display_name(const std::string& input) {
  if (is_synthetic_uri(input)) return input;
  const std::size_t slash = input.find_last_of('/');
  return slash == std::string::npos ? input : input.substr(slash + 1);
}

nlohmann::json report_to_json(const RunReport& r, const SolveResult& res) {
  nlohmann::json j;
  j["graph"] = r.graph;
  j["nodes"] = r.nodes;
  j["edges"] = r.edges;
  j["total_weight"] = r.total_weight;
  j["directed"] = r.directed;
  j["params"] = {{"theta1", r.params.theta1},
                 {"theta2", r.params.theta2},
                 {"omega", r.params.omega},
                 {"vectors", r.params.vectors},
                 {"jor_iters", r.params.jor_iters},
                 {"order", r.params.order},
                 {"coarsest", r.params.coarsest},
                 {"compat_sweeps", r.params.refine.compat_sweeps},
                 {"gs_sweeps", r.params.refine.gs_sweeps},
                 {"nn_k", r.params.refine.nn_k},
                 {"nn_passes", r.params.refine.nn_passes},
                 {"early_stop", r.params.refine.early_stop},
                 {"place_tau", r.params.refine.place_tau},
                 {"seed", r.params.seed}};
  j["level_sizes"] = r.level_sizes;
  j["cost"] = r.cost;
  j["beta"] = r.beta;
  j["time_ms"] = {{"total", r.time_total_ms},
                  {"descent", r.time_descent_ms},
                  {"initialize", r.time_initialize_ms},
                  {"relax", r.time_relax_ms},
                  {"refine", r.time_refine_ms}};
  nlohmann::json levels = nlohmann::json::array();
  for (const LevelTrace& t : res.trace.levels)
    levels.push_back({{"nodes", t.nodes},
                      {"edges", t.edges},
                      {"cost_init", t.cost_init},
                      {"cost_compat", t.cost_compat},
                      {"cost_gs", t.cost_gs},
                      {"cost_nn", t.cost_nn}});
  j["levels"] = levels;
  return j;
}

int cmd_solve(const GraphOpts& go, const CLI::App* sub, const ParamOpts& po,
              const std::string& out_perm, const std::string& report_path,
              const std::string& report_json, const std::string& dump_couplings,
              bool verbose) {
  const Graph g = load_graph(go);
  const SolverParams params = build_params(sub, po);
  const SolveResult result = solve(g, params);

  if (verbose) {
    std::cerr << "coarsest nodes " << result.trace.coarsest_nodes << " cost "
              << fmt(result.trace.coarsest_cost) << '\n';
    for (std::size_t l = 0; l < result.trace.levels.size(); ++l) {
      const LevelTrace& t = result.trace.levels[l];
      std::cerr << "level " << l << " nodes " << t.nodes << " edges "
                << t.edges << " volume " << fmt(t.total_volume) << " weight "
                << fmt(t.total_weight) << " cost-init " << fmt(t.cost_init)
                << " cost-compat " << fmt(t.cost_compat) << " cost-gs "
                << fmt(t.cost_gs) << " cost-nn " << fmt(t.cost_nn) << '\n';
    }
  }

  const RunReport report = RunReport::from(graph_display_name(go.input), g,
                                           params, result);
  write_report(std::cout, report);

  if (!out_perm.empty()) {
    std::ofstream out(out_perm);
    if (!out) throw ValidationError("cannot write permutation: " + out_perm);
    write_permutation(out, g, result.arrangement);
  }
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw ValidationError("cannot write report: " + report_path);
    write_report(out, report);
  }
  if (!report_json.empty()) {
    std::ofstream out(report_json);
    if (!out) throw ValidationError("cannot write report: " + report_json);
    out << report_to_json(report, result).dump(2) << '\n';
  }
  if (!dump_couplings.empty()) {
    const Graph u = un(g);
    CouplingParams cp{params.vectors, params.jor_iters, params.omega,
                      mix_seed(params.seed, 0)};
    const CouplingMap rho = compute_couplings(u, cp);
    std::ofstream out(dump_couplings);
    if (!out)
      throw ValidationError("cannot write couplings: " + dump_couplings);
    const auto& edges = u.edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
      out << u.original_id(edges[e].u) << ' ' << u.original_id(edges[e].v)
          << ' ' << fmt(rho.rho[e]) << '\n';
  }
  return 0;
}

int cmd_eval(const GraphOpts& go, const std::string& perm_path) {
  const Graph g = load_graph(go);
  std::ifstream in(perm_path);
  if (!in) throw ValidationError("cannot open permutation: " + perm_path);
  const Arrangement a = read_permutation(in, g);
  const double c = cost(g, a);
  const double total = g.total_weight();
  std::cout << "cost " << fmt(c) << '\n';
  std::cout << "beta " << fmt(total > 0.0 ? c / total : 0.0) << '\n';
  return 0;
}

int cmd_gen(const std::string& spec, const std::string& out_path) {
  const Graph g = make_synthetic(spec);
  if (out_path.empty()) {
    write_edge_list(std::cout, g);
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) throw ValidationError("cannot write: " + out_path);
  write_edge_list(out, g);
  return 0;
}

int cmd_error_dist(const GraphOpts& go, std::uint64_t seed,
                   std::size_t instances, NodeId max_degree,
                   const std::string& out_path) {
  const Graph g = un(load_graph(go));
  auto samples = placement_error_experiment(g, seed, instances, max_degree);
  std::sort(samples.begin(), samples.end(),
            [](const PlacementErrorSample& a, const PlacementErrorSample& b) {
              return a.error < b.error;
            });
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw ValidationError("cannot write: " + out_path);
    out = &file;
  }
  for (std::size_t i = 0; i < samples.size(); ++i)
    *out << i << ' ' << fmt(samples[i].error) << ' '
         << fmt(samples[i].relative) << '\n';
  return 0;
}

// ---- bench ----------------------------------------------------------------

struct SuiteEntry {
  std::string name;
  std::string path;  // resolved
  bool directed = false;
  double lo = 0.0, hi = 0.0;
};

std::vector<SuiteEntry> parse_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open suite manifest: " + path);
  const std::size_t slash = path.find_last_of('/');
  const std::string dir =
      slash == std::string::npos ? "" : path.substr(0, slash + 1);

  std::vector<SuiteEntry> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    std::istringstream ls(line);
    SuiteEntry e;
    int directed = 0;
    if (!(ls >> e.name >> e.path >> directed >> e.lo >> e.hi))
      throw ParseError(lineno,
                       "expected: name path directed beta-lo beta-hi");
    e.directed = directed != 0;
    if (!is_synthetic_uri(e.path) && !e.path.empty() && e.path[0] != '/')
      e.path = dir + e.path;
    entries.push_back(std::move(e));
  }
  return entries;
}

struct BenchResult {
  std::string status = "skipped";  // ok | fail | skipped
  std::string reason;
  NodeId nodes = 0;
  EdgeId edges = 0;
  double beta = 0.0, cost = 0.0, ratio = 0.0, time_ms = 0.0;
  std::vector<PlacementErrorSample> errors;
};

BenchResult run_entry(const SuiteEntry& e, const SolverParams& params,
                      int repeat, std::size_t error_instances) {
  BenchResult r;
  std::optional<Graph> g;
  try {
    GraphOpts go;
    go.input = e.path;
    go.directed = e.directed;
    g = load_graph(go);
  } catch (const Error& err) {
    r.reason = err.what();
    return r;  // skipped
  }
  r.nodes = g->num_nodes();
  r.edges = g->num_edges();

  double best_ms = 0.0;
  double beta_solver = 0.0, cost_solver = 0.0;
  for (int rep = 0; rep < std::max(1, repeat); ++rep) {
    const SolveResult res = solve(*g, params);
    if (rep == 0 || res.elapsed_ms < best_ms) best_ms = res.elapsed_ms;
    beta_solver = res.beta;
    cost_solver = res.cost;
    if (rep + 1 == std::max(1, repeat)) {
      const Arrangement natural = baseline(*g, BaselineKind::kNatural);
      const Arrangement random =
          baseline(*g, BaselineKind::kRandom, params.seed);
      const Comparison cmp = compare(*g, {{"solver", &res.arrangement},
                                          {"natural", &natural},
                                          {"random", &random}});
      r.ratio = cmp.ratio;
    }
  }
  r.beta = beta_solver;
  r.cost = cost_solver;
  r.time_ms = best_ms;
  r.status = (beta_solver >= e.lo && beta_solver <= e.hi) ? "ok" : "fail";
  if (error_instances > 0)
    r.errors = placement_error_experiment(un(*g), params.seed,
                                          error_instances);
  return r;
}

int cmd_bench(const std::string& suite, const CLI::App* sub,
              const ParamOpts& po, int repeat, int jobs,
              std::size_t error_instances, const std::string& error_curve) {
  const SolverParams params = build_params(sub, po);
  const std::vector<SuiteEntry> entries = parse_manifest(suite);
  std::vector<BenchResult> results(entries.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= entries.size()) return;
      results[i] = run_entry(entries[i], params, repeat, error_instances);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::cout << "suite " << suite << '\n';
  int failures = 0, skipped = 0;
  std::vector<double> sizes, times;
  std::vector<PlacementErrorSample> all_errors;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const SuiteEntry& e = entries[i];
    const BenchResult& r = results[i];
    if (r.status == "skipped") {
      ++skipped;
      std::cout << "entry " << e.name << " status skipped reason " << r.reason
                << '\n';
      continue;
    }
    if (r.status == "fail") ++failures;
    std::cout << "entry " << e.name << " status " << r.status << " nodes "
              << r.nodes << " edges " << r.edges << " size "
              << (static_cast<std::int64_t>(r.nodes) + r.edges) << " beta "
              << fmt(r.beta) << " expected " << fmt(e.lo) << ' ' << fmt(e.hi)
              << " ratio " << fmt(r.ratio) << " time-ms " << fmt(r.time_ms)
              << '\n';
    if (r.time_ms > 0.0) {
      sizes.push_back(static_cast<double>(r.nodes) +
                      static_cast<double>(r.edges));
      times.push_back(r.time_ms);
    }
    all_errors.insert(all_errors.end(), r.errors.begin(), r.errors.end());
  }

  std::cout << "entries " << entries.size() << '\n';
  std::cout << "failures " << failures << '\n';
  std::cout << "skipped " << skipped << '\n';
  double slope = std::numeric_limits<double>::quiet_NaN();
  if (sizes.size() >= 2) {
    try {
      slope = loglog_slope(sizes, times);
    } catch (const Error&) {
    }
  }
  std::cout << "time-vs-size-slope " << fmt(slope) << '\n';

  if (!all_errors.empty()) {
    std::sort(all_errors.begin(), all_errors.end(),
              [](const PlacementErrorSample& a, const PlacementErrorSample& b) {
                return a.error < b.error;
              });
    std::size_t within = 0;
    for (const auto& s : all_errors) within += s.relative <= 0.05 ? 1 : 0;
    std::cout << "placement-error-count " << all_errors.size() << '\n';
    std::cout << "placement-error-max "
              << fmt(all_errors.back().error) << '\n';
    std::cout << "placement-error-share-within-5pct "
              << fmt(static_cast<double>(within) /
                     static_cast<double>(all_errors.size()))
              << '\n';
    if (!error_curve.empty()) {
      std::ofstream out(error_curve);
      if (!out) throw ValidationError("cannot write: " + error_curve);
      for (std::size_t i = 0; i < all_errors.size(); ++i)
        out << i << ' ' << fmt(all_errors[i].error) << ' '
            << fmt(all_errors[i].relative) << '\n';
    }
  }
  return failures > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiscale minimum logarithmic arrangement solver"};
  app.require_subcommand(1);

  // solve
  auto* s_solve = app.add_subcommand("solve", "arrange a graph");
  GraphOpts solve_graph;
  ParamOpts solve_params;
  std::string out_perm, report_path, report_json, dump_couplings;
  bool verbose = false;
  add_graph_opts(s_solve, solve_graph);
  add_param_opts(s_solve, solve_params);
  s_solve->add_option("--out-perm", out_perm, "write the permutation here");
  s_solve->add_option("--report", report_path, "write the text report here");
  s_solve->add_option("--report-json", report_json,
                      "write a JSON report here");
  s_solve->add_option("--dump-couplings", dump_couplings,
                      "write finest-level 'i j rho' lines here");
  s_solve->add_flag("--verbose", verbose, "per-level trace on stderr");

  // eval
  auto* s_eval = app.add_subcommand("eval", "score a permutation file");
  GraphOpts eval_graph;
  std::string eval_perm;
  add_graph_opts(s_eval, eval_graph);
  s_eval->add_option("--perm", eval_perm, "permutation file")->required();

  // bench
  auto* s_bench = app.add_subcommand("bench", "run a suite manifest");
  ParamOpts bench_params;
  std::string suite, error_curve;
  int repeat = 1, jobs = 1;
  std::size_t error_instances = 0;
  s_bench->add_option("--suite", suite, "manifest: name path directed lo hi")
      ->required();
  add_param_opts(s_bench, bench_params);
  s_bench->add_option("--repeat", repeat, "timing repetitions per entry");
  s_bench->add_option("--jobs", jobs, "parallel suite entries");
  s_bench->add_option("--error-instances", error_instances,
                      "placement-error samples per graph (0 = off)");
  s_bench->add_option("--error-curve", error_curve,
                      "write the sorted error curve here");

  // error-dist
  auto* s_err = app.add_subcommand(
      "error-dist", "one-node placement error distribution");
  GraphOpts err_graph;
  std::uint64_t err_seed = 0;
  std::size_t err_instances = 10000;
  NodeId err_max_degree = 200;
  std::string err_out;
  add_graph_opts(s_err, err_graph);
  s_err->add_option("--seed", err_seed, "PRNG seed");
  s_err->add_option("--instances", err_instances, "sample count");
  s_err->add_option("--max-degree", err_max_degree,
                    "skip nodes with more neighbors");
  s_err->add_option("--out", err_out, "output path (default stdout)");

  // gen
  auto* s_gen = app.add_subcommand("gen", "write a synthetic graph");
  std::string gen_spec, gen_out;
  s_gen->add_option("--spec", gen_spec, "synth:... spec")->required();
  s_gen->add_option("--out", gen_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (s_solve->parsed())
      return cmd_solve(solve_graph, s_solve, solve_params, out_perm,
                       report_path, report_json, dump_couplings, verbose);
    if (s_eval->parsed()) return cmd_eval(eval_graph, eval_perm);
    if (s_bench->parsed())
      return cmd_bench(suite, s_bench, bench_params, repeat, jobs,
                       error_instances, error_curve);
    if (s_err->parsed())
      return cmd_error_dist(err_graph, err_seed, err_instances,
                            err_max_degree, err_out);
    if (s_gen->parsed()) return cmd_gen(gen_spec, gen_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
