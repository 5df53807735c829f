// hitwalk: exact, closed-form, and simulated hitting times of random walks
// on finite undirected graphs.
//
// Exit codes: 0 success, 1 usage error, 2 parse/invariant error,
// 3 unreachable, 4 comparison mismatch, 5 simulation truncated.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hitwalk/closed_forms.hpp"
#include "hitwalk/families.hpp"
#include "hitwalk/graph_io.hpp"
#include "hitwalk/monte_carlo.hpp"
#include "hitwalk/solver.hpp"

using nlohmann::json;
using namespace hitwalk;

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::unreachable:
      return 3;
    case ErrorKind::comparison_mismatch:
      return 4;
    case ErrorKind::all_walks_truncated:
      return 5;
    case ErrorKind::io_error:
      return 1;
    default:
      return 2;
  }
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const json& report, bool as_json, const std::string& plain) {
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << plain << "\n";
}

struct GraphInput {
  std::string path;
  Graph graph;
};

GraphInput load_input(const std::string& path) {
  return {path, load_graph_file(path)};
}

json graph_echo(const GraphInput& in) {
  return json{{"file", in.path},
              {"n", in.graph.vertex_count()},
              {"m", in.graph.edge_count()}};
}

void write_graph(const Graph& g, const std::string& out_path) {
  if (out_path == "-")
    std::cout << serialize_graph(g);
  else
    save_graph_file(g, out_path);
}

Backend parse_backend(const std::string& name) {
  if (name == "exact") return Backend::exact;
  if (name == "float") return Backend::floating;
  fail(ErrorKind::invalid_parameter, "backend must be exact or float");
}

std::vector<int> parse_parent_list(const std::string& text) {
  std::vector<int> parents;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      parents.push_back(std::stoi(item));
    } catch (const std::exception&) {
      fail(ErrorKind::invalid_parameter,
           "parent list must be comma-separated integers");
    }
  }
  return parents;
}

// ---- compare -----------------------------------------------------------

struct CompareCheck {
  int source, target;
  BigInt formula;
  Rational exact;
  bool equal() const { return Rational(formula) == exact; }
};

struct McOptions {
  bool enabled = false;
  std::uint64_t seed = 0;
  long long trials = 100'000;
};

void run_compare(const std::string& family, const json& params, const Graph& g,
                 const std::vector<CompareCheck>& checks,
                 std::pair<int, int> mc_pair, const McOptions& mc, bool as_json) {
  long long equal = 0;
  json mismatches = json::array();
  for (const auto& c : checks) {
    if (c.equal()) {
      ++equal;
    } else {
      mismatches.push_back(json{{"source", c.source},
                                {"target", c.target},
                                {"formula", c.formula.get_str()},
                                {"exact", c.exact.str()}});
    }
  }

  json mc_block;
  std::string mc_line;
  if (mc.enabled) {
    const auto [src, dst] = mc_pair;
    Rational expected = 0;
    for (const auto& c : checks)
      if (c.source == src && c.target == dst) expected = c.exact;
    auto est = simulate_hitting_time(g, src, dst,
                                     {.seed = mc.seed, .trials = mc.trials});
    double diff = std::abs(est.mean - expected.to_double());
    double z = est.std_error > 0 ? diff / est.std_error : (diff == 0 ? 0 : HUGE_VAL);
    mc_block = json{{"source", src},       {"target", dst},
                    {"mean", est.mean},    {"std_error", est.std_error},
                    {"exact", expected.str()}, {"z", z},
                    {"flagged", z > 4.0}};
    std::ostringstream line;
    line << "montecarlo " << src << "->" << dst << " mean=" << fmt_double(est.mean)
         << " std_error=" << fmt_double(est.std_error) << " z=" << fmt_double(z)
         << (z > 4.0 ? " FLAGGED" : "");
    mc_line = line.str();
  }

  bool all_equal = equal == static_cast<long long>(checks.size());
  json report{{"method", "compare"},
              {"family", family},
              {"params", params},
              {"total", checks.size()},
              {"equal", equal},
              {"mismatches", mismatches},
              {"mc", mc.enabled ? mc_block : json(nullptr)},
              {"all_equal", all_equal}};

  std::ostringstream plain;
  plain << family << " " << params.dump() << ": " << equal << "/" << checks.size()
        << " pairs agree";
  for (const auto& c : checks)
    if (!c.equal())
      plain << "\nMISMATCH " << c.source << "->" << c.target << " formula="
            << c.formula.get_str() << " exact=" << c.exact.str();
  if (!mc_line.empty()) plain << "\n" << mc_line;
  emit(report, as_json, plain.str());

  if (!all_equal)
    fail(ErrorKind::comparison_mismatch,
         std::to_string(checks.size() - equal) + " pair(s) disagree");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hitwalk: hitting times of random walks on finite undirected graphs\n"
      "(closed formulas, exact or floating-point linear solves, and seeded\n"
      "Monte Carlo simulation)"};
  // --h is a real option (tree height); keep only the long help flag.
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- generate ----------------------------------------------------------
  auto* gen = app.add_subcommand("generate", "generate a family graph");
  gen->require_subcommand(1);
  std::string gen_out = "-";
  int gp_n = 0, gc_n = 0, gs_leaves = 0, gg_d = 0, gg_m = 0, gh_d = 0;
  int gd_d = 0, gd_h = 0, gt_k = 0, gt_l = 0;
  std::string gtree_parents;

  auto add_gen = [&](const char* name, const char* help) {
    auto* c = gen->add_subcommand(name, help);
    c->add_option("-o,--output", gen_out, "output file, - for stdout");
    return c;
  };
  {
    auto* c = add_gen("path", "path with --n vertices");
    c->add_option("--n", gp_n, "vertex count")->required();
    c->callback([&] { write_graph(generate(Path{gp_n}), gen_out); });
  }
  {
    auto* c = add_gen("cycle", "cycle with --n vertices");
    c->add_option("--n", gc_n, "vertex count")->required();
    c->callback([&] { write_graph(generate(Cycle{gc_n}), gen_out); });
  }
  {
    auto* c = add_gen("star", "star with --leaves leaves around center 0");
    c->add_option("--leaves", gs_leaves, "leaf count")->required();
    c->callback([&] { write_graph(generate(Star{gs_leaves}), gen_out); });
  }
  {
    auto* c = add_gen("grid", "--d dimensional grid, --m vertices per side");
    c->add_option("--d", gg_d, "dimensions")->required();
    c->add_option("--m", gg_m, "side length")->required();
    c->callback([&] { write_graph(generate(Grid{gg_d, gg_m}), gen_out); });
  }
  {
    auto* c = add_gen("hypercube", "--d dimensional hypercube");
    c->add_option("--d", gh_d, "dimensions")->required();
    c->callback([&] { write_graph(generate(Hypercube{gh_d}), gen_out); });
  }
  {
    auto* c = add_gen("dary", "complete --d ary tree of height --h");
    c->add_option("--d", gd_d, "arity")->required();
    c->add_option("--h", gd_h, "height")->required();
    c->callback([&] { write_graph(generate(CompleteDaryTree{gd_d, gd_h}), gen_out); });
  }
  {
    auto* c = add_gen("tadpole", "--k cycle attached to a --l vertex tail");
    c->add_option("--k", gt_k, "cycle length")->required();
    c->add_option("--l", gt_l, "tail length")->required();
    c->callback([&] { write_graph(generate(Tadpole{gt_k, gt_l}), gen_out); });
  }
  {
    auto* c = add_gen("tree", "tree from --parents list, e.g. -1,0,0,1");
    c->add_option("--parents", gtree_parents, "comma-separated parent ids")->required();
    c->callback([&] {
      write_graph(generate(TreeFromParents{parse_parent_list(gtree_parents)}), gen_out);
    });
  }

  // ---- solve ------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "hitting time from a linear solve");
  std::string solve_file, solve_backend = "exact";
  int solve_source = 0, solve_target = 0;
  bool solve_json = false;
  solve->add_option("graph", solve_file, "graph file")->required();
  solve->add_option("--source", solve_source, "start vertex")->required();
  solve->add_option("--target", solve_target, "target vertex")->required();
  solve->add_option("--backend", solve_backend, "exact or float (default exact)");
  solve->add_flag("--json", solve_json, "emit a JSON report");
  solve->callback([&] {
    GraphInput in = load_input(solve_file);
    Backend backend = parse_backend(solve_backend);
    json report{{"method", backend == Backend::exact ? "exact" : "float"},
                {"graph", graph_echo(in)},
                {"source", solve_source},
                {"target", solve_target}};
    std::string plain;
    bool reachable = true;
    if (backend == Backend::exact) {
      auto value = hitting_time_exact(in.graph, solve_source, solve_target);
      reachable = value.has_value();
      report["value"] = reachable ? json(value->str()) : json("unreachable");
      plain = reachable ? value->str() : "unreachable";
    } else {
      auto value = hitting_time_float(in.graph, solve_source, solve_target);
      reachable = value.has_value();
      report["value"] = reachable ? json(*value) : json("unreachable");
      plain = reachable ? fmt_double(*value) : "unreachable";
    }
    emit(report, solve_json, plain);
    if (!reachable) exit_code = 3;
  });

  // ---- formula ----------------------------------------------------------
  auto* formula = app.add_subcommand("formula", "closed-form hitting times");
  formula->require_subcommand(1);
  bool formula_json = false;
  long long fs_e = 0, fs_k = 0;
  int fg_d = 0, fg_m = 0, fh_d = 0;
  std::string ft_file;
  int ft_v = 0, ft_u = 0;
  int fte_k = 0, fte_l = 0, ftw_k = 0, ftw_l = 0, ftw_w = 0;
  int fd_d = 0, fd_h = 0, fd_u = 0, fd_v = 0;
  int fdr_d = 0, fdr_h = 0, fdr_l = 0, fdl_d = 0, fdl_h = 0, fdl_l = 0;

  auto emit_formula = [&](const std::string& family, const json& params,
                          const std::string& value) {
    json report{{"method", "formula"},
                {"family", family},
                {"params", params},
                {"value", value}};
    emit(report, formula_json, value);
  };
  auto add_formula = [&](const char* name, const char* help) {
    auto* c = formula->add_subcommand(name, help);
    c->add_flag("--json", formula_json, "emit a JSON report");
    return c;
  };
  {
    auto* c = add_formula("symmetric",
                          "neighbor to a degree --k target in a graph with "
                          "--e edges that looks alike from every neighbor");
    c->add_option("--e", fs_e, "edge count")->required();
    c->add_option("--k", fs_k, "target degree")->required();
    c->callback([&] {
      emit_formula("symmetric", {{"e", fs_e}, {"k", fs_k}},
                   symmetric_neighbor_ht(fs_e, fs_k).str());
    });
  }
  {
    auto* c = add_formula("grid", "corner's neighbor to the corner");
    c->add_option("--d", fg_d, "dimensions")->required();
    c->add_option("--m", fg_m, "side length")->required();
    c->callback([&] {
      emit_formula("grid", {{"d", fg_d}, {"m", fg_m}},
                   grid_corner_ht(fg_d, fg_m).get_str());
    });
  }
  {
    auto* c = add_formula("hypercube", "any vertex to a neighbor");
    c->add_option("--d", fh_d, "dimensions")->required();
    c->callback([&] {
      emit_formula("hypercube", {{"d", fh_d}}, hypercube_neighbor_ht(fh_d).get_str());
    });
  }
  {
    auto* c = add_formula("tree", "vertex --v to its neighbor --u in a tree file");
    c->add_option("--graph", ft_file, "tree graph file")->required();
    c->add_option("--v", ft_v, "source vertex")->required();
    c->add_option("--u", ft_u, "adjacent target vertex")->required();
    c->callback([&] {
      GraphInput in = load_input(ft_file);
      json params{{"graph", graph_echo(in)}, {"v", ft_v}, {"u", ft_u}};
      emit_formula("tree", params, tree_neighbor_ht(in.graph, ft_v, ft_u).get_str());
    });
  }
  {
    auto* c = add_formula("tadpole-end", "tail end's neighbor to the tail end");
    c->add_option("--k", fte_k, "cycle length")->required();
    c->add_option("--l", fte_l, "tail length")->required();
    c->callback([&] {
      emit_formula("tadpole-end", {{"k", fte_k}, {"l", fte_l}},
                   tadpole_end_ht(fte_k, fte_l).get_str());
    });
  }
  {
    auto* c = add_formula("tadpole-to-end", "any vertex --w to the tail end");
    c->add_option("--k", ftw_k, "cycle length")->required();
    c->add_option("--l", ftw_l, "tail length")->required();
    c->add_option("--w", ftw_w, "source vertex id")->required();
    c->callback([&] {
      emit_formula("tadpole-to-end", {{"k", ftw_k}, {"l", ftw_l}, {"w", ftw_w}},
                   tadpole_ht_to_end(ftw_k, ftw_l, ftw_w).get_str());
    });
  }
  {
    auto* c = add_formula("dary", "level-order vertex --u to vertex --v");
    c->add_option("--d", fd_d, "arity")->required();
    c->add_option("--h", fd_h, "height")->required();
    c->add_option("--u", fd_u, "source id")->required();
    c->add_option("--v", fd_v, "target id")->required();
    c->callback([&] {
      emit_formula("dary", {{"d", fd_d}, {"h", fd_h}, {"u", fd_u}, {"v", fd_v}},
                   dary_ht(fd_d, fd_h, fd_u, fd_v).get_str());
    });
  }
  {
    auto* c = add_formula("dary-to-root", "vertex at depth --l to the root");
    c->add_option("--d", fdr_d, "arity")->required();
    c->add_option("--h", fdr_h, "height")->required();
    c->add_option("--l", fdr_l, "depth of the source")->required();
    c->callback([&] {
      emit_formula("dary-to-root", {{"d", fdr_d}, {"h", fdr_h}, {"l", fdr_l}},
                   dary_to_root_ht(fdr_d, fdr_h, fdr_l).get_str());
    });
  }
  {
    auto* c = add_formula("dary-to-leaf", "ancestor --l levels above a leaf, to it");
    c->add_option("--d", fdl_d, "arity")->required();
    c->add_option("--h", fdl_h, "height")->required();
    c->add_option("--l", fdl_l, "distance above the leaf")->required();
    c->callback([&] {
      emit_formula("dary-to-leaf", {{"d", fdl_d}, {"h", fdl_h}, {"l", fdl_l}},
                   dary_ancestor_to_leaf_ht(fdl_d, fdl_h, fdl_l).get_str());
    });
  }

  // ---- simulate ----------------------------------------------------------
  auto* sim = app.add_subcommand("simulate", "Monte Carlo hitting time");
  std::string sim_file;
  int sim_source = 0, sim_target = 0;
  std::uint64_t sim_seed = 0;
  long long sim_trials = 10'000, sim_max_steps = 10'000'000;
  bool sim_json = false;
  sim->add_option("graph", sim_file, "graph file")->required();
  sim->add_option("--source", sim_source, "start vertex")->required();
  sim->add_option("--target", sim_target, "target vertex")->required();
  sim->add_option("--seed", sim_seed, "master seed (default 0)");
  sim->add_option("--trials", sim_trials, "walk count (default 10000)");
  sim->add_option("--max-steps", sim_max_steps, "per-walk step cap");
  sim->add_flag("--json", sim_json, "emit a JSON report");
  sim->callback([&] {
    GraphInput in = load_input(sim_file);
    WalkConfig cfg{.seed = sim_seed, .trials = sim_trials, .max_steps = sim_max_steps};
    auto est = simulate_hitting_time(in.graph, sim_source, sim_target, cfg);
    json report{{"method", "montecarlo"},
                {"graph", graph_echo(in)},
                {"source", sim_source},
                {"target", sim_target},
                {"seed", sim_seed},
                {"trials", sim_trials},
                {"max_steps", sim_max_steps},
                {"value",
                 {{"mean", est.mean},
                  {"std_error", est.std_error},
                  {"trials_completed", est.trials_completed},
                  {"truncated", est.truncated}}}};
    std::ostringstream plain;
    plain << "mean=" << fmt_double(est.mean)
          << " std_error=" << fmt_double(est.std_error)
          << " trials_completed=" << est.trials_completed
          << " truncated=" << est.truncated;
    emit(report, sim_json, plain.str());
    if (!est.valid()) exit_code = 5;
  });

  // ---- compare ------------------------------------------------------------
  auto* cmp = app.add_subcommand("compare", "closed forms against the exact solver");
  cmp->require_subcommand(1);
  bool cmp_json = false;
  McOptions mc;
  int cg_d = 0, cg_m = 0, ch_d = 0, ct_k = 0, ct_l = 0;
  int cd_d = 0, cd_h = 0, cd_u = -1, cd_v = -1;
  bool cd_all = false;

  auto add_cmp = [&](const char* name, const char* help) {
    auto* c = cmp->add_subcommand(name, help);
    c->add_flag("--json", cmp_json, "emit a JSON report");
    c->add_flag("--mc", mc.enabled, "add a Monte Carlo cross-check");
    c->add_option("--mc-trials", mc.trials, "Monte Carlo trials (default 100000)");
    c->add_option("--mc-seed", mc.seed, "Monte Carlo seed (default 0)");
    return c;
  };
  {
    auto* c = add_cmp("grid", "corner formula vs exact solve");
    c->add_option("--d", cg_d, "dimensions")->required();
    c->add_option("--m", cg_m, "side length")->required();
    c->callback([&] {
      Graph g = generate(Grid{cg_d, cg_m});
      std::vector<CompareCheck> checks{
          {1, 0, grid_corner_ht(cg_d, cg_m), *hitting_time_exact(g, 1, 0)}};
      run_compare("grid", {{"d", cg_d}, {"m", cg_m}}, g, checks, {1, 0}, mc, cmp_json);
    });
  }
  {
    auto* c = add_cmp("hypercube", "neighbor formula vs exact solve");
    c->add_option("--d", ch_d, "dimensions")->required();
    c->callback([&] {
      Graph g = generate(Hypercube{ch_d});
      std::vector<CompareCheck> checks{
          {1, 0, hypercube_neighbor_ht(ch_d), *hitting_time_exact(g, 1, 0)}};
      run_compare("hypercube", {{"d", ch_d}}, g, checks, {1, 0}, mc, cmp_json);
    });
  }
  {
    auto* c = add_cmp("tadpole", "all vertices to the tail end vs exact solve");
    c->add_option("--k", ct_k, "cycle length")->required();
    c->add_option("--l", ct_l, "tail length")->required();
    c->callback([&] {
      Graph g = generate(Tadpole{ct_k, ct_l});
      int end = ct_k + ct_l - 1;
      auto hv = hitting_times_to_exact(g, end);
      std::vector<CompareCheck> checks;
      for (int w = 0; w < g.vertex_count(); ++w)
        checks.push_back({w, end, tadpole_ht_to_end(ct_k, ct_l, w), *hv[w]});
      int u = ct_l >= 2 ? end - 1 : 0;
      run_compare("tadpole", {{"k", ct_k}, {"l", ct_l}}, g, checks, {u, end}, mc,
                  cmp_json);
    });
  }
  {
    auto* c = add_cmp("dary", "pairwise formula vs exact solve");
    c->add_option("--d", cd_d, "arity")->required();
    c->add_option("--h", cd_h, "height")->required();
    c->add_option("--u", cd_u, "source id (with --v)");
    c->add_option("--v", cd_v, "target id (with --u)");
    c->add_flag("--all-pairs", cd_all, "check every ordered pair");
    c->callback([&] {
      Graph g = generate(CompleteDaryTree{cd_d, cd_h});
      std::vector<CompareCheck> checks;
      std::pair<int, int> mc_pair{g.vertex_count() - 1, 0};
      if (cd_all) {
        auto all = all_pairs_exact(g);
        for (int v = 0; v < g.vertex_count(); ++v)
          for (int u = 0; u < g.vertex_count(); ++u)
            checks.push_back({u, v, dary_ht(cd_d, cd_h, u, v), *all[v][u]});
      } else {
        if (cd_u < 0 || cd_v < 0)
          fail(ErrorKind::invalid_parameter,
               "dary compare needs --u and --v, or --all-pairs");
        checks.push_back({cd_u, cd_v, dary_ht(cd_d, cd_h, cd_u, cd_v),
                          *hitting_time_exact(g, cd_u, cd_v)});
        mc_pair = {cd_u, cd_v};
      }
      run_compare("dary", {{"d", cd_d}, {"h", cd_h}}, g, checks, mc_pair, mc,
                  cmp_json);
    });
  }

  // ---- all-pairs ----------------------------------------------------------
  auto* ap = app.add_subcommand("all-pairs", "full hitting-time matrix");
  std::string ap_file, ap_backend = "exact", ap_format = "csv";
  ap->add_option("graph", ap_file, "graph file")->required();
  ap->add_option("--backend", ap_backend, "exact or float (default exact)");
  ap->add_option("--format", ap_format, "csv or json (default csv)");
  ap->callback([&] {
    GraphInput in = load_input(ap_file);
    Backend backend = parse_backend(ap_backend);
    if (ap_format != "csv" && ap_format != "json")
      fail(ErrorKind::invalid_parameter, "format must be csv or json");
    const int n = in.graph.vertex_count();

    // matrix[source][target], stringified; floats kept numeric for JSON.
    std::vector<std::vector<json>> cells(n, std::vector<json>(n));
    if (backend == Backend::exact) {
      auto all = all_pairs_exact(in.graph);
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
          cells[s][t] = all[t].reachable(s) ? json(all[t][s]->str()) : json("inf");
    } else {
      auto all = all_pairs_float(in.graph);
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
          cells[s][t] = all[t].reachable(s) ? json(*all[t][s]) : json("inf");
    }

    if (ap_format == "json") {
      json report{{"command", "all-pairs"},
                  {"graph", graph_echo(in)},
                  {"backend", ap_backend},
                  {"matrix", cells}};
      std::cout << report.dump(2) << "\n";
      return;
    }
    std::cout << "hitwalk all-pairs n=" << n << "\n";
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        if (t) std::cout << ',';
        const json& cell = cells[s][t];
        if (cell.is_string())
          std::cout << '"' << cell.get<std::string>() << '"';
        else
          std::cout << fmt_double(cell.get<double>());
      }
      std::cout << '\n';
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return exit_code;
}
