// mist: command-line front end for interference-aware multicast trees.
//
//   mist gen   --nodes N --radius R --functions K --seed S --out FILE
//   mist solve --graph FILE --root ID --request F1,F2 --algo tssr|spt|st|exact
//              [--mode exact|greedy|auto] [--label-cap N] [--out FILE]
//   mist bench --config FILE.json --out-dir DIR [--threads N] [--no-timing]
//   mist check --suite lemma1|prune|prop1|all --trials N --seed S
//   mist paper --out-dir DIR
//
// Exit codes: 0 success, 1 config/input error, 2 infeasible instance,
// 3 property-suite failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mist/error.hpp"
#include "mist/exact_oracle.hpp"
#include "mist/experiment.hpp"
#include "mist/graph.hpp"
#include "mist/serialize.hpp"
#include "mist/steiner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitPropertyFailure = 3;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw mist::InputError("cannot write '" + path + "'");
  out << content;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mist::InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int exit_code_for(const mist::ResultTable& table) {
  for (const auto& row : table.rows) {
    if (!row.error.empty()) return kExitInfeasible;
  }
  return kExitOk;
}

void write_results(const std::string& dir, const mist::Graph& g,
                   const mist::ResultTable& table) {
  std::filesystem::create_directories(dir);
  write_file((std::filesystem::path(dir) / "results.csv").string(), mist::to_csv(table));
  write_file((std::filesystem::path(dir) / "results.json").string(),
             mist::table_to_json(g, table));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interference-aware multicast Steiner trees for wireless mesh networks"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random unit-disk mesh graph");
  mist::UnitDiskParams gen_params;
  std::string gen_out;
  gen->add_option("--nodes", gen_params.nodes, "Node count")->required();
  gen->add_option("--radius", gen_params.radius, "Connection radius in (0,1]")->required();
  gen->add_option("--functions", gen_params.functions, "Number of function labels F1..Fk")
      ->default_val(0);
  gen->add_option("--seed", gen_params.seed, "RNG seed")->default_val(0);
  gen->add_option("--out", gen_out, "Output graph file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Build one multicast tree");
  std::string graph_path, root, request, algo = "tssr", mode = "auto", solve_out;
  std::size_t label_cap = 200000, node_cap = mist::kDefaultNodeCap, solve_threads = 1;
  solve->add_option("--graph", graph_path, "Graph file")->required();
  solve->add_option("--root", root, "Root node id")->required();
  solve->add_option("--request", request, "Comma-separated function labels")->required();
  solve->add_option("--algo", algo, "tssr|spt|st|exact")
      ->check(CLI::IsMember({"tssr", "spt", "st", "exact"}));
  solve->add_option("--mode", mode, "Path solver mode")
      ->check(CLI::IsMember({"exact", "greedy", "auto"}));
  solve->add_option("--label-cap", label_cap, "Exact-search label budget");
  solve->add_option("--node-cap", node_cap, "Exact oracle node limit");
  solve->add_option("--threads", solve_threads, "Workers for pair solves");
  solve->add_option("--out", solve_out, "Output file (.json, or .csv for the exact front)");

  // bench
  auto* bench = app.add_subcommand("bench", "Run an experiment config");
  std::string config_path, bench_dir;
  std::size_t bench_threads = 0;
  bool no_timing = false;
  bench->add_option("--config", config_path, "Experiment config JSON")->required();
  bench->add_option("--out-dir", bench_dir, "Directory for results.csv/results.json")
      ->required();
  bench->add_option("--threads", bench_threads, "Override the config's thread count");
  bench->add_flag("--no-timing", no_timing, "Write runtime_ms as 0 for reproducible output");

  // check
  auto* check = app.add_subcommand("check", "Run property suites");
  mist::SuiteOptions suite_opts;
  std::string suite = "all", check_graph, check_out;
  check->add_option("--suite", suite, "lemma1|prune|prop1|all")
      ->check(CLI::IsMember({"lemma1", "prune", "prop1", "all"}));
  check->add_option("--trials", suite_opts.trials, "Trials per graph and property");
  check->add_option("--seed", suite_opts.seed, "RNG seed");
  check->add_option("--graphs", suite_opts.graphs, "Random graphs for lemma1");
  check->add_option("--graph", check_graph, "Check lemma1 on this graph instead");
  check->add_option("--out", check_out, "Report file (default stdout)");

  // paper
  auto* paper = app.add_subcommand("paper", "Run the bundled 11-request evaluation");
  std::string paper_dir;
  std::size_t paper_threads = 1;
  bool paper_timing = true;
  paper->add_option("--out-dir", paper_dir, "Output directory")->required();
  paper->add_option("--threads", paper_threads, "Worker threads");
  paper->add_flag("!--no-timing", paper_timing, "Write runtime_ms as 0");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      emit(gen_out, mist::save_graph(mist::generate_unit_disk(gen_params)));
      return kExitOk;
    }

    if (*solve) {
      const mist::Graph g = mist::load_graph_file(graph_path);
      const mist::MulticastRequest req = mist::make_request(g, root, split_csv(request));
      mist::SolveOptions opts;
      opts.path.mode = mist::parse_solver_mode(mode);
      opts.path.label_cap = label_cap;
      opts.threads = solve_threads;
      if (algo == "exact") {
        const auto front = mist::enumerate_pareto_front(g, req, node_cap);
        const bool csv = solve_out.size() > 4 && solve_out.ends_with(".csv");
        emit(solve_out, csv ? mist::front_to_csv(g, front) : mist::front_to_json(g, front));
        return kExitOk;
      }
      mist::SteinerTreeResult tree = algo == "tssr" ? mist::tssr(g, req, opts)
                                     : algo == "st" ? mist::st_baseline(g, req, opts)
                                                    : mist::spt_baseline(g, req);
      emit(solve_out, mist::tree_to_json(g, tree));
      return kExitOk;
    }

    if (*bench) {
      const std::filesystem::path cfg_file(config_path);
      mist::ExperimentConfig cfg = mist::parse_experiment_config(
          read_file(config_path), cfg_file.parent_path().string());
      if (bench_threads > 0) cfg.threads = bench_threads;
      if (no_timing) cfg.timing = false;
      const mist::Graph g = cfg.graph_path ? mist::load_graph_file(*cfg.graph_path)
                                           : mist::generate_unit_disk(*cfg.generator);
      const mist::ResultTable table = mist::run_experiment(g, cfg);
      write_results(bench_dir, g, table);
      return exit_code_for(table);
    }

    if (*check) {
      suite_opts.suite = mist::parse_suite(suite);
      if (!check_graph.empty()) suite_opts.graph = mist::load_graph_file(check_graph);
      const mist::SuiteReport report = mist::run_property_suites(suite_opts);
      emit(check_out, mist::suite_to_json(report));
      return report.passed() ? kExitOk : kExitPropertyFailure;
    }

    if (*paper) {
      mist::MeshInstance inst = mist::reconstruct_mesh_instance();
      mist::ExperimentConfig cfg;
      cfg.graph_path = "bundled";
      cfg.requests = inst.requests;
      cfg.algorithms = {mist::Algorithm::kTssr, mist::Algorithm::kSpt, mist::Algorithm::kSt};
      cfg.threads = paper_threads;
      cfg.timing = paper_timing;
      const mist::ResultTable table = mist::run_experiment(inst.graph, cfg);
      std::filesystem::create_directories(paper_dir);
      write_file((std::filesystem::path(paper_dir) / "graph.json").string(),
                 mist::save_graph(inst.graph));
      write_results(paper_dir, inst.graph, table);
      std::cout << mist::to_csv(table);
      return exit_code_for(table);
    }
  } catch (const mist::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == mist::ErrorKind::kInfeasible ? kExitInfeasible : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
