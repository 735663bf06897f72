#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mist/graph.hpp"
#include "mist/interference.hpp"
#include "mist/pareto_path.hpp"
#include "mist/steiner.hpp"

namespace mist {

enum class Algorithm { kTssr, kSpt, kSt, kExact };

const char* to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& text);

struct NamedRequest {
  std::string id;
  std::string root;
  std::vector<std::string> functions;
};

// Requests drawn at run time from the graph's function labels: a random
// root plus between min and max distinct functions.
struct RandomRequests {
  std::size_t count = 0;
  std::size_t min_functions = 1;
  std::size_t max_functions = 3;
};

struct ExperimentConfig {
  // Exactly one graph source.
  std::optional<std::string> graph_path;
  std::optional<UnitDiskParams> generator;

  std::vector<NamedRequest> requests;
  std::optional<RandomRequests> random_requests;
  std::vector<Algorithm> algorithms;
  PathSolverConfig path;
  std::size_t node_cap = 16;  // exact oracle
  std::size_t threads = 1;
  std::uint64_t seed = 0;
  // Measured runtimes make output differ run to run; off writes 0.
  bool timing = true;
};

/// Parses the bench config JSON. `base_dir` resolves a relative graph path.
/// Throws InputError on any invalid field.
ExperimentConfig parse_experiment_config(std::string_view text,
                                         const std::string& base_dir = ".");

/// Rejects configs without algorithms or requests, or with both/neither
/// graph source.
void validate(const ExperimentConfig& cfg);

struct ResultRow {
  std::string request_id;
  Algorithm algorithm = Algorithm::kTssr;
  std::optional<double> length;
  std::optional<std::size_t> interference;
  double runtime_ms = 0.0;
  std::string mode;
  std::string error;  // empty on success
  std::optional<SteinerTreeResult> tree;
};

struct ResultTable {
  std::vector<ResultRow> rows;  // request order, then algorithm order
};

/// Fixed requests followed by the drawn random ones (ids Q1, Q2, ...).
std::vector<NamedRequest> expand_requests(const Graph& g, const ExperimentConfig& cfg);

/// Solves every (request, algorithm) cell on `g`. Cell failures land in the
/// row's error field. Rows are ordered independent of thread count.
ResultTable run_experiment(const Graph& g, const ExperimentConfig& cfg);

/// Loads or generates the configured graph, then runs.
ResultTable run_experiment(const ExperimentConfig& cfg);

/// CSV with header request_id,algorithm,length,interference,runtime_ms,mode.
std::string to_csv(const ResultTable& table);

// ---- bundled network -------------------------------------------------------

struct MeshInstance {
  Graph graph;
  std::vector<NamedRequest> requests;  // R1..R11, root N1
};

/// Reconstructed 16-node evaluation network: root N1 hosts F1, N2 hosts F2,
/// N1-N2 is a unit link, both have degree 3 and |N[{N1,N2}]| = 6.
MeshInstance reconstruct_mesh_instance();

// ---- property suites -------------------------------------------------------

enum class Suite { kLemma1, kPrune, kProp1, kAll };

Suite parse_suite(const std::string& text);

struct SuiteOptions {
  Suite suite = Suite::kAll;
  std::size_t trials = 1000;  // per graph and property
  std::uint64_t seed = 0;
  std::size_t graphs = 50;
  std::size_t max_nodes = 60;  // unit-disk sizes drawn from [2, max_nodes]
  std::optional<Graph> graph;  // use this instead of random graphs
};

struct SuiteReport {
  std::vector<PropertyReport> reports;
  bool passed() const;
};

SuiteReport run_property_suites(const SuiteOptions& opts);

/// Random tree with a random terminal subset, used by the pruning suite.
struct RandomTreeCase {
  Graph graph;
  SteinerTreeResult tree;
  NodeSet terminals;
};
RandomTreeCase random_tree_case(std::uint64_t seed, std::size_t max_nodes = 30);

/// Small connected unit-disk instance with 2..4 distinct terminals, shared by
/// the oracle comparisons. Node count in [min_nodes, max_nodes]. About half
/// the cases use hop lengths (all edges 1), where ties are common.
struct OracleCase {
  Graph graph;
  MulticastRequest request;
};
OracleCase random_oracle_case(std::uint64_t seed, std::size_t min_nodes = 5,
                              std::size_t max_nodes = 12);

}  // namespace mist
