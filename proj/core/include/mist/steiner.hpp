#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mist/graph.hpp"
#include "mist/pareto_path.hpp"

namespace mist {

struct MulticastRequest {
  NodeId root = 0;
  std::vector<std::string> functions;  // ordered, distinct, non-empty
};

/// Resolves ids/labels and validates: known root, k >= 1, distinct labels.
MulticastRequest make_request(const Graph& g, std::string_view root,
                              std::vector<std::string> functions);

/// {root} ∪ hosts of the requested functions.
NodeSet terminals_of(const Graph& g, const MulticastRequest& req);

// ---- metric closure --------------------------------------------------------

struct ClosureEntry {
  NodeId a = 0;  // rank(a) < rank(b)
  NodeId b = 0;
  double length = 0.0;  // = shortest_distance(a, b)
  Path witness;
  std::size_t interference = 0;  // |N[V(witness)]|
  SolverMode mode = SolverMode::kExact;
  bool selected = false;  // part of the closure MST
};

struct MetricClosure {
  std::vector<NodeId> terminals;      // sorted by id rank
  std::vector<ClosureEntry> entries;  // all unordered pairs, (i, j) order
};

enum class WitnessPolicy {
  kMinInterference,  // TSSR: min_interference_shortest_path
  kLexShortest,      // ST baseline: interference-oblivious
};

/// One path solve per unordered terminal pair, run on up to `threads` workers.
MetricClosure metric_closure(const Graph& g, const NodeSet& terminals,
                             const PathSolverConfig& cfg,
                             WitnessPolicy policy = WitnessPolicy::kMinInterference,
                             std::size_t threads = 1);

/// Kruskal over the closure: minimum total length, ties by witness
/// interference then by (a, b) id ranks. Returns indices into mc.entries.
std::vector<std::size_t> minimum_spanning_tree(const Graph& g, const MetricClosure& mc,
                                               double tie_epsilon = kDefaultTieEpsilon);

// ---- trees -----------------------------------------------------------------

struct SteinerTreeResult {
  std::string algorithm;
  NodeId root = 0;
  NodeSet vertices;
  std::vector<Edge> edges;
  double total_length = 0.0;
  std::size_t interference = 0;
  std::vector<ClosureEntry> witnesses;  // per-pair diagnostics (TSSR / ST)
  std::string mode;                     // exact | greedy | mixed | plain
};

/// Builds a result from an edge list, recomputing length and |N[vertices]|.
SteinerTreeResult make_tree(const Graph& g, NodeId root, std::vector<Edge> edges,
                            std::string algorithm);

/// Empty when every invariant holds: edges form a tree over vertices, all
/// terminals and the root covered, metrics consistent, and (when
/// `require_pruned`) every non-root leaf is a terminal.
std::vector<std::string> check_tree(const Graph& g, const SteinerTreeResult& tree,
                                    const NodeSet& terminals, bool require_pruned = true);

/// Repeatedly removes leaves outside terminals ∪ {root}; metrics recomputed.
SteinerTreeResult prune_non_terminal_leaves(const Graph& g, const SteinerTreeResult& tree,
                                            const NodeSet& terminals);

/// Witness paths of the chosen closure edges → union → length-MST of the
/// union → pruning.
SteinerTreeResult kmb_expand(const Graph& g, const MetricClosure& mc,
                             const std::vector<std::size_t>& mst_edges,
                             const NodeSet& terminals, NodeId root);

struct SolveOptions {
  PathSolverConfig path;
  std::size_t threads = 1;
};

/// Two-stage submodular relaxation: interference-minimizing shortest paths
/// between every terminal pair, then an MST on that closure, expanded back.
SteinerTreeResult tssr(const Graph& g, const MulticastRequest& req,
                       const SolveOptions& opts = {});

/// Union of lexicographically smallest shortest paths from the root, taken
/// from one single-source shortest-path tree.
SteinerTreeResult spt_baseline(const Graph& g, const MulticastRequest& req,
                               double tie_epsilon = kDefaultTieEpsilon);

/// Metric-closure 2-approximation with interference-oblivious witnesses.
SteinerTreeResult st_baseline(const Graph& g, const MulticastRequest& req,
                              const SolveOptions& opts = {});

}  // namespace mist
