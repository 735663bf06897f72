#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mist/error.hpp"
#include "mist/graph.hpp"

namespace mist {

enum class SolverMode { kExact, kGreedy, kAuto };

const char* to_string(SolverMode m);
SolverMode parse_solver_mode(const std::string& text);

struct PathSolverConfig {
  SolverMode mode = SolverMode::kAuto;
  std::size_t label_cap = 200000;
  double tie_epsilon = kDefaultTieEpsilon;
};

/// Directed subgraph holding every minimum-length s-t path: u->v is kept iff
/// dist(s,u) + len(u,v) + dist(v,t) = dist(s,t) within the tie epsilon.
/// Acyclic when all lengths are positive; zero-length edges may appear in
/// both directions, so walkers over it must keep paths simple.
struct ShortestDag {
  NodeId source = 0;
  NodeId target = 0;
  double distance = 0.0;
  std::vector<std::vector<NodeId>> successors;  // sorted by id rank

  std::size_t edge_count() const;
  bool contains(NodeId u, NodeId v) const;
};

/// Throws InfeasibleError when t is unreachable from s.
ShortestDag shortest_dag(const Graph& g, NodeId s, NodeId t,
                         double tie_epsilon = kDefaultTieEpsilon);

struct InterferencePath {
  Path path;
  std::size_t interference = 0;
  SolverMode mode = SolverMode::kExact;  // kExact or kGreedy: who produced it
  std::size_t labels = 0;                // labels created by the search
};

/// Thrown by exact mode when the label budget runs out. Carries the best
/// open label at the time (a partial path from s, in search order).
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, Path partial, std::size_t interference)
      : Error(ErrorKind::kBudgetExceeded, what),
        partial_(std::move(partial)),
        interference_(interference) {}

  const Path& best_partial() const { return partial_; }
  std::size_t best_interference() const { return interference_; }

 private:
  Path partial_;
  std::size_t interference_;
};

/// Among all minimum-length s-t paths, one minimizing |N[V(path)]|; equal
/// interference is broken by the lexicographically smallest id sequence.
/// Exact mode is label-setting over the shortest-path DAG with subset
/// dominance; Greedy is greedy_interference_path; Auto tries Exact and falls
/// back to Greedy when the label cap is hit.
InterferencePath min_interference_shortest_path(const Graph& g, NodeId s, NodeId t,
                                                const PathSolverConfig& cfg = {});

/// Best-first search over the shortest-path DAG ordered by (interference so
/// far, id rank), settling each node once. Always a shortest path; no
/// optimality claim on interference.
InterferencePath greedy_interference_path(const Graph& g, NodeId s, NodeId t,
                                          double tie_epsilon = kDefaultTieEpsilon);

/// Interference-oblivious shortest path: lexicographically smallest id
/// sequence among the minimum-length s-t paths.
Path lex_shortest_path(const Graph& g, NodeId s, NodeId t,
                       double tie_epsilon = kDefaultTieEpsilon);

/// Exact search without dominance pruning. Exponential; exists so tests can
/// compare pruned and unpruned searches.
InterferencePath min_interference_shortest_path_unpruned(const Graph& g, NodeId s, NodeId t,
                                                         const PathSolverConfig& cfg = {});

}  // namespace mist
