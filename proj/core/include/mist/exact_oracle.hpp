#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mist/graph.hpp"
#include "mist/steiner.hpp"

namespace mist {

// Brute-force ground truth for small instances. Deliberately shares no
// search code with the solvers it checks: distances come from Floyd-Warshall
// and paths from plain depth-first enumeration.

struct ParetoPoint {
  double length = 0.0;
  std::size_t interference = 0;
  NodeSet witness_vertices;
  std::vector<Edge> witness_edges;
};

inline constexpr std::size_t kDefaultNodeCap = 16;

/// Every vertex set W ⊇ S with connected G[W] yields the candidate
/// (MST length of G[W], |N[W]|); the non-dominated candidates are returned
/// sorted by increasing length (and so strictly decreasing interference).
/// Among candidates with equal coordinates the witness with the fewest
/// vertices, then the smallest bitmask, is kept.
std::vector<ParetoPoint> enumerate_pareto_front(const Graph& g, const MulticastRequest& req,
                                                std::size_t node_cap = kDefaultNodeCap,
                                                double tie_epsilon = kDefaultTieEpsilon);

struct ShortestPathOptimum {
  double length = 0.0;
  std::size_t interference = 0;
  std::size_t paths = 0;  // number of shortest paths enumerated
};

/// Enumerates every simple s-t path whose length is within epsilon of the
/// Floyd-Warshall distance and returns the minimum interference among them.
ShortestPathOptimum exhaustive_min_interference_sp(const Graph& g, NodeId s, NodeId t,
                                                   double tie_epsilon = kDefaultTieEpsilon);

/// All-pairs distances by Floyd-Warshall.
std::vector<std::vector<double>> floyd_warshall(const Graph& g);

struct FrontComparison {
  double length_ratio = 0.0;        // result length / min front length
  double interference_ratio = 0.0;  // result interference / min front interference
  bool length_bound_violated = false;  // length_ratio > 2
};

/// Throws InputError on an empty front.
FrontComparison verify_tree_against_front(const std::vector<ParetoPoint>& front,
                                          const SteinerTreeResult& result,
                                          double tie_epsilon = kDefaultTieEpsilon);

/// Minimum-length front point turned into a tree result tagged "EXACT".
SteinerTreeResult front_min_length_tree(const Graph& g, const MulticastRequest& req,
                                        const std::vector<ParetoPoint>& front);

}  // namespace mist
