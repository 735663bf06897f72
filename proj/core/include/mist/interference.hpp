#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mist/graph.hpp"
#include "mist/node_set.hpp"

namespace mist {

// Closed-neighborhood interference metric |N[W]|. Solvers evaluate the
// metric only through these two functions (value-oracle access); nothing
// downstream assumes it is additive.

/// N[W] = union of N[v] over v in W. Empty for empty W.
NodeSet closed_neighborhood(const Graph& g, const NodeSet& w);

/// |N[W]|.
std::size_t interference(const Graph& g, const NodeSet& w);

// ---- property checks -------------------------------------------------------

/// A set function over node indices [0, universe), queried by value only.
using SetFunction = std::function<double(const NodeSet&)>;
using NodeNamer = std::function<std::string(NodeId)>;

struct Counterexample {
  std::string instance;             // which graph / source produced it
  std::vector<std::string> a;
  std::vector<std::string> b;
  std::optional<std::string> v;     // the added element, when applicable
  double lhs = 0.0;                 // side that should be >= rhs
  double rhs = 0.0;
};

struct PropertyReport {
  std::string property;
  std::size_t trials = 0;
  std::vector<Counterexample> violations;

  bool passed() const { return violations.empty(); }

  /// Appends `other`'s trials and violations; keeps this report's name.
  void absorb(const PropertyReport& other);
};

struct PropertyCheckOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::string instance;
  NodeNamer namer;  // defaults to decimal indices
};

// Generic forms: any set function on a finite universe. Violations are shrunk
// by greedy element removal before being reported.

/// Random nested A ⊆ B; asserts f(A) <= f(B).
PropertyReport check_monotone(std::size_t universe, const SetFunction& f,
                              const PropertyCheckOptions& opts);

/// Random A ⊆ B, v ∉ B; asserts f(A+v) - f(A) >= f(B+v) - f(B).
PropertyReport check_submodular(std::size_t universe, const SetFunction& f,
                                const PropertyCheckOptions& opts);

/// Random A, B; asserts f(A) + f(B) >= f(A ∪ B) + f(A ∩ B).
PropertyReport check_submodular_lattice(std::size_t universe, const SetFunction& f,
                                        const PropertyCheckOptions& opts);

// Graph forms, checking |N[·]| on g.
PropertyReport check_monotone(const Graph& g, std::size_t trials, std::uint64_t seed);
PropertyReport check_submodular(const Graph& g, std::size_t trials, std::uint64_t seed);
PropertyReport check_submodular_lattice(const Graph& g, std::size_t trials,
                                        std::uint64_t seed);

// ---- vicinal preorder ------------------------------------------------------

enum class VicinalRelation {
  kLessOrEqual,     // u ≲ v only
  kGreaterOrEqual,  // v ≲ u only
  kEquivalent,      // both
  kIncomparable,    // neither
};

const char* to_string(VicinalRelation r);

/// u ≲ v iff N(u) ⊆ N[v].
bool vicinal_leq(const Graph& g, NodeId u, NodeId v);

/// Requires u != v.
VicinalRelation vicinal_compare(const Graph& g, NodeId u, NodeId v);

/// Pairs (tree vertex v', outside vertex v) with v ∉ N[tree] and v' ≲ v.
/// A Pareto-optimal tree with at least two vertices has none.
std::vector<std::pair<NodeId, NodeId>> vicinal_violations(const Graph& g,
                                                          const NodeSet& tree_vertices);

}  // namespace mist
