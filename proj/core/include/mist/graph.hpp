#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mist/node_set.hpp"

namespace mist {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr double kDefaultTieEpsilon = 1e-9;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double length = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId node = 0;
  double length = 0.0;
};

struct NodeInfo {
  std::string id;
  std::optional<std::string> function;
  std::optional<double> x;
  std::optional<double> y;

  friend bool operator==(const NodeInfo&, const NodeInfo&) = default;
};

class GraphBuilder;

// Undirected weighted wireless mesh graph with optional function labels.
// Immutable once built; node ids are opaque strings mapped to dense indices
// in insertion order.
class Graph {
 public:
  Graph() = default;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const NodeInfo& node(NodeId v) const { return nodes_.at(v); }
  const std::string& name(NodeId v) const { return nodes_.at(v).id; }
  std::span<const NodeInfo> nodes() const { return nodes_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Neighbor> adjacency(NodeId v) const { return adjacency_.at(v); }
  std::size_t degree(NodeId v) const { return adjacency_.at(v).size(); }

  /// Throws InputError for unknown ids.
  NodeId index_of(std::string_view id) const;
  std::optional<NodeId> find(std::string_view id) const;

  /// Node hosting `function`, if any.
  std::optional<NodeId> host_of(std::string_view function) const;

  /// Position of the node id in lexicographic order of id strings. Used for
  /// every deterministic tie-break so results do not depend on file order.
  std::uint32_t rank(NodeId v) const { return rank_[v]; }

  /// Edge length, or nullopt when u and v are not adjacent.
  std::optional<double> edge_length(NodeId u, NodeId v) const;

  /// N[v] as a bitset; precomputed.
  const NodeSet& closed_neighbors(NodeId v) const { return closed_.at(v); }

  void check_node(NodeId v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  friend class GraphBuilder;

  std::vector<NodeInfo> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<NodeSet> closed_;
  std::vector<std::uint32_t> rank_;
  std::unordered_map<std::string, NodeId> by_id_;
  std::unordered_map<std::string, NodeId> by_function_;
};

// Validating builder. Every invariant violation throws InputError.
class GraphBuilder {
 public:
  NodeId add_node(std::string id, std::optional<std::string> function = {},
                  std::optional<double> x = {}, std::optional<double> y = {});
  void add_edge(std::string_view u, std::string_view v, double length);
  void add_edge(NodeId u, NodeId v, double length);

  Graph build() &&;

 private:
  Graph g_;
};

struct Path {
  std::vector<NodeId> nodes;
  double length = 0.0;

  std::vector<Edge> edges(const Graph& g) const;
  NodeSet vertex_set(std::size_t universe) const;

  friend bool operator==(const Path&, const Path&) = default;
};

/// Builds a Path from a node sequence, checking adjacency and simplicity.
Path make_path(const Graph& g, std::vector<NodeId> nodes);

/// Lexicographic comparison of node sequences by id rank.
bool lex_less(const Graph& g, std::span<const NodeId> a, std::span<const NodeId> b);

// ---- I/O -------------------------------------------------------------------

/// Parses the JSON graph format. Errors carry the offending element, e.g.
/// "edges[3]: parallel edge a-b".
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);
std::string save_graph(const Graph& g);

// ---- queries ---------------------------------------------------------------

/// Open neighborhood N(v).
NodeSet neighbors(const Graph& g, NodeId v);

/// Single-source distances; kInfinity for unreachable nodes.
std::vector<double> dijkstra(const Graph& g, NodeId source);

double shortest_distance(const Graph& g, NodeId s, NodeId t);

// ---- generation ------------------------------------------------------------

struct UnitDiskParams {
  std::size_t nodes = 0;
  double radius = 0.0;
  std::size_t functions = 0;
  std::uint64_t seed = 0;
};

/// Uniform points in the unit square, edges between points within `radius`
/// (length = Euclidean distance), functions F1..Fk on distinct random nodes.
/// Node ids are "v0".."v{n-1}".
Graph generate_unit_disk(const UnitDiskParams& params);

}  // namespace mist
