#include "mist/graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <queue>

#include "mist/error.hpp"

namespace mist {

NodeId Graph::index_of(std::string_view id) const {
  if (auto v = find(id)) return *v;
  throw InputError("unknown node id '" + std::string(id) + "'");
}

std::optional<NodeId> Graph::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<NodeId> Graph::host_of(std::string_view function) const {
  auto it = by_function_.find(std::string(function));
  if (it == by_function_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> Graph::edge_length(NodeId u, NodeId v) const {
  for (const Neighbor& nb : adjacency_.at(u)) {
    if (nb.node == v) return nb.length;
  }
  return std::nullopt;
}

void Graph::check_node(NodeId v) const {
  if (v >= nodes_.size()) {
    throw InputError("unknown node index " + std::to_string(v));
  }
}

NodeId GraphBuilder::add_node(std::string id, std::optional<std::string> function,
                              std::optional<double> x, std::optional<double> y) {
  if (id.empty()) throw InputError("empty node id");
  if (g_.by_id_.contains(id)) throw InputError("duplicate node id '" + id + "'");
  const auto v = static_cast<NodeId>(g_.nodes_.size());
  if (function) {
    if (function->empty()) throw InputError("node '" + id + "': empty function label");
    auto [it, inserted] = g_.by_function_.emplace(*function, v);
    if (!inserted) {
      throw InputError("duplicate function '" + *function + "' on nodes '" +
                       g_.nodes_[it->second].id + "' and '" + id + "'");
    }
  }
  g_.by_id_.emplace(id, v);
  g_.nodes_.push_back(NodeInfo{std::move(id), std::move(function), x, y});
  g_.adjacency_.emplace_back();
  return v;
}

void GraphBuilder::add_edge(std::string_view u, std::string_view v, double length) {
  add_edge(g_.index_of(u), g_.index_of(v), length);
}

void GraphBuilder::add_edge(NodeId u, NodeId v, double length) {
  g_.check_node(u);
  g_.check_node(v);
  const std::string label = g_.nodes_[u].id + "-" + g_.nodes_[v].id;
  if (u == v) throw InputError("self-loop " + label);
  if (!std::isfinite(length)) throw InputError("non-finite length on " + label);
  if (length < 0.0) throw InputError("negative length on " + label);
  if (g_.edge_length(u, v)) throw InputError("parallel edge " + label);
  g_.edges_.push_back(Edge{u, v, length});
  g_.adjacency_[u].push_back(Neighbor{v, length});
  g_.adjacency_[v].push_back(Neighbor{u, length});
}

Graph GraphBuilder::build() && {
  const std::size_t n = g_.nodes_.size();
  g_.closed_.assign(n, NodeSet(n));
  for (NodeId v = 0; v < n; ++v) {
    g_.closed_[v].insert(v);
    for (const Neighbor& nb : g_.adjacency_[v]) g_.closed_[v].insert(nb.node);
  }
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return g_.nodes_[a].id < g_.nodes_[b].id;
  });
  g_.rank_.assign(n, 0);
  for (std::uint32_t r = 0; r < n; ++r) g_.rank_[order[r]] = r;
  return std::move(g_);
}

std::vector<Edge> Path::edges(const Graph& g) const {
  std::vector<Edge> out;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    out.push_back(Edge{nodes[i - 1], nodes[i], *g.edge_length(nodes[i - 1], nodes[i])});
  }
  return out;
}

NodeSet Path::vertex_set(std::size_t universe) const {
  NodeSet s(universe);
  for (NodeId v : nodes) s.insert(v);
  return s;
}

Path make_path(const Graph& g, std::vector<NodeId> nodes) {
  if (nodes.empty()) throw InputError("empty path");
  NodeSet seen(g.node_count());
  Path p;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    g.check_node(nodes[i]);
    if (seen.contains(nodes[i])) {
      throw InputError("path repeats node '" + g.name(nodes[i]) + "'");
    }
    seen.insert(nodes[i]);
    if (i > 0) {
      auto len = g.edge_length(nodes[i - 1], nodes[i]);
      if (!len) {
        throw InputError("path step " + g.name(nodes[i - 1]) + "-" + g.name(nodes[i]) +
                         " is not an edge");
      }
      p.length += *len;
    }
  }
  p.nodes = std::move(nodes);
  return p;
}

bool lex_less(const Graph& g, std::span<const NodeId> a, std::span<const NodeId> b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [&](NodeId x, NodeId y) { return g.rank(x) < g.rank(y); });
}

NodeSet neighbors(const Graph& g, NodeId v) {
  g.check_node(v);
  NodeSet s = g.closed_neighbors(v);
  s.erase(v);
  return s;
}

std::vector<double> dijkstra(const Graph& g, NodeId source) {
  g.check_node(source);
  std::vector<double> dist(g.node_count(), kInfinity);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    for (const Neighbor& nb : g.adjacency(u)) {
      const double nd = d + nb.length;
      if (nd < dist[nb.node]) {
        dist[nb.node] = nd;
        queue.emplace(nd, nb.node);
      }
    }
  }
  return dist;
}

double shortest_distance(const Graph& g, NodeId s, NodeId t) {
  g.check_node(t);
  if (s == t) {
    g.check_node(s);
    return 0.0;
  }
  return dijkstra(g, s)[t];
}

}  // namespace mist
