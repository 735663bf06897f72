#include "mist/steiner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "mist/disjoint_set.hpp"
#include "mist/error.hpp"
#include "mist/interference.hpp"
#include "mist/parallel.hpp"

namespace mist {

MulticastRequest make_request(const Graph& g, std::string_view root,
                              std::vector<std::string> functions) {
  MulticastRequest req;
  req.root = g.index_of(root);
  if (functions.empty()) throw InputError("multicast request needs at least one function");
  std::set<std::string> seen;
  for (const std::string& f : functions) {
    if (!seen.insert(f).second) throw InputError("function '" + f + "' requested twice");
    if (!g.host_of(f)) throw InputError("missing function label '" + f + "'");
  }
  req.functions = std::move(functions);
  return req;
}

NodeSet terminals_of(const Graph& g, const MulticastRequest& req) {
  g.check_node(req.root);
  NodeSet s(g.node_count(), {req.root});
  for (const std::string& f : req.functions) {
    auto host = g.host_of(f);
    if (!host) throw InputError("missing function label '" + f + "'");
    s.insert(*host);
  }
  return s;
}

namespace {

std::vector<NodeId> by_rank(const Graph& g, const NodeSet& s) {
  std::vector<NodeId> out = s.members();
  std::sort(out.begin(), out.end(), [&](NodeId a, NodeId b) { return g.rank(a) < g.rank(b); });
  return out;
}

Edge oriented(const Graph& g, Edge e) {
  if (g.rank(e.u) > g.rank(e.v)) std::swap(e.u, e.v);
  return e;
}

bool edge_order(const Graph& g, const Edge& a, const Edge& b) {
  if (g.rank(a.u) != g.rank(b.u)) return g.rank(a.u) < g.rank(b.u);
  return g.rank(a.v) < g.rank(b.v);
}

std::string summarize_mode(const std::vector<ClosureEntry>& entries, SolverMode fallback) {
  if (entries.empty()) return fallback == SolverMode::kGreedy ? "greedy" : "exact";
  bool exact = false, greedy = false;
  for (const auto& e : entries) {
    (e.mode == SolverMode::kGreedy ? greedy : exact) = true;
  }
  if (exact && greedy) return "mixed";
  return greedy ? "greedy" : "exact";
}

void ensure_valid(const Graph& g, const SteinerTreeResult& tree, const NodeSet& terminals) {
  auto problems = check_tree(g, tree, terminals);
  if (!problems.empty()) {
    throw Error(ErrorKind::kInternal, tree.algorithm + " produced an invalid tree: " +
                                          problems.front());
  }
}

}  // namespace

MetricClosure metric_closure(const Graph& g, const NodeSet& terminals,
                             const PathSolverConfig& cfg, WitnessPolicy policy,
                             std::size_t threads) {
  MetricClosure mc;
  mc.terminals = by_rank(g, terminals);
  const std::size_t k = mc.terminals.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      ClosureEntry e;
      e.a = mc.terminals[i];
      e.b = mc.terminals[j];
      mc.entries.push_back(std::move(e));
    }
  }
  parallel_for(mc.entries.size(), threads, [&](std::size_t idx) {
    ClosureEntry& e = mc.entries[idx];
    try {
      if (policy == WitnessPolicy::kMinInterference) {
        InterferencePath p = min_interference_shortest_path(g, e.a, e.b, cfg);
        e.witness = std::move(p.path);
        e.interference = p.interference;
        e.mode = p.mode;
      } else {
        e.witness = lex_shortest_path(g, e.a, e.b, cfg.tie_epsilon);
        e.interference = interference(g, e.witness.vertex_set(g.node_count()));
        e.mode = SolverMode::kExact;
      }
      e.length = e.witness.length;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::kInfeasible) throw;
      throw InfeasibleError("terminals '" + g.name(e.a) + "' and '" + g.name(e.b) +
                            "' are not connected");
    }
  });
  return mc;
}

std::vector<std::size_t> minimum_spanning_tree(const Graph& g, const MetricClosure& mc,
                                               double tie_epsilon) {
  const std::size_t k = mc.terminals.size();
  if (k <= 1) return {};
  std::map<NodeId, std::size_t> slot;
  for (std::size_t i = 0; i < k; ++i) slot[mc.terminals[i]] = i;

  auto better = [&](const ClosureEntry& x, const ClosureEntry& y) {
    if (std::abs(x.length - y.length) > tie_epsilon) return x.length < y.length;
    if (x.interference != y.interference) return x.interference < y.interference;
    if (g.rank(x.a) != g.rank(y.a)) return g.rank(x.a) < g.rank(y.a);
    return g.rank(x.b) < g.rank(y.b);
  };

  // Kruskal with a linear scan per step: the closure is small and the
  // tolerant length comparison is not a strict weak order, so no sort.
  DisjointSet dsu(k);
  std::vector<bool> used(mc.entries.size(), false);
  std::vector<std::size_t> chosen;
  while (chosen.size() + 1 < k) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < mc.entries.size(); ++i) {
      const ClosureEntry& e = mc.entries[i];
      if (used[i] || dsu.find(slot[e.a]) == dsu.find(slot[e.b])) continue;
      if (!best || better(e, mc.entries[*best])) best = i;
    }
    if (!best) throw InfeasibleError("metric closure is not connected");
    used[*best] = true;
    dsu.unite(slot[mc.entries[*best].a], slot[mc.entries[*best].b]);
    chosen.push_back(*best);
  }
  return chosen;
}

SteinerTreeResult make_tree(const Graph& g, NodeId root, std::vector<Edge> edges,
                            std::string algorithm) {
  SteinerTreeResult t;
  t.algorithm = std::move(algorithm);
  t.root = root;
  t.vertices = NodeSet(g.node_count(), {root});
  for (Edge& e : edges) {
    e = oriented(g, e);
    t.vertices.insert(e.u);
    t.vertices.insert(e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [&](const Edge& a, const Edge& b) { return edge_order(g, a, b); });
  for (const Edge& e : edges) t.total_length += e.length;
  t.edges = std::move(edges);
  t.interference = interference(g, t.vertices);
  return t;
}

std::vector<std::string> check_tree(const Graph& g, const SteinerTreeResult& tree,
                                    const NodeSet& terminals, bool require_pruned) {
  std::vector<std::string> problems;
  const std::size_t n = g.node_count();
  if (tree.vertices.universe() != n) return {"vertex set universe mismatch"};
  const std::size_t vcount = tree.vertices.count();
  if (tree.edges.size() + 1 != vcount) {
    problems.push_back(std::to_string(tree.edges.size()) + " edges for " +
                       std::to_string(vcount) + " vertices");
  }
  DisjointSet dsu(n);
  std::vector<std::size_t> degree(n, 0);
  double sum = 0.0;
  for (const Edge& e : tree.edges) {
    auto len = g.edge_length(e.u, e.v);
    if (!len || *len != e.length) {
      problems.push_back("edge " + g.name(e.u) + "-" + g.name(e.v) + " not in graph");
      continue;
    }
    if (!tree.vertices.contains(e.u) || !tree.vertices.contains(e.v)) {
      problems.push_back("edge endpoint outside vertex set");
    }
    if (!dsu.unite(e.u, e.v)) problems.push_back("cycle through " + g.name(e.u));
    ++degree[e.u];
    ++degree[e.v];
    sum += e.length;
  }
  tree.vertices.for_each([&](NodeId v) {
    if (dsu.find(v) != dsu.find(tree.root)) problems.push_back(g.name(v) + " disconnected");
    if (require_pruned && v != tree.root && degree[v] <= 1 && !terminals.contains(v)) {
      problems.push_back("non-terminal leaf " + g.name(v));
    }
  });
  if (!tree.vertices.contains(tree.root)) problems.push_back("root missing");
  if (!terminals.is_subset_of(tree.vertices)) problems.push_back("terminal not spanned");
  if (std::abs(sum - tree.total_length) > 1e-9 * std::max(1.0, sum)) {
    problems.push_back("total_length mismatch");
  }
  if (interference(g, tree.vertices) != tree.interference) {
    problems.push_back("interference mismatch");
  }
  return problems;
}

SteinerTreeResult prune_non_terminal_leaves(const Graph& g, const SteinerTreeResult& tree,
                                            const NodeSet& terminals) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<std::size_t>> incident(n);
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    incident[tree.edges[i].u].push_back(i);
    incident[tree.edges[i].v].push_back(i);
    ++degree[tree.edges[i].u];
    ++degree[tree.edges[i].v];
  }
  auto removable = [&](NodeId v) {
    return v != tree.root && !terminals.contains(v) && degree[v] == 1;
  };
  std::vector<bool> removed(tree.edges.size(), false);
  std::vector<NodeId> stack;
  tree.vertices.for_each([&](NodeId v) {
    if (removable(v)) stack.push_back(v);
  });
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (!removable(v)) continue;
    for (std::size_t i : incident[v]) {
      if (removed[i]) continue;
      removed[i] = true;
      const NodeId other = tree.edges[i].u == v ? tree.edges[i].v : tree.edges[i].u;
      --degree[v];
      --degree[other];
      if (removable(other)) stack.push_back(other);
    }
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    if (!removed[i]) kept.push_back(tree.edges[i]);
  }
  SteinerTreeResult out = make_tree(g, tree.root, std::move(kept), tree.algorithm);
  out.witnesses = tree.witnesses;
  out.mode = tree.mode;
  return out;
}

SteinerTreeResult kmb_expand(const Graph& g, const MetricClosure& mc,
                             const std::vector<std::size_t>& mst_edges,
                             const NodeSet& terminals, NodeId root) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, Edge> pool;
  for (std::size_t idx : mst_edges) {
    for (const Edge& e : mc.entries.at(idx).witness.edges(g)) {
      const Edge o = oriented(g, e);
      pool.emplace(std::pair{g.rank(o.u), g.rank(o.v)}, o);
    }
  }
  std::vector<Edge> candidates;
  for (const auto& [key, e] : pool) candidates.push_back(e);
  // std::map iteration already yields rank order; stable_sort keeps it for ties.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Edge& a, const Edge& b) { return a.length < b.length; });
  DisjointSet dsu(g.node_count());
  std::vector<Edge> tree_edges;
  for (const Edge& e : candidates) {
    if (dsu.unite(e.u, e.v)) tree_edges.push_back(e);
  }
  SteinerTreeResult tree = make_tree(g, root, std::move(tree_edges), "KMB");
  return prune_non_terminal_leaves(g, tree, terminals);
}

SteinerTreeResult tssr(const Graph& g, const MulticastRequest& req, const SolveOptions& opts) {
  const NodeSet terminals = terminals_of(g, req);
  MetricClosure mc = metric_closure(g, terminals, opts.path,
                                    WitnessPolicy::kMinInterference, opts.threads);
  const std::vector<std::size_t> mst = minimum_spanning_tree(g, mc, opts.path.tie_epsilon);
  for (std::size_t idx : mst) mc.entries[idx].selected = true;
  SteinerTreeResult result = kmb_expand(g, mc, mst, terminals, req.root);
  result.algorithm = "TSSR";
  result.mode = summarize_mode(mc.entries, opts.path.mode);
  result.witnesses = std::move(mc.entries);
  ensure_valid(g, result, terminals);
  return result;
}

SteinerTreeResult st_baseline(const Graph& g, const MulticastRequest& req,
                              const SolveOptions& opts) {
  const NodeSet terminals = terminals_of(g, req);
  MetricClosure mc =
      metric_closure(g, terminals, opts.path, WitnessPolicy::kLexShortest, opts.threads);
  const std::vector<std::size_t> mst = minimum_spanning_tree(g, mc, opts.path.tie_epsilon);
  for (std::size_t idx : mst) mc.entries[idx].selected = true;
  SteinerTreeResult result = kmb_expand(g, mc, mst, terminals, req.root);
  result.algorithm = "ST";
  result.mode = "plain";
  result.witnesses = std::move(mc.entries);
  ensure_valid(g, result, terminals);
  return result;
}

SteinerTreeResult spt_baseline(const Graph& g, const MulticastRequest& req,
                               double tie_epsilon) {
  const NodeSet terminals = terminals_of(g, req);
  const std::vector<double> dist = dijkstra(g, req.root);
  terminals.for_each([&](NodeId t) {
    if (!std::isfinite(dist[t])) {
      throw InfeasibleError("terminal '" + g.name(t) + "' unreachable from root '" +
                            g.name(req.root) + "'");
    }
  });

  std::vector<NodeId> order;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (std::isfinite(dist[v])) order.push_back(v);
  }
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (dist[a] != dist[b]) return dist[a] < dist[b];
    return g.rank(a) < g.rank(b);
  });

  // Lexicographically smallest shortest path to every node. These are
  // prefix-closed, so the parent links form one tree.
  std::vector<std::vector<NodeId>> best(g.node_count());
  std::vector<std::optional<NodeId>> parent(g.node_count());
  best[req.root] = {req.root};
  for (NodeId v : order) {
    if (v == req.root) continue;
    for (const Neighbor& nb : g.adjacency(v)) {
      const NodeId u = nb.node;
      if (best[u].empty() || std::abs(dist[u] + nb.length - dist[v]) > tie_epsilon) continue;
      if (std::find(best[u].begin(), best[u].end(), v) != best[u].end()) continue;
      std::vector<NodeId> cand = best[u];
      cand.push_back(v);
      if (best[v].empty() || lex_less(g, cand, best[v])) {
        best[v] = std::move(cand);
        parent[v] = u;
      }
    }
  }

  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<Edge> edges;
  terminals.for_each([&](NodeId t) {
    for (NodeId v = t; parent[v]; v = *parent[v]) {
      const NodeId u = *parent[v];
      if (!seen.emplace(std::min(u, v), std::max(u, v)).second) break;
      edges.push_back(Edge{u, v, *g.edge_length(u, v)});
    }
  });
  SteinerTreeResult tree = make_tree(g, req.root, std::move(edges), "SPT");
  tree.mode = "plain";
  SteinerTreeResult result = prune_non_terminal_leaves(g, tree, terminals);
  ensure_valid(g, result, terminals);
  return result;
}

}  // namespace mist
