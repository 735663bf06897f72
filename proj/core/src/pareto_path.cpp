#include "mist/pareto_path.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "mist/interference.hpp"

namespace mist {

const char* to_string(SolverMode m) {
  switch (m) {
    case SolverMode::kExact: return "exact";
    case SolverMode::kGreedy: return "greedy";
    case SolverMode::kAuto: return "auto";
  }
  return "?";
}

SolverMode parse_solver_mode(const std::string& text) {
  if (text == "exact") return SolverMode::kExact;
  if (text == "greedy") return SolverMode::kGreedy;
  if (text == "auto") return SolverMode::kAuto;
  throw InputError("unknown solver mode '" + text + "' (expected exact|greedy|auto)");
}

std::size_t ShortestDag::edge_count() const {
  std::size_t c = 0;
  for (const auto& s : successors) c += s.size();
  return c;
}

bool ShortestDag::contains(NodeId u, NodeId v) const {
  const auto& s = successors.at(u);
  return std::find(s.begin(), s.end(), v) != s.end();
}

ShortestDag shortest_dag(const Graph& g, NodeId s, NodeId t, double tie_epsilon) {
  g.check_node(s);
  g.check_node(t);
  const std::vector<double> from_s = dijkstra(g, s);
  if (!std::isfinite(from_s[t])) {
    throw InfeasibleError("no path between '" + g.name(s) + "' and '" + g.name(t) + "'");
  }
  const std::vector<double> to_t = dijkstra(g, t);

  ShortestDag dag;
  dag.source = s;
  dag.target = t;
  dag.distance = from_s[t];
  dag.successors.resize(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (!std::isfinite(from_s[u])) continue;
    for (const Neighbor& nb : g.adjacency(u)) {
      if (std::abs(from_s[u] + nb.length + to_t[nb.node] - dag.distance) <= tie_epsilon) {
        dag.successors[u].push_back(nb.node);
      }
    }
    std::sort(dag.successors[u].begin(), dag.successors[u].end(),
              [&](NodeId a, NodeId b) { return g.rank(a) < g.rank(b); });
  }
  return dag;
}

namespace {

struct Label {
  NodeId at = 0;
  NodeSet reached;   // N[path vertices]
  NodeSet on_path;
  std::vector<NodeId> path;
  std::size_t count = 0;
};

InterferencePath trivial_path(const Graph& g, NodeId s, SolverMode mode) {
  NodeSet w(g.node_count(), {s});
  return InterferencePath{Path{{s}, 0.0}, interference(g, w), mode, 1};
}

Label root_label(const Graph& g, NodeId s) {
  Label root;
  root.at = s;
  root.on_path = NodeSet(g.node_count(), {s});
  root.reached = closed_neighborhood(g, root.on_path);
  root.path = {s};
  root.count = root.reached.count();
  return root;
}

Label extend(const Graph& g, const Label& parent, NodeId v) {
  Label child;
  child.at = v;
  child.on_path = parent.on_path;
  child.on_path.insert(v);
  // Value-oracle query on the extended vertex set.
  child.reached = closed_neighborhood(g, child.on_path);
  child.path = parent.path;
  child.path.push_back(v);
  child.count = child.reached.count();
  return child;
}

InterferencePath label_setting(const Graph& g, NodeId s, NodeId t,
                               const PathSolverConfig& cfg, bool prune) {
  if (cfg.label_cap == 0) throw InputError("label_cap must be >= 1");
  g.check_node(s);
  g.check_node(t);
  if (s == t) return trivial_path(g, s, SolverMode::kExact);
  const ShortestDag dag = shortest_dag(g, s, t, cfg.tie_epsilon);

  std::vector<Label> labels;
  labels.push_back(root_label(g, s));

  // Priority (count, id sequence) never decreases along an extension, so the
  // first label popped at t is optimal including the tie-break.
  auto worse = [&](std::size_t a, std::size_t b) {
    const Label& la = labels[a];
    const Label& lb = labels[b];
    if (la.count != lb.count) return la.count > lb.count;
    return lex_less(g, lb.path, la.path);
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> open(worse);
  open.push(0);

  std::vector<std::vector<std::size_t>> settled(g.node_count());
  // A settled label (v, S1) prunes (v, S2) when S1 ⊆ S2 and its sequence is
  // no larger: every completion of the second is matched by the first.
  auto dominated = [&](const Label& cand) {
    if (!prune) return false;
    for (std::size_t idx : settled[cand.at]) {
      const Label& kept = labels[idx];
      if (kept.reached.is_subset_of(cand.reached) &&
          (kept.count == cand.count || !lex_less(g, cand.path, kept.path))) {
        return true;
      }
    }
    return false;
  };

  while (!open.empty()) {
    const std::size_t idx = open.top();
    open.pop();
    if (dominated(labels[idx])) continue;
    if (labels[idx].at == t) {
      const Label& best = labels[idx];
      return InterferencePath{make_path(g, best.path), best.count, SolverMode::kExact,
                              labels.size()};
    }
    settled[labels[idx].at].push_back(idx);
    for (NodeId v : dag.successors[labels[idx].at]) {
      if (labels[idx].on_path.contains(v)) continue;
      Label child = extend(g, labels[idx], v);
      if (dominated(child)) continue;
      if (labels.size() >= cfg.label_cap) {
        const Label& head = labels[open.empty() ? idx : open.top()];
        throw BudgetExceeded("exact budget exceeded: " + std::to_string(cfg.label_cap) +
                                 " labels for " + g.name(s) + "-" + g.name(t),
                             make_path(g, head.path), head.count);
      }
      labels.push_back(std::move(child));
      open.push(labels.size() - 1);
    }
  }
  throw Error(ErrorKind::kInternal,
              "shortest-path DAG search exhausted without reaching target");
}

}  // namespace

InterferencePath greedy_interference_path(const Graph& g, NodeId s, NodeId t,
                                          double tie_epsilon) {
  g.check_node(s);
  g.check_node(t);
  if (s == t) return trivial_path(g, s, SolverMode::kGreedy);
  const ShortestDag dag = shortest_dag(g, s, t, tie_epsilon);

  std::vector<Label> labels;
  labels.push_back(root_label(g, s));
  auto worse = [&](std::size_t a, std::size_t b) {
    const Label& la = labels[a];
    const Label& lb = labels[b];
    if (la.count != lb.count) return la.count > lb.count;
    return g.rank(la.at) > g.rank(lb.at);
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> open(worse);
  open.push(0);
  NodeSet done(g.node_count());

  while (!open.empty()) {
    const std::size_t idx = open.top();
    open.pop();
    if (done.contains(labels[idx].at)) continue;
    done.insert(labels[idx].at);
    if (labels[idx].at == t) {
      const Label& best = labels[idx];
      return InterferencePath{make_path(g, best.path), best.count, SolverMode::kGreedy,
                              labels.size()};
    }
    for (NodeId v : dag.successors[labels[idx].at]) {
      if (done.contains(v) || labels[idx].on_path.contains(v)) continue;
      labels.push_back(extend(g, labels[idx], v));
      open.push(labels.size() - 1);
    }
  }
  throw Error(ErrorKind::kInternal, "greedy search exhausted without reaching target");
}

InterferencePath min_interference_shortest_path(const Graph& g, NodeId s, NodeId t,
                                                const PathSolverConfig& cfg) {
  switch (cfg.mode) {
    case SolverMode::kExact:
      return label_setting(g, s, t, cfg, /*prune=*/true);
    case SolverMode::kGreedy:
      return greedy_interference_path(g, s, t, cfg.tie_epsilon);
    case SolverMode::kAuto:
      try {
        return label_setting(g, s, t, cfg, /*prune=*/true);
      } catch (const BudgetExceeded&) {
        return greedy_interference_path(g, s, t, cfg.tie_epsilon);
      }
  }
  throw InputError("invalid solver mode");
}

InterferencePath min_interference_shortest_path_unpruned(const Graph& g, NodeId s, NodeId t,
                                                         const PathSolverConfig& cfg) {
  return label_setting(g, s, t, cfg, /*prune=*/false);
}

Path lex_shortest_path(const Graph& g, NodeId s, NodeId t, double tie_epsilon) {
  g.check_node(s);
  g.check_node(t);
  if (s == t) return Path{{s}, 0.0};
  const ShortestDag dag = shortest_dag(g, s, t, tie_epsilon);

  // Depth-first in rank order; the first complete path is the smallest. With
  // positive lengths this never backtracks.
  std::vector<NodeId> path{s};
  NodeSet on_path(g.node_count(), {s});
  std::vector<std::size_t> next{0};
  while (!path.empty()) {
    const NodeId u = path.back();
    if (u == t) return make_path(g, path);
    const auto& succ = dag.successors[u];
    std::size_t& i = next.back();
    while (i < succ.size() && on_path.contains(succ[i])) ++i;
    if (i == succ.size()) {
      on_path.erase(u);
      path.pop_back();
      next.pop_back();
      continue;
    }
    const NodeId v = succ[i++];
    path.push_back(v);
    on_path.insert(v);
    next.push_back(0);
  }
  throw Error(ErrorKind::kInternal, "no simple shortest path found");
}

}  // namespace mist
