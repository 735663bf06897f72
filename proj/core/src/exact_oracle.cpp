#include "mist/exact_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "mist/disjoint_set.hpp"
#include "mist/error.hpp"
#include "mist/interference.hpp"

namespace mist {

std::vector<std::vector<double>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kInfinity));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
  for (const Edge& e : g.edges()) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.length);
    d[e.v][e.u] = std::min(d[e.v][e.u], e.length);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

ShortestPathOptimum exhaustive_min_interference_sp(const Graph& g, NodeId s, NodeId t,
                                                   double tie_epsilon) {
  g.check_node(s);
  g.check_node(t);
  const double target = floyd_warshall(g)[s][t];
  if (!std::isfinite(target)) {
    throw InfeasibleError("no path between '" + g.name(s) + "' and '" + g.name(t) + "'");
  }
  ShortestPathOptimum best{target, g.node_count() + 1, 0};
  NodeSet on_path(g.node_count());

  // Plain DFS over simple paths, cut once the partial length overshoots.
  auto dfs = [&](auto&& self, NodeId u, double length) -> void {
    on_path.insert(u);
    if (u == t) {
      if (std::abs(length - target) <= tie_epsilon) {
        ++best.paths;
        best.interference = std::min(best.interference, interference(g, on_path));
      }
    } else {
      for (const Neighbor& nb : g.adjacency(u)) {
        if (on_path.contains(nb.node)) continue;
        const double next = length + nb.length;
        if (next > target + tie_epsilon) continue;
        self(self, nb.node, next);
      }
    }
    on_path.erase(u);
  };
  dfs(dfs, s, 0.0);
  return best;
}

namespace {

struct Candidate {
  double length;
  std::size_t interference;
  std::size_t size;
  std::uint64_t mask;
  std::vector<Edge> edges;
};

// Kruskal on G[W]; returns nullopt when G[W] is disconnected.
std::optional<std::pair<double, std::vector<Edge>>> induced_mst(const Graph& g,
                                                                std::uint64_t mask,
                                                                std::vector<Edge>& scratch) {
  scratch.clear();
  for (const Edge& e : g.edges()) {
    if ((mask >> e.u & 1u) && (mask >> e.v & 1u)) scratch.push_back(e);
  }
  std::stable_sort(scratch.begin(), scratch.end(),
                   [](const Edge& a, const Edge& b) { return a.length < b.length; });
  DisjointSet dsu(g.node_count());
  std::vector<Edge> tree;
  double total = 0.0;
  for (const Edge& e : scratch) {
    if (dsu.unite(e.u, e.v)) {
      tree.push_back(e);
      total += e.length;
    }
  }
  const auto size = static_cast<std::size_t>(std::popcount(mask));
  if (tree.size() + 1 != size) return std::nullopt;
  return std::pair{total, std::move(tree)};
}

}  // namespace

std::vector<ParetoPoint> enumerate_pareto_front(const Graph& g, const MulticastRequest& req,
                                                std::size_t node_cap, double tie_epsilon) {
  const std::size_t n = g.node_count();
  if (n > node_cap || n > 62) {
    throw InputError("exact oracle limited to " + std::to_string(std::min<std::size_t>(node_cap, 62)) +
                     " nodes, graph has " + std::to_string(n));
  }
  const NodeSet terminals = terminals_of(g, req);
  std::uint64_t required = 0;
  terminals.for_each([&](NodeId v) { required |= std::uint64_t{1} << v; });
  const std::uint64_t free_bits = ((std::uint64_t{1} << n) - 1) & ~required;

  std::vector<Candidate> cands;
  std::vector<Edge> scratch;
  // Enumerate every subset of the free bits (Gosper-free submask walk).
  std::uint64_t sub = free_bits;
  while (true) {
    const std::uint64_t mask = required | sub;
    if (auto mst = induced_mst(g, mask, scratch)) {
      NodeSet w(n);
      for (NodeId v = 0; v < n; ++v) {
        if (mask >> v & 1u) w.insert(v);
      }
      cands.push_back(Candidate{mst->first, interference(g, w),
                                static_cast<std::size_t>(std::popcount(mask)), mask,
                                std::move(mst->second)});
    }
    if (sub == 0) break;
    sub = (sub - 1) & free_bits;
  }
  if (cands.empty()) throw InfeasibleError("terminal set is disconnected");

  // Sort by (interference, length, size, mask) and sweep: a candidate is on
  // the front iff its length is strictly below every earlier candidate's.
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.interference != b.interference) return a.interference < b.interference;
    if (a.length != b.length) return a.length < b.length;
    if (a.size != b.size) return a.size < b.size;
    return a.mask < b.mask;
  });
  std::vector<ParetoPoint> front;
  double best_length = kInfinity;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const Candidate& c = cands[i];
    if (c.length >= best_length - tie_epsilon) continue;
    // Within one interference value the shortest comes first, but lengths
    // equal within epsilon should prefer the smaller witness.
    std::size_t pick = i;
    for (std::size_t j = i + 1; j < cands.size() && cands[j].interference == c.interference;
         ++j) {
      if (std::abs(cands[j].length - c.length) > tie_epsilon) break;
      const Candidate& o = cands[j];
      const Candidate& p = cands[pick];
      if (o.size < p.size || (o.size == p.size && o.mask < p.mask)) pick = j;
    }
    const Candidate& chosen = cands[pick];
    best_length = c.length;
    ParetoPoint pt;
    pt.length = chosen.length;
    pt.interference = chosen.interference;
    pt.witness_vertices = NodeSet(n);
    for (NodeId v = 0; v < n; ++v) {
      if (chosen.mask >> v & 1u) pt.witness_vertices.insert(v);
    }
    pt.witness_edges = chosen.edges;
    front.push_back(std::move(pt));
  }
  std::reverse(front.begin(), front.end());
  return front;
}

FrontComparison verify_tree_against_front(const std::vector<ParetoPoint>& front,
                                          const SteinerTreeResult& result,
                                          double tie_epsilon) {
  if (front.empty()) throw InputError("empty Pareto front");
  double min_length = kInfinity;
  std::size_t min_interference = front.front().interference;
  for (const ParetoPoint& p : front) {
    min_length = std::min(min_length, p.length);
    min_interference = std::min(min_interference, p.interference);
  }
  FrontComparison cmp;
  if (min_length <= 0.0) {
    cmp.length_ratio = result.total_length <= tie_epsilon ? 1.0 : kInfinity;
  } else {
    cmp.length_ratio = result.total_length / min_length;
  }
  cmp.interference_ratio =
      static_cast<double>(result.interference) / static_cast<double>(min_interference);
  cmp.length_bound_violated = result.total_length > 2.0 * min_length + tie_epsilon;
  return cmp;
}

SteinerTreeResult front_min_length_tree(const Graph& g, const MulticastRequest& req,
                                        const std::vector<ParetoPoint>& front) {
  if (front.empty()) throw InputError("empty Pareto front");
  SteinerTreeResult t = make_tree(g, req.root, front.front().witness_edges, "EXACT");
  t.mode = "enumeration";
  return t;
}

}  // namespace mist
