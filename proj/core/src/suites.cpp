#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

#include "mist/error.hpp"
#include "mist/exact_oracle.hpp"
#include "mist/experiment.hpp"

namespace mist {

Suite parse_suite(const std::string& text) {
  if (text == "lemma1") return Suite::kLemma1;
  if (text == "prune") return Suite::kPrune;
  if (text == "prop1") return Suite::kProp1;
  if (text == "all") return Suite::kAll;
  throw InputError("unknown suite '" + text + "' (expected lemma1|prune|prop1|all)");
}

bool SuiteReport::passed() const {
  for (const PropertyReport& r : reports) {
    if (!r.passed()) return false;
  }
  return true;
}

namespace {

bool connected(const Graph& g) {
  if (g.node_count() == 0) return true;
  const auto d = dijkstra(g, 0);
  for (double x : d) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

std::vector<std::string> names_of(const Graph& g, const NodeSet& s) {
  std::vector<std::string> out;
  s.for_each([&](NodeId v) { out.push_back(g.name(v)); });
  return out;
}

// Same topology with every edge at length 1 (hop counts).
Graph with_hop_lengths(const Graph& g) {
  GraphBuilder b;
  for (const NodeInfo& n : g.nodes()) b.add_node(n.id, n.function, n.x, n.y);
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v, 1.0);
  return std::move(b).build();
}

}  // namespace

RandomTreeCase random_tree_case(std::uint64_t seed, std::size_t max_nodes) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_n(2, std::max<std::size_t>(2, max_nodes));
  const std::size_t n = pick_n(rng);
  std::uniform_real_distribution<double> length(0.1, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  GraphBuilder builder;
  for (std::size_t i = 0; i < n; ++i) builder.add_node("t" + std::to_string(i));
  std::vector<Edge> tree_edges;
  std::set<std::pair<NodeId, NodeId>> present;
  for (NodeId v = 1; v < n; ++v) {
    std::uniform_int_distribution<NodeId> pick_parent(0, v - 1);
    const NodeId p = pick_parent(rng);
    const double len = length(rng);
    builder.add_edge(p, v, len);
    tree_edges.push_back(Edge{p, v, len});
    present.emplace(p, v);
  }
  // A few chords so the graph has neighbors outside the tree.
  const std::size_t chords = n / 2;
  std::uniform_int_distribution<NodeId> pick_any(0, static_cast<NodeId>(n - 1));
  for (std::size_t i = 0; i < chords; ++i) {
    NodeId a = pick_any(rng), b = pick_any(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (!present.emplace(a, b).second) continue;
    builder.add_edge(a, b, length(rng));
  }
  RandomTreeCase c{std::move(builder).build(), {}, {}};
  const double p_terminal = unit(rng);
  c.terminals = NodeSet(n, {0});
  for (NodeId v = 1; v < n; ++v) {
    if (unit(rng) < p_terminal) c.terminals.insert(v);
  }
  c.tree = make_tree(c.graph, 0, std::move(tree_edges), "RANDOM");
  return c;
}

OracleCase random_oracle_case(std::uint64_t seed, std::size_t min_nodes,
                              std::size_t max_nodes) {
  std::mt19937_64 rng(seed);
  min_nodes = std::max<std::size_t>(min_nodes, 4);
  max_nodes = std::max(max_nodes, min_nodes);
  std::uniform_int_distribution<std::size_t> pick_n(min_nodes, max_nodes);
  std::uniform_real_distribution<double> pick_radius(0.35, 0.7);
  for (;;) {
    UnitDiskParams params{pick_n(rng), pick_radius(rng), 3, rng()};
    Graph g = generate_unit_disk(params);
    if (!connected(g)) continue;
    if (rng() & 1) g = with_hop_lengths(g);
    std::vector<NodeId> free;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (!g.node(v).function) free.push_back(v);
    }
    std::uniform_int_distribution<std::size_t> pick_root(0, free.size() - 1);
    const std::string root = g.name(free[pick_root(rng)]);
    std::uniform_int_distribution<std::size_t> pick_k(1, 3);
    std::vector<std::string> fs = {"F1", "F2", "F3"};
    std::shuffle(fs.begin(), fs.end(), rng);
    fs.resize(pick_k(rng));
    MulticastRequest req = make_request(g, root, fs);
    return OracleCase{std::move(g), std::move(req)};
  }
}

SuiteReport run_property_suites(const SuiteOptions& opts) {
  if (opts.trials == 0) throw InputError("trials must be >= 1");
  SuiteReport out;
  std::mt19937_64 rng(opts.seed);
  const bool all = opts.suite == Suite::kAll;

  if (all || opts.suite == Suite::kLemma1) {
    PropertyReport mono{"lemma1-monotone", 0, {}};
    PropertyReport sub{"lemma1-submodular", 0, {}};
    PropertyReport lattice{"lemma1-submodular-lattice", 0, {}};
    auto run_on = [&](const Graph& g, const std::string& label) {
      const std::uint64_t s = rng();
      for (PropertyReport* r : {&mono, &sub, &lattice}) {
        PropertyReport part = r == &mono  ? check_monotone(g, opts.trials, s)
                              : r == &sub ? check_submodular(g, opts.trials, s + 1)
                                          : check_submodular_lattice(g, opts.trials, s + 2);
        for (Counterexample& c : part.violations) c.instance = label;
        r->absorb(part);
      }
    };
    if (opts.graph) {
      run_on(*opts.graph, "input graph");
    } else {
      std::uniform_int_distribution<std::size_t> pick_n(2, std::max<std::size_t>(2, opts.max_nodes));
      std::uniform_real_distribution<double> pick_radius(0.1, 0.5);
      for (std::size_t i = 0; i < opts.graphs; ++i) {
        UnitDiskParams p{pick_n(rng), pick_radius(rng), 0, rng()};
        char label[96];
        std::snprintf(label, sizeof label, "unit-disk n=%zu r=%.3f seed=%llu", p.nodes,
                      p.radius, static_cast<unsigned long long>(p.seed));
        run_on(generate_unit_disk(p), label);
      }
    }
    out.reports.push_back(std::move(mono));
    out.reports.push_back(std::move(sub));
    out.reports.push_back(std::move(lattice));
  }

  if (all || opts.suite == Suite::kPrune) {
    PropertyReport prune{"prune-monotone", opts.trials, {}};
    for (std::size_t i = 0; i < opts.trials; ++i) {
      const std::uint64_t s = rng();
      RandomTreeCase c = random_tree_case(s);
      SteinerTreeResult pruned = prune_non_terminal_leaves(c.graph, c.tree, c.terminals);
      const bool longer = pruned.total_length > c.tree.total_length + 1e-9;
      const bool noisier = pruned.interference > c.tree.interference;
      const bool invalid = !check_tree(c.graph, pruned, c.terminals).empty();
      if (longer || noisier || invalid) {
        Counterexample ce;
        ce.instance = "random tree seed=" + std::to_string(s);
        ce.a = names_of(c.graph, c.tree.vertices);
        ce.b = names_of(c.graph, pruned.vertices);
        ce.lhs = c.tree.total_length;
        ce.rhs = pruned.total_length;
        prune.violations.push_back(std::move(ce));
      }
    }
    out.reports.push_back(std::move(prune));
  }

  if (all || opts.suite == Suite::kProp1) {
    PropertyReport prop1{"prop1-vicinal", opts.trials, {}};
    for (std::size_t i = 0; i < opts.trials; ++i) {
      const std::uint64_t s = rng();
      OracleCase c = random_oracle_case(s, 5, 10);
      for (const ParetoPoint& p : enumerate_pareto_front(c.graph, c.request)) {
        for (auto [inside, outside] : vicinal_violations(c.graph, p.witness_vertices)) {
          Counterexample ce;
          ce.instance = "oracle case seed=" + std::to_string(s);
          ce.a = names_of(c.graph, p.witness_vertices);
          ce.b = {c.graph.name(inside)};
          ce.v = c.graph.name(outside);
          prop1.violations.push_back(std::move(ce));
        }
      }
    }
    out.reports.push_back(std::move(prop1));
  }
  return out;
}

}  // namespace mist
