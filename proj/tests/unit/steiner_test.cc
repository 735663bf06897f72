#include "mist/steiner.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "mist/exact_oracle.hpp"
#include "mist/experiment.hpp"
#include "mist/interference.hpp"
#include "test_graphs.hpp"

namespace mist {
namespace {

using testing::make_graph;
using testing::names;
using testing::set_of;

ClosureEntry entry(const Graph& g, const std::string& a, const std::string& b, double length,
                   std::size_t interference = 0, std::vector<std::string> witness = {}) {
  ClosureEntry e;
  e.a = g.index_of(a);
  e.b = g.index_of(b);
  e.length = length;
  e.interference = interference;
  if (!witness.empty()) {
    std::vector<NodeId> ids;
    for (const auto& w : witness) ids.push_back(g.index_of(w));
    e.witness = make_path(g, ids);
  }
  return e;
}

std::set<std::size_t> as_set(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

// Distance from the root to every vertex measured inside the tree.
std::vector<double> tree_distances(const Graph& g, const SteinerTreeResult& t) {
  GraphBuilder b;
  for (NodeId v = 0; v < g.node_count(); ++v) b.add_node(g.name(v));
  for (const Edge& e : t.edges) b.add_edge(e.u, e.v, e.length);
  return dijkstra(std::move(b).build(), t.root);
}

TEST(TerminalsTest, RootPlusHosts) {
  const Graph g = testing::diamond_with_pendant();
  const MulticastRequest req = make_request(g, "x", {"F1", "F0"});
  EXPECT_EQ(names(g, terminals_of(g, req)), (std::vector<std::string>{"s", "t", "x"}));
  EXPECT_EQ(req.functions, (std::vector<std::string>{"F1", "F0"}));
}

TEST(TerminalsTest, RootHostingFunctionCollapses) {
  const Graph g = testing::diamond_with_pendant();
  EXPECT_EQ(terminals_of(g, make_request(g, "s", {"F0"})).count(), 1u);
}

TEST(TerminalsTest, InvalidRequests) {
  const Graph g = testing::diamond_with_pendant();
  EXPECT_THROW(make_request(g, "s", {"F9"}), Error);
  EXPECT_THROW(make_request(g, "s", {}), Error);
  EXPECT_THROW(make_request(g, "s", {"F1", "F1"}), Error);
  EXPECT_THROW(make_request(g, "nope", {"F1"}), Error);
}

TEST(MetricClosureTest, SingleTerminalHasNoEntries) {
  const Graph g = testing::path4();
  const MetricClosure mc = metric_closure(g, set_of(g, {"b"}), {});
  EXPECT_EQ(mc.terminals.size(), 1u);
  EXPECT_TRUE(mc.entries.empty());
}

TEST(MetricClosureTest, SingleEdge) {
  const Graph g = make_graph({{"a", "b", 2.5}});
  const MetricClosure mc = metric_closure(g, set_of(g, {"a", "b"}), {});
  ASSERT_EQ(mc.entries.size(), 1u);
  EXPECT_EQ(mc.entries[0].length, 2.5);
  EXPECT_EQ(mc.entries[0].witness.nodes, (std::vector<NodeId>{0, 1}));
  EXPECT_EQ(mc.entries[0].interference, 2u);
}

TEST(MetricClosureTest, EntriesMatchPairSolves) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const OracleCase c = random_oracle_case(rng(), 5, 12);
    const Graph& g = c.graph;
    const NodeSet s = terminals_of(g, c.request);
    for (std::size_t threads : {1u, 3u}) {
      const MetricClosure mc = metric_closure(g, s, {}, WitnessPolicy::kMinInterference, threads);
      const std::size_t k = mc.terminals.size();
      ASSERT_EQ(mc.entries.size(), k * (k - 1) / 2);
      for (const ClosureEntry& e : mc.entries) {
        EXPECT_LT(g.rank(e.a), g.rank(e.b));
        const auto ref = exhaustive_min_interference_sp(g, e.a, e.b);
        EXPECT_NEAR(e.length, ref.length, 1e-9);
        EXPECT_EQ(e.interference, ref.interference);
        EXPECT_EQ(e.witness, min_interference_shortest_path(g, e.a, e.b).path);
      }
    }
  }
}

TEST(MetricClosureTest, LexPolicyIgnoresInterference) {
  const Graph g = testing::diamond_with_pendant("a");
  const MetricClosure mc =
      metric_closure(g, set_of(g, {"s", "t"}), {}, WitnessPolicy::kLexShortest);
  ASSERT_EQ(mc.entries.size(), 1u);
  EXPECT_EQ(g.name(mc.entries[0].witness.nodes[1]), "a");
  EXPECT_EQ(mc.entries[0].interference, 5u);
}

TEST(ClosureMstTest, PicksShortEdges) {
  const Graph g = make_graph({{"x", "y"}, {"y", "z"}});
  MetricClosure mc;
  mc.terminals = {0, 1, 2};
  mc.entries = {entry(g, "x", "y", 1), entry(g, "x", "z", 2), entry(g, "y", "z", 1)};
  EXPECT_EQ(as_set(minimum_spanning_tree(g, mc)), (std::set<std::size_t>{0, 2}));
}

TEST(ClosureMstTest, LengthTiesBrokenByInterference) {
  const Graph g = make_graph({{"x", "y"}, {"y", "z"}, {"x", "z"}});
  MetricClosure mc;
  mc.terminals = {0, 1, 2};
  mc.entries = {entry(g, "x", "y", 1, 6), entry(g, "x", "z", 1, 4), entry(g, "y", "z", 1, 5)};
  EXPECT_EQ(as_set(minimum_spanning_tree(g, mc)), (std::set<std::size_t>{1, 2}));
}

TEST(ClosureMstTest, LengthBeatsInterference) {
  const Graph g = make_graph({{"x", "y"}, {"y", "z"}, {"x", "z"}});
  MetricClosure mc;
  mc.terminals = {0, 1, 2};
  mc.entries = {entry(g, "x", "y", 1, 9), entry(g, "x", "z", 1.5, 1), entry(g, "y", "z", 1, 9)};
  EXPECT_EQ(as_set(minimum_spanning_tree(g, mc)), (std::set<std::size_t>{0, 2}));
}

TEST(KmbExpandTest, SharedMiddleVertex) {
  const Graph g = testing::star("c", 3);
  MetricClosure mc;
  mc.entries = {entry(g, "l1", "l2", 2, 4, {"l1", "c", "l2"}),
                entry(g, "l2", "l3", 2, 4, {"l2", "c", "l3"})};
  const NodeSet s = set_of(g, {"l1", "l2", "l3"});
  const SteinerTreeResult t = kmb_expand(g, mc, {0, 1}, s, g.index_of("l1"));
  EXPECT_EQ(t.edges.size(), 3u);
  EXPECT_EQ(t.total_length, 3.0);
  EXPECT_EQ(t.vertices.count(), 4u);
  EXPECT_TRUE(check_tree(g, t, s).empty());
}

TEST(KmbExpandTest, CycleInUnionIsBroken) {
  const Graph g = make_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"a", "f"}, {"f", "e"}});
  MetricClosure mc;
  mc.entries = {entry(g, "a", "c", 2, 0, {"a", "b", "c"}),
                entry(g, "c", "e", 2, 0, {"c", "d", "e"}),
                entry(g, "a", "e", 2, 0, {"a", "f", "e"})};
  const NodeSet s = set_of(g, {"a", "c", "e"});
  const SteinerTreeResult t = kmb_expand(g, mc, {0, 1, 2}, s, g.index_of("a"));
  // Kruskal in rank order drops e-f; f is then a non-terminal leaf.
  EXPECT_EQ(names(g, t.vertices), (std::vector<std::string>{"a", "b", "c", "d", "e"}));
  EXPECT_EQ(t.total_length, 4.0);
  EXPECT_TRUE(check_tree(g, t, s).empty());
}

TEST(TssrTest, RootOnlyRequest) {
  const Graph g = testing::diamond_with_pendant();
  const SteinerTreeResult t = tssr(g, make_request(g, "s", {"F0"}));
  EXPECT_TRUE(t.edges.empty());
  EXPECT_EQ(t.total_length, 0.0);
  EXPECT_EQ(t.interference, 3u);
}

TEST(TssrTest, ReconstructedR1) {
  const MeshInstance p = reconstruct_mesh_instance();
  const SteinerTreeResult t = tssr(p.graph, make_request(p.graph, "N1", {"F1", "F2"}));
  EXPECT_EQ(t.total_length, 1.0);
  EXPECT_EQ(t.interference, 6u);
  EXPECT_EQ(t.algorithm, "TSSR");
  EXPECT_EQ(t.mode, "exact");
}

TEST(TssrTest, AvoidsNoisyRelayWhereStDoesNot) {
  const Graph g = testing::diamond_with_pendant("a");
  const MulticastRequest req = make_request(g, "s", {"F1"});
  const SteinerTreeResult a = tssr(g, req);
  const SteinerTreeResult b = st_baseline(g, req);
  EXPECT_EQ(a.total_length, b.total_length);
  EXPECT_EQ(a.interference, 4u);
  EXPECT_EQ(b.interference, 5u);
  EXPECT_EQ(b.mode, "plain");
}

TEST(TssrTest, WithinTwiceOptimalLength) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const OracleCase c = random_oracle_case(seed, 10, 10);
    const auto front = enumerate_pareto_front(c.graph, c.request);
    const SteinerTreeResult t = tssr(c.graph, c.request);
    EXPECT_LE(t.total_length, 2.0 * front.front().length + 1e-9) << "seed " << seed;
    EXPECT_GE(t.total_length, front.front().length - 1e-9);
  }
}

TEST(TssrTest, UnreachableTerminalIsInfeasible) {
  const Graph g = make_graph({{"a", "b"}}, {{"c", "F1"}}, {"c"});
  try {
    tssr(g, make_request(g, "a", {"F1"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInfeasible);
  }
  EXPECT_THROW(spt_baseline(g, make_request(g, "a", {"F1"})), Error);
}

TEST(SptTest, UsesLexicographicPaths) {
  const Graph g = testing::diamond_with_pendant("a");
  const SteinerTreeResult t = spt_baseline(g, make_request(g, "s", {"F1"}));
  EXPECT_EQ(names(g, t.vertices), (std::vector<std::string>{"a", "s", "t"}));
  EXPECT_EQ(t.algorithm, "SPT");
}

TEST(SptTest, StarFromCenter) {
  const Graph g = make_graph({{"c", "a"}, {"c", "b"}, {"a", "b"}}, {{"a", "F1"}, {"b", "F2"}});
  const SteinerTreeResult t = spt_baseline(g, make_request(g, "c", {"F1", "F2"}));
  EXPECT_EQ(t.total_length, 2.0);
  // The KMB baseline may route through a-b instead; both have length 2.
  EXPECT_EQ(st_baseline(g, make_request(g, "c", {"F1", "F2"})).total_length, 2.0);
}

TEST(SptTest, TreeDistancesAreGraphDistances) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const OracleCase c = random_oracle_case(seed, 5, 14);
    const Graph& g = c.graph;
    const SteinerTreeResult t = spt_baseline(g, c.request);
    const auto dg = dijkstra(g, c.request.root);
    const auto dt = tree_distances(g, t);
    terminals_of(g, c.request).for_each([&](NodeId v) { EXPECT_NEAR(dt[v], dg[v], 1e-9); });
  }
}

TEST(PruneTest, DanglingBranchesRemoved) {
  const Graph g = make_graph({{"a", "b"}, {"b", "c"}, {"b", "x1"}, {"x1", "x2"}, {"c", "y1"}, {"a", "z1"}});
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const SteinerTreeResult full = make_tree(g, g.index_of("a"), edges, "T");
  const NodeSet s = set_of(g, {"a", "c"});
  EXPECT_FALSE(check_tree(g, full, s).empty());
  EXPECT_TRUE(check_tree(g, full, s, false).empty());
  const SteinerTreeResult p = prune_non_terminal_leaves(g, full, s);
  EXPECT_EQ(names(g, p.vertices), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(p.total_length, 2.0);
  EXPECT_EQ(p.interference, interference(g, p.vertices));
  EXPECT_TRUE(check_tree(g, p, s).empty());
}

TEST(PruneTest, RootLeafIsKept) {
  const Graph g = testing::path4();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const SteinerTreeResult t = make_tree(g, g.index_of("a"), edges, "T");
  const SteinerTreeResult p = prune_non_terminal_leaves(g, t, set_of(g, {"c"}));
  EXPECT_EQ(names(g, p.vertices), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(PruneTest, NeverIncreasesMetrics) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const RandomTreeCase c = random_tree_case(seed);
    const SteinerTreeResult p = prune_non_terminal_leaves(c.graph, c.tree, c.terminals);
    ASSERT_TRUE(p.vertices.is_subset_of(c.tree.vertices));
    ASSERT_TRUE(c.terminals.is_subset_of(p.vertices));
    ASSERT_LE(p.total_length, c.tree.total_length + 1e-9);
    ASSERT_LE(p.interference, c.tree.interference);
    ASSERT_TRUE(check_tree(c.graph, p, c.terminals).empty()) << "seed " << seed;
    // Idempotent.
    EXPECT_EQ(prune_non_terminal_leaves(c.graph, p, c.terminals).vertices, p.vertices);
  }
}

TEST(CheckTreeTest, DetectsBrokenTrees) {
  const Graph g = testing::path4();
  SteinerTreeResult t = make_tree(g, 0, {g.edges()[0], g.edges()[1]}, "T");
  const NodeSet s = set_of(g, {"a", "c"});
  EXPECT_TRUE(check_tree(g, t, s).empty());
  EXPECT_FALSE(check_tree(g, t, set_of(g, {"a", "d"})).empty());
  SteinerTreeResult bad_len = t;
  bad_len.total_length = 7;
  EXPECT_FALSE(check_tree(g, bad_len, s).empty());
  SteinerTreeResult bad_n = t;
  bad_n.interference = 1;
  EXPECT_FALSE(check_tree(g, bad_n, s).empty());
}

TEST(SolverInvariantsTest, AllAlgorithmsProduceValidTrees) {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const OracleCase c = random_oracle_case(seed, 5, 16);
    const NodeSet s = terminals_of(c.graph, c.request);
    for (const SteinerTreeResult& t :
         {tssr(c.graph, c.request), spt_baseline(c.graph, c.request),
          st_baseline(c.graph, c.request)}) {
      const auto v = check_tree(c.graph, t, s);
      EXPECT_TRUE(v.empty()) << t.algorithm << " seed " << seed << ": " << v.front();
      EXPECT_EQ(t.root, c.request.root);
    }
  }
}

TEST(SolverInvariantsTest, ThreadCountDoesNotChangeResult) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const OracleCase c = random_oracle_case(seed, 10, 16);
    SolveOptions one, many;
    many.threads = 4;
    const SteinerTreeResult a = tssr(c.graph, c.request, one);
    const SteinerTreeResult b = tssr(c.graph, c.request, many);
    EXPECT_EQ(a.edges, b.edges);
    EXPECT_EQ(a.interference, b.interference);
    EXPECT_EQ(st_baseline(c.graph, c.request, one).edges,
              st_baseline(c.graph, c.request, many).edges);
  }
}

}  // namespace
}  // namespace mist
