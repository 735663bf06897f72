#include "mist/graph.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "mist/error.hpp"
#include "mist/experiment.hpp"
#include "test_graphs.hpp"

namespace mist {
namespace {

using testing::make_graph;

TEST(LoadGraphTest, MinimalFile) {
  const Graph g = load_graph(R"({"nodes":[{"id":"a"},{"id":"b"}],
                                 "edges":[{"u":"a","v":"b","length":1.0}]})");
  EXPECT_EQ(g.node_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edge_length(0, 1), 1.0);
  EXPECT_EQ(g.edge_length(1, 0), 1.0);
}

TEST(LoadGraphTest, RejectsDuplicateFunction) {
  try {
    load_graph(R"({"nodes":[{"id":"a","function":"F1"},{"id":"b","function":"F1"}],
                   "edges":[]})");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInput);
    EXPECT_NE(std::string(e.what()).find("duplicate function"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("nodes[1]"), std::string::npos);
  }
}

TEST(LoadGraphTest, RejectsBadEdgesWithContext) {
  const char* base = R"({"nodes":[{"id":"a"},{"id":"b"}],"edges":[%s]})";
  auto load = [&](const std::string& edges) {
    char buf[512];
    std::snprintf(buf, sizeof buf, base, edges.c_str());
    return load_graph(buf);
  };
  auto message = [&](const std::string& edges) {
    try {
      load(edges);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(R"({"u":"a","v":"b","length":1},{"u":"b","v":"a","length":2})")
                .find("edges[1]: parallel edge"),
            std::string::npos);
  EXPECT_NE(message(R"({"u":"a","v":"b","length":-1})").find("negative length"),
            std::string::npos);
  EXPECT_NE(message(R"({"u":"a","v":"a","length":1})").find("self-loop"), std::string::npos);
  EXPECT_NE(message(R"({"u":"a","v":"z","length":1})").find("unknown node"),
            std::string::npos);
  EXPECT_NE(message(R"({"u":"a","v":"b"})").find("missing 'length'"), std::string::npos);
  EXPECT_THROW(load_graph("{not json"), Error);
  EXPECT_THROW(load_graph(R"({"nodes":[]})"), Error);
}

TEST(LoadGraphTest, ReconstructedInstanceShape) {
  const Graph g = reconstruct_mesh_instance().graph;
  const NodeId n1 = g.index_of("N1"), n2 = g.index_of("N2");
  EXPECT_EQ(g.degree(n1), 3u);
  EXPECT_EQ(g.degree(n2), 3u);
  EXPECT_EQ(g.edge_length(n1, n2), 1.0);
  EXPECT_EQ(g.host_of("F1"), n1);
  EXPECT_EQ(g.host_of("F2"), n2);
}

TEST(LoadGraphTest, RoundTripIsIdentity) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate_unit_disk({25, 0.35, 4, seed});
    const std::string text = save_graph(g);
    const Graph back = load_graph(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(save_graph(back), text);
  }
  const Graph mesh = reconstruct_mesh_instance().graph;
  EXPECT_EQ(load_graph(save_graph(mesh)), mesh);
}

TEST(NeighborsTest, Examples) {
  const Graph path = make_graph({{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(testing::names(path, neighbors(path, path.index_of("b"))),
            (std::vector<std::string>{"a", "c"}));

  const Graph iso = make_graph({{"a", "b"}}, {}, {"z"});
  EXPECT_TRUE(neighbors(iso, iso.index_of("z")).empty());

  const Graph k4 = make_graph({{"a", "b"}, {"a", "c"}, {"a", "d"},
                               {"b", "c"}, {"b", "d"}, {"c", "d"}});
  for (NodeId v = 0; v < 4; ++v) {
    NodeSet n = neighbors(k4, v);
    EXPECT_EQ(n.count(), 3u);
    EXPECT_FALSE(n.contains(v));
  }
  EXPECT_THROW(neighbors(k4, 17), Error);
  EXPECT_THROW(k4.index_of("nope"), Error);
}

TEST(ShortestDistanceTest, Examples) {
  const Graph g = make_graph({{"s", "t", 2.5}});
  EXPECT_EQ(shortest_distance(g, 0, 0), 0.0);
  EXPECT_EQ(shortest_distance(g, 0, 1), 2.5);

  const Graph cycle = make_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
  EXPECT_EQ(shortest_distance(cycle, cycle.index_of("a"), cycle.index_of("c")), 2.0);

  const Graph split = make_graph({{"a", "b"}}, {}, {"z"});
  EXPECT_TRUE(std::isinf(shortest_distance(split, split.index_of("a"), split.index_of("z"))));
  EXPECT_THROW(shortest_distance(split, 0, 99), Error);
}

TEST(ShortestDistanceTest, TriangleInequality) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = generate_unit_disk({20, 0.5, 0, seed});
    std::vector<std::vector<double>> d;
    for (NodeId v = 0; v < g.node_count(); ++v) d.push_back(dijkstra(g, v));
    for (NodeId a = 0; a < g.node_count(); ++a) {
      for (NodeId b = 0; b < g.node_count(); ++b) {
        EXPECT_DOUBLE_EQ(d[a][b], d[b][a]);
        for (NodeId c = 0; c < g.node_count(); ++c) {
          if (std::isinf(d[a][b]) || std::isinf(d[b][c])) continue;
          EXPECT_LE(d[a][c], d[a][b] + d[b][c] + 1e-12);
        }
      }
    }
  }
}

TEST(GenerateUnitDiskTest, SingleNode) {
  const Graph g = generate_unit_disk({1, 0.5, 0, 1});
  EXPECT_EQ(g.node_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(GenerateUnitDiskTest, Preconditions) {
  EXPECT_THROW(generate_unit_disk({2, 1.5, 0, 1}), Error);
  EXPECT_THROW(generate_unit_disk({2, 0.0, 0, 1}), Error);
  EXPECT_THROW(generate_unit_disk({2, 0.5, 3, 1}), Error);
}

TEST(GenerateUnitDiskTest, DeterministicAndGeometric) {
  const Graph a = generate_unit_disk({30, 0.3, 5, 7});
  const Graph b = generate_unit_disk({30, 0.3, 5, 7});
  EXPECT_EQ(a, b);
  EXPECT_EQ(save_graph(a), save_graph(b));
  EXPECT_NE(save_graph(a), save_graph(generate_unit_disk({30, 0.3, 5, 8})));

  std::size_t labelled = 0;
  for (NodeId v = 0; v < a.node_count(); ++v) labelled += a.node(v).function.has_value();
  EXPECT_EQ(labelled, 5u);
  for (int f = 1; f <= 5; ++f) EXPECT_TRUE(a.host_of("F" + std::to_string(f)));

  // Edge iff within radius, length = distance.
  for (NodeId u = 0; u < a.node_count(); ++u) {
    for (NodeId v = u + 1; v < a.node_count(); ++v) {
      const double d = std::hypot(*a.node(u).x - *a.node(v).x, *a.node(u).y - *a.node(v).y);
      auto len = a.edge_length(u, v);
      EXPECT_EQ(len.has_value(), d <= 0.3);
      if (len) EXPECT_DOUBLE_EQ(*len, d);
    }
  }
}

TEST(PathTest, MakePathValidates) {
  const Graph g = testing::path4();
  const Path p = make_path(g, {0, 1, 2});
  EXPECT_EQ(p.length, 2.0);
  EXPECT_EQ(p.edges(g).size(), 2u);
  EXPECT_THROW(make_path(g, {0, 2}), Error);
  EXPECT_THROW(make_path(g, {0, 1, 0}), Error);
}

}  // namespace
}  // namespace mist
