#include "mist/experiment.hpp"

namespace mist {

namespace {

struct NodeSpec {
  const char* id;
  const char* function;
  double x;
  double y;
};

struct EdgeSpec {
  const char* u;
  const char* v;
  double length;
};

// The published figure is not recoverable, so this network is rebuilt from
// the stated facts: root N1 hosts F1, N2 hosts F2, the unit link N1-N2, three
// links at each of N1 and N2, and |N[{N1,N2}]| = 6. F1..F4 sit on a line of
// unit hops. Each hop past N2 has two equal-length half-unit relays; the relay
// whose id sorts first (N10, N11) has extra neighbors, so id-order tie
// breaking picks the noisier route.
constexpr NodeSpec kNodes[] = {
    {"N1", "F1", 0.0, 0.0},   {"N2", "F2", 1.0, 0.0},   {"N3", "F3", 2.0, 0.0},
    {"N4", "F4", 3.0, 0.0},   {"N5", nullptr, -0.5, 0.8}, {"N6", nullptr, -0.5, -0.8},
    {"N7", nullptr, 1.5, -0.3}, {"N8", nullptr, 2.5, -0.3}, {"N9", nullptr, 3.8, 0.0},
    {"N10", nullptr, 1.5, 0.3}, {"N11", nullptr, 2.5, 0.3}, {"N12", nullptr, 1.2, 1.2},
    {"N13", nullptr, 1.9, 1.1}, {"N14", nullptr, 2.8, 1.2}, {"N15", nullptr, 3.2, 0.9},
    {"N16", nullptr, 2.3, 1.6},
};

constexpr EdgeSpec kEdges[] = {
    {"N1", "N2", 1.0},   {"N1", "N5", 1.0},   {"N1", "N6", 1.0},   {"N5", "N6", 1.0},
    {"N2", "N7", 0.5},   {"N2", "N10", 0.5},  {"N7", "N3", 0.5},   {"N10", "N3", 0.5},
    {"N3", "N8", 0.5},   {"N3", "N11", 0.5},  {"N8", "N4", 0.5},   {"N11", "N4", 0.5},
    {"N10", "N12", 1.0}, {"N10", "N13", 1.0}, {"N11", "N14", 1.0}, {"N11", "N15", 1.0},
    {"N13", "N16", 1.0}, {"N14", "N16", 1.0}, {"N4", "N9", 1.0},
};

}  // namespace

MeshInstance reconstruct_mesh_instance() {
  GraphBuilder builder;
  for (const NodeSpec& n : kNodes) {
    std::optional<std::string> function;
    if (n.function) function = n.function;
    builder.add_node(n.id, function, n.x, n.y);
  }
  for (const EdgeSpec& e : kEdges) builder.add_edge(e.u, e.v, e.length);

  MeshInstance inst{std::move(builder).build(), {}};
  const std::vector<std::vector<std::string>> table = {
      {"F1", "F2"},       {"F1", "F3"},       {"F1", "F4"},       {"F2", "F3"},
      {"F2", "F4"},       {"F3", "F4"},       {"F1", "F2", "F3"}, {"F1", "F2", "F4"},
      {"F1", "F3", "F4"}, {"F2", "F3", "F4"}, {"F1", "F2", "F3", "F4"},
  };
  for (std::size_t i = 0; i < table.size(); ++i) {
    inst.requests.push_back(NamedRequest{"R" + std::to_string(i + 1), "N1", table[i]});
  }
  return inst;
}

}  // namespace mist
