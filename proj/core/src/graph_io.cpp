#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mist/error.hpp"
#include "mist/graph.hpp"

namespace mist {

using nlohmann::json;

namespace {

std::optional<double> optional_number(const json& obj, const char* key,
                                      const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) throw InputError(where + ": '" + key + "' must be a number");
  return it->get<double>();
}

std::string required_string(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing '" + key + "'");
  if (!it->is_string()) throw InputError(where + ": '" + key + "' must be a string");
  return it->get<std::string>();
}

}  // namespace

Graph load_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("graph parse error: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("graph: top level must be an object");
  if (!doc.contains("nodes") || !doc["nodes"].is_array()) {
    throw InputError("graph: missing 'nodes' array");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw InputError("graph: missing 'edges' array");
  }

  GraphBuilder builder;
  const json& nodes = doc["nodes"];
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string where = "nodes[" + std::to_string(i) + "]";
    const json& n = nodes[i];
    if (!n.is_object()) throw InputError(where + ": must be an object");
    std::optional<std::string> function;
    if (auto it = n.find("function"); it != n.end() && !it->is_null()) {
      if (!it->is_string()) throw InputError(where + ": 'function' must be a string");
      function = it->get<std::string>();
    }
    try {
      builder.add_node(required_string(n, "id", where), std::move(function),
                       optional_number(n, "x", where), optional_number(n, "y", where));
    } catch (const Error& e) {
      throw InputError(where + ": " + e.what());
    }
  }

  const json& edges = doc["edges"];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    if (!e.is_object()) throw InputError(where + ": must be an object");
    auto length = optional_number(e, "length", where);
    if (!length) throw InputError(where + ": missing 'length'");
    try {
      builder.add_edge(required_string(e, "u", where), required_string(e, "v", where),
                       *length);
    } catch (const Error& err) {
      throw InputError(where + ": " + err.what());
    }
  }
  return std::move(builder).build();
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str());
}

std::string save_graph(const Graph& g) {
  json nodes = json::array();
  for (const NodeInfo& n : g.nodes()) {
    json obj = {{"id", n.id}};
    if (n.function) obj["function"] = *n.function;
    if (n.x) obj["x"] = *n.x;
    if (n.y) obj["y"] = *n.y;
    nodes.push_back(std::move(obj));
  }
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"length", e.length}});
  }
  json doc = {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
  return doc.dump(2) + "\n";
}

}  // namespace mist
