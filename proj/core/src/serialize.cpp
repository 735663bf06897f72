#include "mist/serialize.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"
#include "mist/error.hpp"

namespace mist {

using nlohmann::json;

namespace {

json ids(const Graph& g, const NodeSet& s) {
  std::vector<NodeId> members = s.members();
  std::sort(members.begin(), members.end(),
            [&](NodeId a, NodeId b) { return g.rank(a) < g.rank(b); });
  json out = json::array();
  for (NodeId v : members) out.push_back(g.name(v));
  return out;
}

json edges_json(const Graph& g, const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) {
    out.push_back({{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"length", e.length}});
  }
  return out;
}

json tree_json(const Graph& g, const SteinerTreeResult& t) {
  json witnesses = json::array();
  for (const ClosureEntry& w : t.witnesses) {
    json path = json::array();
    for (NodeId v : w.witness.nodes) path.push_back(g.name(v));
    witnesses.push_back({{"a", g.name(w.a)},
                         {"b", g.name(w.b)},
                         {"length", w.length},
                         {"interference", w.interference},
                         {"mode", to_string(w.mode)},
                         {"selected", w.selected},
                         {"path", std::move(path)}});
  }
  return {{"algorithm", t.algorithm},
          {"root", g.name(t.root)},
          {"vertices", ids(g, t.vertices)},
          {"edges", edges_json(g, t.edges)},
          {"total_length", t.total_length},
          {"interference", t.interference},
          {"mode", t.mode},
          {"witnesses", std::move(witnesses)}};
}

json report_json(const PropertyReport& r) {
  json violations = json::array();
  for (const Counterexample& c : r.violations) {
    json item = {{"instance", c.instance}, {"a", c.a}, {"b", c.b},
                 {"lhs", c.lhs},           {"rhs", c.rhs}};
    if (c.v) item["v"] = *c.v;
    violations.push_back(std::move(item));
  }
  return {{"property", r.property},
          {"trials", r.trials},
          {"passed", r.passed()},
          {"violations", std::move(violations)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string tree_to_json(const Graph& g, const SteinerTreeResult& tree) {
  return dump(tree_json(g, tree));
}

std::string front_to_json(const Graph& g, const std::vector<ParetoPoint>& front) {
  json points = json::array();
  for (const ParetoPoint& p : front) {
    points.push_back({{"length", p.length},
                      {"interference", p.interference},
                      {"vertices", ids(g, p.witness_vertices)},
                      {"edges", edges_json(g, p.witness_edges)}});
  }
  return dump({{"front", std::move(points)}});
}

std::string front_to_csv(const Graph& g, const std::vector<ParetoPoint>& front) {
  std::string out = "length,interference,vertices\n";
  char buf[64];
  for (const ParetoPoint& p : front) {
    std::snprintf(buf, sizeof buf, "%.10g,%zu,", p.length, p.interference);
    out += buf;
    bool first = true;
    for (const auto& id : ids(g, p.witness_vertices)) {
      if (!first) out += ' ';
      out += id.get<std::string>();
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string report_to_json(const PropertyReport& report) { return dump(report_json(report)); }

std::string suite_to_json(const SuiteReport& report) {
  json reports = json::array();
  for (const PropertyReport& r : report.reports) reports.push_back(report_json(r));
  return dump({{"passed", report.passed()}, {"reports", std::move(reports)}});
}

std::string table_to_json(const Graph& g, const ResultTable& table) {
  json rows = json::array();
  for (const ResultRow& r : table.rows) {
    json row = {{"request_id", r.request_id},
                {"algorithm", to_string(r.algorithm)},
                {"runtime_ms", r.runtime_ms},
                {"mode", r.mode}};
    row["length"] = r.length ? json(*r.length) : json(nullptr);
    row["interference"] = r.interference ? json(*r.interference) : json(nullptr);
    if (!r.error.empty()) row["error"] = r.error;
    if (r.tree) row["tree"] = tree_json(g, *r.tree);
    rows.push_back(std::move(row));
  }
  return dump({{"rows", std::move(rows)}});
}

SteinerTreeResult tree_from_json(const Graph& g, std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
    std::vector<Edge> edges;
    for (const json& e : doc.at("edges")) {
      const NodeId u = g.index_of(e.at("u").get<std::string>());
      const NodeId v = g.index_of(e.at("v").get<std::string>());
      auto len = g.edge_length(u, v);
      if (!len) throw InputError("tree edge not in graph");
      edges.push_back(Edge{u, v, *len});
    }
    SteinerTreeResult t = make_tree(g, g.index_of(doc.at("root").get<std::string>()),
                                    std::move(edges), doc.at("algorithm").get<std::string>());
    t.mode = doc.value("mode", "");
    return t;
  } catch (const json::exception& e) {
    throw InputError(std::string("tree parse error: ") + e.what());
  }
}

}  // namespace mist
