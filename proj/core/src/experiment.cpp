#include "mist/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <random>
#include <set>

#include "json.hpp"
#include "mist/error.hpp"
#include "mist/exact_oracle.hpp"
#include "mist/parallel.hpp"

namespace mist {

using nlohmann::json;

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kTssr: return "tssr";
    case Algorithm::kSpt: return "spt";
    case Algorithm::kSt: return "st";
    case Algorithm::kExact: return "exact";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& text) {
  if (text == "tssr") return Algorithm::kTssr;
  if (text == "spt") return Algorithm::kSpt;
  if (text == "st") return Algorithm::kSt;
  if (text == "exact") return Algorithm::kExact;
  throw InputError("unknown algorithm '" + text + "' (expected tssr|spt|st|exact)");
}

namespace {

template <typename T>
T get_or(const json& obj, const char* key, T fallback) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("config: bad value for '") + key + "'");
  }
}

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view text, const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("config parse error: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("config: top level must be an object");

  ExperimentConfig cfg;
  if (doc.contains("graph")) {
    std::filesystem::path p = get_or<std::string>(doc, "graph", "");
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    cfg.graph_path = p.string();
  }
  if (doc.contains("generator")) {
    const json& gen = doc["generator"];
    if (!gen.is_object()) throw InputError("config: 'generator' must be an object");
    UnitDiskParams params;
    params.nodes = get_or<std::size_t>(gen, "nodes", 0);
    params.radius = get_or<double>(gen, "radius", 0.0);
    params.functions = get_or<std::size_t>(gen, "functions", 0);
    params.seed = get_or<std::uint64_t>(gen, "seed", 0);
    cfg.generator = params;
  }

  const std::string default_root = get_or<std::string>(doc, "root", "");
  if (auto it = doc.find("requests"); it != doc.end()) {
    if (!it->is_array()) throw InputError("config: 'requests' must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& r = (*it)[i];
      const std::string where = "config: requests[" + std::to_string(i) + "]";
      if (!r.is_object()) throw InputError(where + " must be an object");
      NamedRequest req;
      req.id = get_or<std::string>(r, "id", "R" + std::to_string(i + 1));
      req.root = get_or<std::string>(r, "root", default_root);
      req.functions = get_or<std::vector<std::string>>(r, "functions", {});
      if (req.root.empty()) throw InputError(where + " has no root");
      cfg.requests.push_back(std::move(req));
    }
  }
  if (auto it = doc.find("random_requests"); it != doc.end()) {
    RandomRequests rr;
    rr.count = get_or<std::size_t>(*it, "count", 0);
    rr.min_functions = get_or<std::size_t>(*it, "min_functions", 1);
    rr.max_functions = get_or<std::size_t>(*it, "max_functions", 3);
    if (rr.min_functions == 0 || rr.min_functions > rr.max_functions) {
      throw InputError("config: random_requests needs 1 <= min_functions <= max_functions");
    }
    cfg.random_requests = rr;
  }
  for (const std::string& a : get_or<std::vector<std::string>>(doc, "algorithms", {})) {
    cfg.algorithms.push_back(parse_algorithm(a));
  }
  cfg.path.mode = parse_solver_mode(get_or<std::string>(doc, "mode", "auto"));
  cfg.path.label_cap = get_or<std::size_t>(doc, "label_cap", cfg.path.label_cap);
  cfg.path.tie_epsilon = get_or<double>(doc, "tie_epsilon", cfg.path.tie_epsilon);
  cfg.node_cap = get_or<std::size_t>(doc, "node_cap", cfg.node_cap);
  cfg.threads = get_or<std::size_t>(doc, "threads", cfg.threads);
  cfg.seed = get_or<std::uint64_t>(doc, "seed", cfg.seed);
  cfg.timing = get_or<bool>(doc, "timing", cfg.timing);
  validate(cfg);
  return cfg;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.algorithms.empty()) throw InputError("config: at least one algorithm required");
  if (cfg.requests.empty() && !(cfg.random_requests && cfg.random_requests->count > 0)) {
    throw InputError("config: no requests");
  }
  if (cfg.graph_path.has_value() == cfg.generator.has_value()) {
    throw InputError("config: exactly one of 'graph' or 'generator' is required");
  }
  if (cfg.path.label_cap == 0) throw InputError("config: label_cap must be >= 1");
  if (cfg.threads == 0) throw InputError("config: threads must be >= 1");
}

std::vector<NamedRequest> expand_requests(const Graph& g, const ExperimentConfig& cfg) {
  std::vector<NamedRequest> out = cfg.requests;
  if (!cfg.random_requests || cfg.random_requests->count == 0) return out;
  std::vector<std::string> labels;
  for (const NodeInfo& n : g.nodes()) {
    if (n.function) labels.push_back(*n.function);
  }
  std::sort(labels.begin(), labels.end());
  if (labels.empty() || g.node_count() == 0) {
    throw InputError("random_requests: graph has no function labels");
  }
  std::mt19937_64 rng(cfg.seed);
  const RandomRequests& rr = *cfg.random_requests;
  for (std::size_t i = 0; i < rr.count; ++i) {
    std::uniform_int_distribution<NodeId> pick_root(0, static_cast<NodeId>(g.node_count() - 1));
    const NodeId root = pick_root(rng);
    const std::size_t hi = std::min(rr.max_functions, labels.size());
    const std::size_t lo = std::min(rr.min_functions, hi);
    std::uniform_int_distribution<std::size_t> pick_k(lo, hi);
    const std::size_t k = pick_k(rng);
    std::vector<std::string> pool = labels;
    std::vector<std::string> chosen;
    for (std::size_t j = 0; j < k; ++j) {
      std::uniform_int_distribution<std::size_t> pick(j, pool.size() - 1);
      std::swap(pool[j], pool[pick(rng)]);
      chosen.push_back(pool[j]);
    }
    out.push_back(NamedRequest{"Q" + std::to_string(i + 1), g.name(root), std::move(chosen)});
  }
  return out;
}

ResultTable run_experiment(const Graph& g, const ExperimentConfig& cfg) {
  validate(cfg);
  const std::vector<NamedRequest> requests = expand_requests(g, cfg);
  ResultTable table;
  for (const NamedRequest& r : requests) {
    for (Algorithm a : cfg.algorithms) {
      ResultRow row;
      row.request_id = r.id;
      row.algorithm = a;
      table.rows.push_back(std::move(row));
    }
  }

  const std::size_t per_request = cfg.algorithms.size();
  parallel_for(table.rows.size(), cfg.threads, [&](std::size_t i) {
    ResultRow& row = table.rows[i];
    const NamedRequest& named = requests[i / per_request];
    const auto start = std::chrono::steady_clock::now();
    try {
      const MulticastRequest req = make_request(g, named.root, named.functions);
      SolveOptions opts{cfg.path, 1};
      SteinerTreeResult tree;
      switch (row.algorithm) {
        case Algorithm::kTssr: tree = tssr(g, req, opts); break;
        case Algorithm::kSpt: tree = spt_baseline(g, req, cfg.path.tie_epsilon); break;
        case Algorithm::kSt: tree = st_baseline(g, req, opts); break;
        case Algorithm::kExact: {
          auto front = enumerate_pareto_front(g, req, cfg.node_cap, cfg.path.tie_epsilon);
          tree = front_min_length_tree(g, req, front);
          break;
        }
      }
      row.length = tree.total_length;
      row.interference = tree.interference;
      row.mode = tree.mode;
      row.tree = std::move(tree);
    } catch (const Error& e) {
      row.error = e.what();
      row.mode = "error";
    }
    if (cfg.timing) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      row.runtime_ms = std::chrono::duration<double, std::milli>(elapsed).count();
    }
  });
  return table;
}

ResultTable run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const Graph g = cfg.graph_path ? load_graph_file(*cfg.graph_path)
                                 : generate_unit_disk(*cfg.generator);
  return run_experiment(g, cfg);
}

std::string to_csv(const ResultTable& table) {
  std::string out = "request_id,algorithm,length,interference,runtime_ms,mode\n";
  char buf[64];
  for (const ResultRow& row : table.rows) {
    out += row.request_id;
    out += ',';
    out += to_string(row.algorithm);
    out += ',';
    if (row.length) {
      std::snprintf(buf, sizeof buf, "%.10g", *row.length);
      out += buf;
    }
    out += ',';
    if (row.interference) out += std::to_string(*row.interference);
    out += ',';
    std::snprintf(buf, sizeof buf, "%.3f", row.runtime_ms);
    out += buf;
    out += ',';
    out += row.mode;
    out += '\n';
  }
  return out;
}

}  // namespace mist
