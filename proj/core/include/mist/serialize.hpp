#pragma once

#include <string>
#include <vector>

#include "mist/exact_oracle.hpp"
#include "mist/experiment.hpp"
#include "mist/graph.hpp"
#include "mist/interference.hpp"
#include "mist/steiner.hpp"

namespace mist {

// JSON documents are returned as pretty-printed text ending in a newline.

std::string tree_to_json(const Graph& g, const SteinerTreeResult& tree);
std::string front_to_json(const Graph& g, const std::vector<ParetoPoint>& front);
/// Columns: length,interference,vertices (space-separated ids).
std::string front_to_csv(const Graph& g, const std::vector<ParetoPoint>& front);
std::string report_to_json(const PropertyReport& report);
std::string suite_to_json(const SuiteReport& report);
std::string table_to_json(const Graph& g, const ResultTable& table);

/// Reads back one tree from tree_to_json output.
SteinerTreeResult tree_from_json(const Graph& g, std::string_view text);

}  // namespace mist
