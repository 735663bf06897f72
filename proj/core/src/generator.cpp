#include <cmath>
#include <random>

#include "mist/error.hpp"
#include "mist/graph.hpp"

namespace mist {

Graph generate_unit_disk(const UnitDiskParams& params) {
  if (!(params.radius > 0.0 && params.radius <= 1.0)) {
    throw InputError("radius must be in (0, 1]");
  }
  if (params.functions > params.nodes) {
    throw InputError("cannot place " + std::to_string(params.functions) +
                     " functions on " + std::to_string(params.nodes) + " nodes");
  }

  std::mt19937_64 rng(params.seed);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  std::vector<double> xs(params.nodes), ys(params.nodes);
  for (std::size_t i = 0; i < params.nodes; ++i) {
    xs[i] = coord(rng);
    ys[i] = coord(rng);
  }

  // Partial Fisher-Yates: the first k slots of `order` host F1..Fk.
  std::vector<std::size_t> order(params.nodes);
  for (std::size_t i = 0; i < params.nodes; ++i) order[i] = i;
  std::vector<std::optional<std::string>> labels(params.nodes);
  for (std::size_t i = 0; i < params.functions; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, params.nodes - 1);
    std::swap(order[i], order[pick(rng)]);
    labels[order[i]] = "F" + std::to_string(i + 1);
  }

  GraphBuilder builder;
  for (std::size_t i = 0; i < params.nodes; ++i) {
    builder.add_node("v" + std::to_string(i), labels[i], xs[i], ys[i]);
  }
  for (std::size_t i = 0; i < params.nodes; ++i) {
    for (std::size_t j = i + 1; j < params.nodes; ++j) {
      const double d = std::hypot(xs[i] - xs[j], ys[i] - ys[j]);
      if (d <= params.radius) {
        builder.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j), d);
      }
    }
  }
  return std::move(builder).build();
}

}  // namespace mist
