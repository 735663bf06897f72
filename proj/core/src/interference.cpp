#include "mist/interference.hpp"

#include <cmath>
#include <random>

#include "mist/error.hpp"

namespace mist {

NodeSet closed_neighborhood(const Graph& g, const NodeSet& w) {
  if (w.universe() != g.node_count()) {
    throw InputError("node set universe does not match graph size");
  }
  NodeSet out(g.node_count());
  w.for_each([&](NodeId v) { out |= g.closed_neighbors(v); });
  return out;
}

std::size_t interference(const Graph& g, const NodeSet& w) {
  return closed_neighborhood(g, w).count();
}

void PropertyReport::absorb(const PropertyReport& other) {
  trials += other.trials;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

namespace {

constexpr double kSlack = 1e-9;

NodeNamer namer_or_default(const PropertyCheckOptions& opts) {
  if (opts.namer) return opts.namer;
  return [](NodeId v) { return std::to_string(v); };
}

std::vector<std::string> names(const NodeSet& s, const NodeNamer& namer) {
  std::vector<std::string> out;
  s.for_each([&](NodeId v) { out.push_back(namer(v)); });
  return out;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // Density is itself random so both sparse and dense sets get exercised.
  NodeSet subset_of(const NodeSet& pool) {
    const double p = unit_(rng_);
    NodeSet out(pool.universe());
    pool.for_each([&](NodeId v) {
      if (unit_(rng_) < p) out.insert(v);
    });
    return out;
  }

  NodeId element(std::size_t universe) {
    std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(universe - 1));
    return pick(rng_);
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

NodeSet with(NodeSet s, NodeId v) {
  s.insert(v);
  return s;
}

// Greedy shrink of a violating (A, B) pair, keeping A ⊆ B, until no single
// removal preserves the violation.
template <typename Violates>
void shrink(NodeSet& a, NodeSet& b, Violates&& violates, bool nested) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId x : b.members()) {
      NodeSet b2 = b;
      b2.erase(x);
      NodeSet a2 = a;
      if (nested) a2.erase(x);
      if (violates(a2, b2)) {
        a = std::move(a2);
        b = std::move(b2);
        changed = true;
      }
    }
    for (NodeId x : a.members()) {
      NodeSet a2 = a;
      a2.erase(x);
      if (violates(a2, b)) {
        a = std::move(a2);
        changed = true;
      }
    }
  }
}

}  // namespace

PropertyReport check_monotone(std::size_t universe, const SetFunction& f,
                              const PropertyCheckOptions& opts) {
  PropertyReport report{"monotone", opts.trials, {}};
  if (universe == 0) return report;
  const NodeNamer namer = namer_or_default(opts);
  Sampler sampler(opts.seed);
  const NodeSet all = NodeSet::full(universe);
  auto violates = [&](const NodeSet& a, const NodeSet& b) {
    return f(a) > f(b) + kSlack;
  };
  for (std::size_t t = 0; t < opts.trials; ++t) {
    NodeSet b = sampler.subset_of(all);
    NodeSet a = sampler.subset_of(b);
    if (!violates(a, b)) continue;
    shrink(a, b, violates, /*nested=*/true);
    report.violations.push_back(
        Counterexample{opts.instance, names(a, namer), names(b, namer), std::nullopt,
                       f(b), f(a)});
  }
  return report;
}

PropertyReport check_submodular(std::size_t universe, const SetFunction& f,
                                const PropertyCheckOptions& opts) {
  PropertyReport report{"submodular", opts.trials, {}};
  if (universe == 0) return report;
  const NodeNamer namer = namer_or_default(opts);
  Sampler sampler(opts.seed);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    const NodeId v = sampler.element(universe);
    NodeSet pool = NodeSet::full(universe);
    pool.erase(v);
    NodeSet b = sampler.subset_of(pool);
    NodeSet a = sampler.subset_of(b);
    auto gain = [&](const NodeSet& s) { return f(with(s, v)) - f(s); };
    auto violates = [&](const NodeSet& a2, const NodeSet& b2) {
      return gain(a2) + kSlack < gain(b2);
    };
    if (!violates(a, b)) continue;
    shrink(a, b, violates, /*nested=*/true);
    report.violations.push_back(Counterexample{opts.instance, names(a, namer),
                                               names(b, namer), namer(v), gain(a),
                                               gain(b)});
  }
  return report;
}

PropertyReport check_submodular_lattice(std::size_t universe, const SetFunction& f,
                                        const PropertyCheckOptions& opts) {
  PropertyReport report{"submodular-lattice", opts.trials, {}};
  if (universe == 0) return report;
  const NodeNamer namer = namer_or_default(opts);
  Sampler sampler(opts.seed);
  const NodeSet all = NodeSet::full(universe);
  auto sides = [&](const NodeSet& a, const NodeSet& b) {
    return std::pair{f(a) + f(b), f(a | b) + f(a & b)};
  };
  auto violates = [&](const NodeSet& a, const NodeSet& b) {
    auto [lhs, rhs] = sides(a, b);
    return lhs + kSlack < rhs;
  };
  for (std::size_t t = 0; t < opts.trials; ++t) {
    NodeSet a = sampler.subset_of(all);
    NodeSet b = sampler.subset_of(all);
    if (!violates(a, b)) continue;
    shrink(a, b, violates, /*nested=*/false);
    auto [lhs, rhs] = sides(a, b);
    report.violations.push_back(
        Counterexample{opts.instance, names(a, namer), names(b, namer), std::nullopt,
                       lhs, rhs});
  }
  return report;
}

namespace {

PropertyCheckOptions graph_options(const Graph& g, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw InputError("trials must be >= 1");
  PropertyCheckOptions opts;
  opts.trials = trials;
  opts.seed = seed;
  opts.namer = [&g](NodeId v) { return g.name(v); };
  return opts;
}

SetFunction interference_oracle(const Graph& g) {
  return [&g](const NodeSet& w) { return static_cast<double>(interference(g, w)); };
}

}  // namespace

PropertyReport check_monotone(const Graph& g, std::size_t trials, std::uint64_t seed) {
  return check_monotone(g.node_count(), interference_oracle(g),
                        graph_options(g, trials, seed));
}

PropertyReport check_submodular(const Graph& g, std::size_t trials, std::uint64_t seed) {
  return check_submodular(g.node_count(), interference_oracle(g),
                          graph_options(g, trials, seed));
}

PropertyReport check_submodular_lattice(const Graph& g, std::size_t trials,
                                        std::uint64_t seed) {
  return check_submodular_lattice(g.node_count(), interference_oracle(g),
                                  graph_options(g, trials, seed));
}

const char* to_string(VicinalRelation r) {
  switch (r) {
    case VicinalRelation::kLessOrEqual: return "LessOrEqual";
    case VicinalRelation::kGreaterOrEqual: return "GreaterOrEqual";
    case VicinalRelation::kEquivalent: return "Equivalent";
    case VicinalRelation::kIncomparable: return "Incomparable";
  }
  return "?";
}

bool vicinal_leq(const Graph& g, NodeId u, NodeId v) {
  return neighbors(g, u).is_subset_of(g.closed_neighbors(v));
}

VicinalRelation vicinal_compare(const Graph& g, NodeId u, NodeId v) {
  g.check_node(u);
  g.check_node(v);
  if (u == v) throw InputError("vicinal_compare needs two distinct nodes");
  const bool le = vicinal_leq(g, u, v);
  const bool ge = vicinal_leq(g, v, u);
  if (le && ge) return VicinalRelation::kEquivalent;
  if (le) return VicinalRelation::kLessOrEqual;
  if (ge) return VicinalRelation::kGreaterOrEqual;
  return VicinalRelation::kIncomparable;
}

std::vector<std::pair<NodeId, NodeId>> vicinal_violations(const Graph& g,
                                                          const NodeSet& tree_vertices) {
  std::vector<std::pair<NodeId, NodeId>> out;
  const NodeSet covered = closed_neighborhood(g, tree_vertices);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (covered.contains(v)) continue;
    tree_vertices.for_each([&](NodeId t) {
      if (vicinal_leq(g, t, v)) out.emplace_back(t, v);
    });
  }
  return out;
}

}  // namespace mist
