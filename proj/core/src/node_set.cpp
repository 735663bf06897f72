#include "mist/node_set.hpp"

#include <bit>
#include <cassert>

namespace mist {

NodeSet::NodeSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

NodeSet::NodeSet(std::size_t universe, std::initializer_list<NodeId> members)
    : NodeSet(universe) {
  for (NodeId v : members) insert(v);
}

NodeSet NodeSet::full(std::size_t universe) {
  NodeSet s(universe);
  for (NodeId v = 0; v < universe; ++v) s.insert(v);
  return s;
}

std::size_t NodeSet::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool NodeSet::empty() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

NodeSet& NodeSet::operator|=(const NodeSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

NodeSet& NodeSet::operator&=(const NodeSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

NodeSet& NodeSet::operator-=(const NodeSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool NodeSet::intersects(const NodeSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::vector<NodeId> NodeSet::members() const {
  std::vector<NodeId> out;
  out.reserve(count());
  for_each([&](NodeId v) { out.push_back(v); });
  return out;
}

std::size_t NodeSet::hash() const {
  // FNV-1a over the words.
  std::size_t h = 1469598103934665603ull;
  for (std::uint64_t w : words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ull;
  }
  return h ^ universe_;
}

}  // namespace mist
