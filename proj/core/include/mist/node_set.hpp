#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace mist {

using NodeId = std::uint32_t;

/// Fixed-universe bitset over dense node indices [0, universe).
///
/// Binary operations require both operands to share the same universe size.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::size_t universe);
  NodeSet(std::size_t universe, std::initializer_list<NodeId> members);

  static NodeSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }

  void insert(NodeId v) { words_[v >> 6] |= bit(v); }
  void erase(NodeId v) { words_[v >> 6] &= ~bit(v); }
  bool contains(NodeId v) const {
    return v < universe_ && (words_[v >> 6] & bit(v)) != 0;
  }

  std::size_t count() const;
  bool empty() const;

  NodeSet& operator|=(const NodeSet& other);
  NodeSet& operator&=(const NodeSet& other);
  NodeSet& operator-=(const NodeSet& other);

  friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
  friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
  friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }

  bool is_subset_of(const NodeSet& other) const;
  bool intersects(const NodeSet& other) const;

  /// Members in increasing index order.
  std::vector<NodeId> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        const int tz = __builtin_ctzll(word);
        fn(static_cast<NodeId>(w * 64 + static_cast<std::size_t>(tz)));
        word &= word - 1;
      }
    }
  }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

  std::size_t hash() const;

 private:
  static std::uint64_t bit(NodeId v) { return std::uint64_t{1} << (v & 63); }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace mist

template <>
struct std::hash<mist::NodeSet> {
  std::size_t operator()(const mist::NodeSet& s) const noexcept {
    return s.hash();
  }
};
