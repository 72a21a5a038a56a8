#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace expc {

// A subset of {0,..,63}, stored as a bit mask. The tag keeps vertex sets and
// facet-index sets from being mixed up.
template <class Tag>
class IndexSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

  static IndexSet from_indices(const std::vector<int>& indices) {
    IndexSet s;
    for (int i : indices) s.insert(i);
    return s;
  }
  static constexpr IndexSet range(int count) {
    return IndexSet(count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1));
  }
  static constexpr IndexSet singleton(int i) { return IndexSet(std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(IndexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }

  // Smallest element; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  // Elements shifted to 1-based labels, the external convention.
  std::vector<int> labels() const {
    auto out = indices();
    for (int& v : out) ++v;
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : labels()) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(IndexSet, IndexSet) = default;
  // Orders by size first, then by mask, so faces sort by dimension.
  friend constexpr bool operator<(IndexSet a, IndexSet b) {
    const int sa = a.size(), sb = b.size();
    return sa != sb ? sa < sb : a.bits_ < b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

struct VertexTag {};
struct FacetTag {};
using VertexSet = IndexSet<VertexTag>;
using FacetSet = IndexSet<FacetTag>;

// Visits every subset of `set`, including the empty set and `set` itself.
template <class Tag, class Fn>
void for_each_subset(IndexSet<Tag> set, Fn&& fn) {
  const std::uint64_t full = set.bits();
  std::uint64_t sub = full;
  while (true) {
    fn(IndexSet<Tag>(sub));
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
}

}  // namespace expc

template <class Tag>
struct std::hash<expc::IndexSet<Tag>> {
  std::size_t operator()(expc::IndexSet<Tag> s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
