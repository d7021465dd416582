#ifndef CMGRAPH_VERTEX_SET_HPP
#define CMGRAPH_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <vector>

namespace cmg {

/// Subset of the vertex indices 0..63 of one graph or complex universe.
/// Iteration visits indices in ascending order, which is also label order.
class VertexSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  /// {0, ..., n-1}
  static constexpr VertexSet first_n(int n) {
    return VertexSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }
  constexpr int back() const { return 63 - std::countl_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;
  /// Raw bit order; use canonical_less for label-lexicographic order.
  constexpr auto operator<=>(const VertexSet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order of the ascending member sequences; a proper prefix sorts first.
constexpr bool canonical_less(VertexSet a, VertexSet b) {
  const VertexSet diff = a ^ b;
  if (diff.empty()) return false;
  const int i = diff.front();
  // Elements below i are shared. Whichever set owns i continues with i; the other
  // continues with something larger, or ends (and is then the smaller one).
  if (a.contains(i)) return !(b - VertexSet::first_n(i + 1)).empty();
  return (a - VertexSet::first_n(i + 1)).empty();
}

}  // namespace cmg

template <>
struct std::hash<cmg::VertexSet> {
  std::size_t operator()(cmg::VertexSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

#endif
