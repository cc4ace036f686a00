#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace crosscut {

/// Dense element identifier of a finite poset (0..n-1).
using Element = int;

/// Fixed-width set of element identifiers, backed by one machine word.
///
/// Every poset in this library has at most `kCapacity` elements, so subsets,
/// up/down sets and crosscut nodes are all plain bit masks.
class ElementSet {
 public:
  static constexpr int kCapacity = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Element operator*() const { return std::countr_zero(rest_); }
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

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  constexpr ElementSet(std::initializer_list<Element> members) {
    for (Element x : members) insert(x);
  }

  /// {0, 1, ..., n-1}
  static constexpr ElementSet first_n(int n) {
    return ElementSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet singleton(Element x) { return ElementSet(std::uint64_t{1} << x); }

  template <class Range>
  static ElementSet from_range(const Range& members) {
    ElementSet s;
    for (Element x : members) s.insert(x);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Element x) const { return x >= 0 && x < kCapacity && ((bits_ >> x) & 1U); }
  /// Least member; undefined on the empty set.
  constexpr Element first() const { return std::countr_zero(bits_); }
  constexpr Element last() const { return kCapacity - 1 - std::countl_zero(bits_); }

  constexpr void insert(Element x) { bits_ |= std::uint64_t{1} << x; }
  constexpr void erase(Element x) { bits_ &= ~(std::uint64_t{1} << x); }

  constexpr bool is_subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const ElementSet&) const = default;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical ordering used for deterministic output: by cardinality, then by
/// the sorted member lists compared lexicographically.
bool canonical_less(ElementSet a, ElementSet b);

}  // namespace crosscut

template <>
struct std::hash<crosscut::ElementSet> {
  std::size_t operator()(crosscut::ElementSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
