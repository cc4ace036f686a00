#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crosscut/element_set.hpp"

namespace crosscut {

/// A finite partially ordered set on the dense ground set {0, ..., n-1}.
///
/// The order is stored twice, as the up-set and the down-set of every
/// element, so that comparability queries are single bit tests and subset
/// computations are word operations. Labels are display-only: two posets
/// compare equal when they have the same size and the same relation.
///
/// Instances are immutable once built; all constructors verify that the
/// relation is reflexive, antisymmetric and transitive.
class Poset {
 public:
  static constexpr int kMaxElements = ElementSet::kCapacity;

  /// The empty poset.
  Poset() = default;

  /// Builds from explicit up-sets (`up_sets[x]` = {y : x <= y}). Throws
  /// InvalidOrder/CycleError when the relation is not a partial order.
  static Poset from_up_sets(std::vector<std::string> labels, std::vector<ElementSet> up_sets);

  int size() const { return static_cast<int>(up_.size()); }
  bool empty() const { return up_.empty(); }
  ElementSet elements() const { return ElementSet::first_n(size()); }

  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

  ElementSet up_set(Element x) const;
  ElementSet down_set(Element x) const;
  ElementSet strict_up_set(Element x) const;
  ElementSet strict_down_set(Element x) const;
  /// Every element comparable with x (x included).
  ElementSet comparable_set(Element x) const;

  const std::string& label(Element x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find_label(const std::string& label) const;

  /// Throws IndexError unless 0 <= x < size().
  void check_element(Element x) const;
  /// Throws IndexError unless s is a subset of the ground set.
  void check_subset(ElementSet s) const;

  bool operator==(const Poset& other) const { return up_ == other.up_; }

 private:
  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

using Cover = std::pair<Element, Element>;

/// Reflexive-transitive closure of `covers` (pairs (x, y) with x below y).
/// Throws IndexError for out-of-range indices and CycleError when the
/// closure is not antisymmetric.
Poset from_covers(std::vector<std::string> labels, const std::vector<Cover>& covers);

/// Labels "0", "1", ..., "n-1".
std::vector<std::string> numeric_labels(int n);

/// Cover pairs (x, y), y covering x, sorted lexicographically.
std::vector<Cover> hasse_covers(const Poset& p);

ElementSet maximal_elements(const Poset& p);
ElementSet minimal_elements(const Poset& p);
/// Maximal/minimal elements of the induced subposet on s.
ElementSet maximal_elements(const Poset& p, ElementSet s);
ElementSet minimal_elements(const Poset& p, ElementSet s);

/// Components of the comparability graph restricted to s, sorted by least member.
std::vector<ElementSet> connected_components(const Poset& p, ElementSet s);
/// The component of s containing x (x must belong to s).
ElementSet component_of(const Poset& p, ElementSet s, Element x);
bool is_connected(const Poset& p, ElementSet s);
bool is_connected(const Poset& p);

bool is_down_set(const Poset& p, ElementSet s);
bool is_up_set(const Poset& p, ElementSet s);

/// Dual poset: same labels, relation transposed.
Poset opposite(const Poset& p);

/// Subposet on s; the i-th element of the result is the i-th least member of s.
Poset induced_subposet(const Poset& p, ElementSet s);

/// Removes one element (ids above it shift down by one).
Poset remove_element(const Poset& p, Element x);

/// Posets above this size are rejected by is_cutset.
inline constexpr int kCutsetCap = 25;

/// True iff every maximal chain of p meets x. Throws CapExceeded above kCutsetCap.
bool is_cutset(const Poset& p, ElementSet x);

/// Least common upper bound of s, if any. Throws EmptyInput when s is empty.
std::optional<Element> has_join(const Poset& p, ElementSet s);

/// An order-isomorphism p -> q (as an image table), or nothing.
std::optional<std::vector<Element>> are_isomorphic(const Poset& p, const Poset& q);

/// True iff `bijection` is a bijection p -> q that preserves and reflects the order.
bool is_isomorphism(const Poset& p, const Poset& q, const std::vector<Element>& bijection);

/// Length of the longest chain below x (0 for minimal elements).
std::vector<int> heights(const Poset& p);

}  // namespace crosscut
