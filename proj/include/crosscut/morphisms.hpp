#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "crosscut/crosscut.hpp"
#include "crosscut/element_set.hpp"
#include "crosscut/poset.hpp"

namespace crosscut {

/// An order-preserving map between finite posets, stored pointwise.
class OrderMap {
 public:
  /// Throws IndexError for out-of-range values, NotMonotone with a witness
  /// pair when the table is not order-preserving.
  OrderMap(std::shared_ptr<const Poset> source, std::shared_ptr<const Poset> target, std::vector<Element> values);

  const Poset& source() const { return *source_; }
  const Poset& target() const { return *target_; }
  const std::shared_ptr<const Poset>& source_ptr() const { return source_; }
  const std::shared_ptr<const Poset>& target_ptr() const { return target_; }
  const std::vector<Element>& values() const { return values_; }
  Element operator()(Element x) const { return values_[x]; }

  /// Source and target are the same poset.
  bool is_endomap() const;
  ElementSet image(ElementSet s) const;

  /// Equal when the tables agree and the posets are equal.
  bool operator==(const OrderMap& other) const;

 private:
  std::shared_ptr<const Poset> source_;
  std::shared_ptr<const Poset> target_;
  std::vector<Element> values_;
};

OrderMap make_map(const Poset& source, const Poset& target, std::vector<Element> values);
OrderMap make_endomap(const Poset& p, std::vector<Element> values);
OrderMap identity_map(const Poset& p);
OrderMap constant_map(const Poset& source, const Poset& target, Element value);

/// f after g. Throws Mismatch unless g.target() == f.source().
OrderMap compose(const OrderMap& f, const OrderMap& g);

/// {x : f(x) = x}. Throws NotEndomap.
ElementSet fixed_points(const OrderMap& f);

/// The same table viewed as a map between the opposite posets.
OrderMap opposite_map(const OrderMap& f);

/// Default size cap for exhaustive endomap searches.
inline constexpr int kDefaultSearchCap = 15;

struct SearchOptions {
  int max_elements = kDefaultSearchCap;
};

/// Depth-first enumeration of order-preserving maps source -> target with
/// f(x) restricted to `allowed[x]`.
///
/// Elements are assigned in id order and candidate images in increasing
/// order, so maps are visited in lexicographic order of their value tables.
/// Each assignment narrows the candidates of the unassigned elements that
/// are comparable with it (forward checking), and a branch is cut as soon as
/// some candidate set becomes empty.
class MonotoneMapSearch {
 public:
  MonotoneMapSearch(const Poset& source, const Poset& target);
  MonotoneMapSearch(const Poset& source, const Poset& target, std::vector<ElementSet> allowed);

  /// Calls `visit(std::span<const Element>)` on each map; stops early when the
  /// visitor returns false. Returns true iff the enumeration ran to completion.
  template <class Visitor>
  bool for_each(Visitor&& visit) const;

  std::uint64_t count() const;
  std::optional<std::vector<Element>> first() const;

 private:
  template <class Visitor>
  bool descend(int depth, std::vector<std::vector<ElementSet>>& domains, std::vector<Element>& values,
               Visitor& visit) const;

  Poset source_;
  Poset target_;
  std::vector<ElementSet> allowed_;
  std::vector<ElementSet> later_above_;  // later_above_[x]: ids > x that are above x
  std::vector<ElementSet> later_below_;
};

/// The lexicographically least fixed-point-free order-preserving self-map of
/// p, if any. Throws CapExceeded when p exceeds the search cap.
std::optional<OrderMap> find_fixed_point_free(const Poset& p, SearchOptions options = {});

/// Number of order-preserving self-maps. Throws CapExceeded.
std::uint64_t count_endomaps(const Poset& p, SearchOptions options = {});

/// Iterates x0, f(x0), f(f(x0)), ... from x0 <= f(x0) to the fixed point it
/// reaches. Throws NotEndomap, PreconditionFailed when x0 is not below f(x0).
Element abian_brown(const OrderMap& f, Element x0);

/// Which crosscut construction an induced map acts on.
enum class Construction { D, U, C };

/// Computes the crosscut posets of a source and a target once and then maps
/// value tables f : source -> target to the induced node maps.
///
/// For a D node C the image is the least D node of the target containing
/// f(C); for a U node it is the greatest U node (least by inclusion)
/// containing f(C). The C construction applies one or the other by side.
class InducedMapper {
 public:
  InducedMapper(const Poset& source, const Poset& target, Construction kind);
  /// Endomap form: source and target coincide.
  InducedMapper(const Poset& p, Construction kind);

  const CrosscutPoset& source_crosscut() const { return *source_cc_; }
  const CrosscutPoset& target_crosscut() const { return *target_cc_; }

  /// Node index table of the induced map. Throws PreconditionFailed if some
  /// image has no containing node (cannot happen for finite posets).
  std::vector<Element> apply(std::span<const Element> values) const;

  /// Same as apply() plus the order-preservation check on the result.
  OrderMap induce(const OrderMap& f) const;

 private:
  Element image_of(int node, std::span<const Element> values) const;

  Poset source_;
  Poset target_;
  Construction kind_;
  std::shared_ptr<const CrosscutPoset> source_cc_;
  std::shared_ptr<const CrosscutPoset> target_cc_;
  ElementSet target_maximal_;
  ElementSet target_minimal_;
  std::unordered_map<ElementSet, Element> target_d_index_;
  std::unordered_map<ElementSet, Element> target_u_index_;
};

/// An induced map together with the crosscut posets it acts between.
struct InducedMap {
  CrosscutPoset source;
  CrosscutPoset target;
  OrderMap map;
};

/// D(f): C -> min {D in D(Q) : f(C) is a subset of D}.
InducedMap induced_d(const OrderMap& f);
/// U(f): C -> max {D in U(Q) : f(C) is a subset of D}.
InducedMap induced_u(const OrderMap& f);
/// C(f): D(f) on D nodes, U(f) on U nodes. Throws NotDisjoint.
InducedMap induced_c(const OrderMap& f);

// --- template implementation ---

template <class Visitor>
bool MonotoneMapSearch::for_each(Visitor&& visit) const {
  const int n = source_.size();
  std::vector<Element> values(n, -1);
  if (n == 0) return static_cast<bool>(visit(std::span<const Element>(values)));
  for (ElementSet d : allowed_) {
    if (d.empty()) return true;
  }
  // One row of candidate sets per depth; row depth+1 is derived from row depth.
  std::vector<std::vector<ElementSet>> domains(n, allowed_);
  return descend(0, domains, values, visit);
}

template <class Visitor>
bool MonotoneMapSearch::descend(int depth, std::vector<std::vector<ElementSet>>& domains,
                                std::vector<Element>& values, Visitor& visit) const {
  const int n = source_.size();
  const std::vector<ElementSet>& current = domains[depth];
  for (Element v : current[depth]) {
    values[depth] = v;
    if (depth + 1 == n) {
      if (!visit(std::span<const Element>(values))) return false;
      continue;
    }
    std::vector<ElementSet>& next = domains[depth + 1];
    std::copy(current.begin() + depth + 1, current.end(), next.begin() + depth + 1);
    bool viable = true;
    const ElementSet up = target_.up_set(v);
    const ElementSet down = target_.down_set(v);
    for (Element y : later_above_[depth]) {
      next[y] &= up;
      if (next[y].empty()) {
        viable = false;
        break;
      }
    }
    if (viable) {
      for (Element y : later_below_[depth]) {
        next[y] &= down;
        if (next[y].empty()) {
          viable = false;
          break;
        }
      }
    }
    if (viable && !descend(depth + 1, domains, values, visit)) return false;
  }
  values[depth] = -1;
  return true;
}

}  // namespace crosscut
