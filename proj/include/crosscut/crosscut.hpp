#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "crosscut/element_set.hpp"
#include "crosscut/poset.hpp"

namespace crosscut {

/// Which construction a node of a crosscut poset comes from.
enum class Side { D, U };

char side_letter(Side side);

/// A poset whose elements are subsets of an underlying poset.
///
/// `nodes[i]` is the member set of node i of `order`; `sides[i]` tags it as
/// coming from the maximal-element construction (D, a down-set) or the
/// minimal-element construction (U, an up-set). Nodes are kept in canonical
/// order: U nodes before D nodes, each group sorted by `canonical_less`.
struct CrosscutPoset {
  std::shared_ptr<const Poset> base;
  std::vector<ElementSet> nodes;
  std::vector<Side> sides;
  std::shared_ptr<const Poset> order;

  int size() const { return static_cast<int>(nodes.size()); }
  /// Index of the node with the given members and side, if present.
  std::optional<int> find(ElementSet members, Side side) const;
  std::optional<int> find(ElementSet members) const;
};

/// Human-readable node label, e.g. "{0 1 3}" (members by base label).
std::string node_label(const Poset& base, ElementSet node);

/// st(A): every element comparable with all members of a. Throws EmptyInput.
ElementSet st(const Poset& p, ElementSet a);

/// I_X(B): members of x comparable with every member of b. Throws EmptyInput.
ElementSet index_set(const Poset& p, ElementSet x, ElementSet b);

/// Largest |X| accepted by gamma (it enumerates all nonempty subsets of X).
inline constexpr int kGammaCap = 20;

/// Gamma(P, X): connected components of st(A) over all nonempty A of X,
/// deduplicated and ordered by inclusion. Nodes are tagged with `side`.
CrosscutPoset gamma(const Poset& p, ElementSet x, Side side = Side::D);

/// Gamma(P, mxl P).
CrosscutPoset d_poset(const Poset& p);
/// Gamma(P, mnl P) with the order reversed.
CrosscutPoset u_poset(const Poset& p);
/// Union of U(P) and D(P), with C1 <= C2 whenever C1 is a U node, C2 a D
/// node and they meet. Throws NotDisjoint when D(P) and U(P) share a node.
CrosscutPoset c_poset(const Poset& p);

/// The minimum of {C in Gamma(P, X) : b is a subset of C}, computed as the
/// component of st(I_X(b)) that contains b; nothing when no node contains b.
/// Throws NotConnected when b is not connected, EmptyInput when b is empty.
std::optional<ElementSet> min_containing(const Poset& p, ElementSet x, ElementSet b);

/// Same computation without the connectivity check; b must be connected.
std::optional<ElementSet> min_containing_unchecked(const Poset& p, ElementSet x, ElementSet b);

}  // namespace crosscut
