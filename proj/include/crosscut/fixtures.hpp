#pragma once

#include <array>
#include <string>
#include <vector>

#include "crosscut/element_set.hpp"
#include "crosscut/poset.hpp"

namespace crosscut {

/// A named poset of the gallery, with its integer parameters
/// (n and k for Pnk, n for crown).
struct FixtureSpec {
  std::string name;
  std::vector<int> params;
};

/// Names accepted by fixture().
const std::vector<std::string>& fixture_names();

/// Throws BadParams for unknown names or invalid parameters.
Poset fixture(const FixtureSpec& spec);

/// Two minimal elements 0, 1 under three maximal elements 2, 3, 4
/// (0 < 2, 3, 4 and 1 < 3, 4).
Poset ex_easy();
/// 0 < 1 < 3, 4 and 2 < 3, 4: the poset showing the crosscut assignment is
/// not functorial.
Poset ex_nonfunctorial();
/// Three two-element levels, each below both elements of the next.
Poset ex_2();
Poset p3323();
Poset p353_1();
Poset p353_2();
Poset lemma_p1();
Poset lemma_p2();
/// The 12-element poset left after deleting the minimal D nodes and maximal
/// U nodes of C(P353_1); element "a" is irreducible.
Poset q1();
/// q1 without "a".
Poset q2();

/// The 2n-crown on bottoms 1..n and tops n+1..2n, labelled as such; top
/// n+1 covers 1, 2, top n+j covers j-1, j+1 and top 2n covers n-1, n.
Poset crown(int n);

/// The family P^{n,k} (n >= 4, 2 <= k <= n-1). Ids: c_j -> j-1,
/// b_j -> n+j-1, a_i -> 2n+i-1; labels "c1", "b1", "a1", ...
Poset pnk(int n, int k);

Element pnk_a(int n, int i);
Element pnk_b(int n, int j);
Element pnk_c(int n, int j);

/// The nine nodes of D(P^{n,k}) from their closed forms.
struct ExpectedDnk {
  ElementSet below_a1, below_a2, below_a3;
  ElementSet a, b, c, d, e, f;

  std::array<ElementSet, 9> all() const { return {below_a1, below_a2, below_a3, a, b, c, d, e, f}; }
};

ExpectedDnk expected_dnk(int n, int k);

/// The closed-form down-sets of a_1, a_2, a_3 and b_1..b_n as listed for
/// P^{n,k}; fixture() is checked against these.
std::vector<std::pair<Element, ElementSet>> pnk_listed_down_sets(int n, int k);

}  // namespace crosscut
