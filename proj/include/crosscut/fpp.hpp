#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crosscut/element_set.hpp"
#include "crosscut/morphisms.hpp"
#include "crosscut/poset.hpp"

namespace crosscut {

/// Why a point is irreducible: its strict down-set has a maximum (Down) or
/// its strict up-set has a minimum (Up).
enum class Irreducibility { Down, Up };

const char* to_string(Irreducibility reason);

/// Irreducibility of x inside the subposet `within` (x must belong to it).
std::optional<Irreducibility> irreducibility(const Poset& p, ElementSet within, Element x);

ElementSet irreducible_points(const Poset& p);

struct DismantlingStep {
  Element removed;  // id in the original poset
  Irreducibility reason;
  Element onto;  // the extremum of the strict down/up set that x retracts onto
};

struct DismantlingTrace {
  std::vector<DismantlingStep> steps;
  ElementSet core_members;  // ids in the original poset
  Poset core;

  /// Dismantlable by irreducibles iff the core is a single point.
  bool dismantlable() const { return core.size() == 1; }
};

/// Repeatedly removes the least-id irreducible point until none is left.
DismantlingTrace dismantle(const Poset& p);

enum class FppMethod { Dismantling, Search, Pipeline };

const char* to_string(FppMethod method);

struct FppVerdict {
  bool has_fpp = false;
  std::optional<OrderMap> witness;  // present iff has_fpp is false
  FppMethod method = FppMethod::Search;
  std::string detail;
};

/// Dismantling first; when the core is not a single point, exhaustive search
/// for a fixed-point-free map of the core (removing irreducible points does
/// not change the answer). A core witness is lifted to p through the
/// retractions. CapExceeded refers to the core size and is only raised when
/// the search is actually needed.
FppVerdict has_fpp(const Poset& p, SearchOptions options = {});

/// n when p is a 2n-crown (n >= 2).
std::optional<int> is_crown(const Poset& p);

/// Every non-bijective order-preserving self-map of the crown p has a fixed
/// point. Throws NotACrown, CapExceeded.
bool crown_nonbijective_fixed_point(const Poset& p, SearchOptions options = {});

struct HoftResult {
  bool applicable = false;
  std::optional<bool> holds;
};

/// Cap on |mnl(P)| for the join enumeration of hoft_check.
inline constexpr int kHoftMinimalCap = 15;

/// Applicable iff every nonempty subset of mnl(p) has a join; in that case
/// `holds` says whether every self-map f admits some x with f(x) >= x.
HoftResult hoft_check(const Poset& p, SearchOptions options = {});

/// Every fixed-point-free self-map f of p satisfies f(level) = level
/// (vacuously true when p has the fixed point property).
bool level_preserved_by_fixed_point_free(const Poset& p, ElementSet level, SearchOptions options = {});

/// The middle-level statement for the two lemma fixtures P1 and P2: every
/// fixed-point-free self-map sends {3,4,5} onto itself. Throws WrongFixture
/// for any other poset.
bool lemma_middle_level(const Poset& p);

/// The crosscut route to the fixed point property: if D(P) (or, failing
/// that, C(P)) has the property and so does every one of its nodes as a
/// subposet, P has it. Falls back to has_fpp otherwise.
FppVerdict pipeline_fpp(const Poset& p, SearchOptions options = {});

}  // namespace crosscut
