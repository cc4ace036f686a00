#include "crosscut/fpp.hpp"

#include "crosscut/crosscut.hpp"
#include "crosscut/error.hpp"
#include "crosscut/fixtures.hpp"

namespace crosscut {

const char* to_string(Irreducibility reason) {
  return reason == Irreducibility::Down ? "down-irreducible" : "up-irreducible";
}

const char* to_string(FppMethod method) {
  switch (method) {
    case FppMethod::Dismantling:
      return "dismantling";
    case FppMethod::Search:
      return "search";
    case FppMethod::Pipeline:
      return "pipeline";
  }
  return "?";
}

std::optional<Irreducibility> irreducibility(const Poset& p, ElementSet within, Element x) {
  const ElementSet below = p.strict_down_set(x) & within;
  for (Element m : below) {
    if (below.is_subset_of(p.down_set(m))) return Irreducibility::Down;
  }
  const ElementSet above = p.strict_up_set(x) & within;
  for (Element m : above) {
    if (above.is_subset_of(p.up_set(m))) return Irreducibility::Up;
  }
  return std::nullopt;
}

ElementSet irreducible_points(const Poset& p) {
  ElementSet result;
  for (Element x = 0; x < p.size(); ++x) {
    if (irreducibility(p, p.elements(), x)) result.insert(x);
  }
  return result;
}

namespace {

// The maximum of the strict down-set (Down) or the minimum of the strict
// up-set (Up) of x within `within`.
Element retraction_target(const Poset& p, ElementSet within, Element x, Irreducibility reason) {
  const ElementSet side = (reason == Irreducibility::Down ? p.strict_down_set(x) : p.strict_up_set(x)) & within;
  for (Element m : side) {
    if (side.is_subset_of(reason == Irreducibility::Down ? p.down_set(m) : p.up_set(m))) return m;
  }
  throw PreconditionFailed("point is not irreducible");
}

// Extends a fixed-point-free map of the core to p through the retractions of
// the trace. Removed points land in the core, so none of them is fixed.
OrderMap lift_from_core(const Poset& p, const DismantlingTrace& trace, const OrderMap& core_map) {
  std::vector<Element> onto(p.size(), -1);
  for (const auto& step : trace.steps) onto[step.removed] = step.onto;
  const std::vector<Element> core_ids = trace.core_members.to_vector();
  std::vector<Element> core_index(p.size(), -1);
  for (std::size_t i = 0; i < core_ids.size(); ++i) core_index[core_ids[i]] = static_cast<Element>(i);
  std::vector<Element> values(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    Element y = x;
    while (onto[y] != -1) y = onto[y];
    values[x] = core_ids[core_map(core_index[y])];
  }
  return make_endomap(p, std::move(values));
}

}  // namespace

DismantlingTrace dismantle(const Poset& p) {
  DismantlingTrace trace;
  ElementSet remaining = p.elements();
  bool removed = true;
  while (removed && remaining.size() > 1) {
    removed = false;
    for (Element x : remaining) {
      if (auto reason = irreducibility(p, remaining, x)) {
        trace.steps.push_back({x, *reason, retraction_target(p, remaining, x, *reason)});
        remaining.erase(x);
        removed = true;
        break;
      }
    }
  }
  trace.core_members = remaining;
  trace.core = induced_subposet(p, remaining);
  return trace;
}

FppVerdict has_fpp(const Poset& p, SearchOptions options) {
  FppVerdict verdict;
  const DismantlingTrace trace = dismantle(p);
  if (trace.dismantlable()) {
    verdict.has_fpp = true;
    verdict.method = FppMethod::Dismantling;
    return verdict;
  }
  verdict.method = FppMethod::Search;
  if (trace.steps.empty()) {
    verdict.witness = find_fixed_point_free(p, options);
  } else if (auto core_map = find_fixed_point_free(trace.core, options)) {
    verdict.witness = lift_from_core(p, trace, *core_map);
  }
  verdict.has_fpp = !verdict.witness.has_value();
  if (verdict.witness && !fixed_points(*verdict.witness).empty()) {
    throw PreconditionFailed("search returned a map with a fixed point");
  }
  return verdict;
}

std::optional<int> is_crown(const Poset& p) {
  const int size = p.size();
  if (size < 4 || size % 2 != 0) return std::nullopt;
  const ElementSet tops = maximal_elements(p);
  const ElementSet bottoms = minimal_elements(p);
  const int n = size / 2;
  if (tops.size() != n || bottoms.size() != n || tops.intersects(bottoms)) return std::nullopt;
  for (Element x = 0; x < size; ++x) {
    if (p.comparable_set(x).size() != 3) return std::nullopt;  // itself plus two neighbours
  }
  if (!is_connected(p)) return std::nullopt;
  return n;
}

bool crown_nonbijective_fixed_point(const Poset& p, SearchOptions options) {
  if (!is_crown(p)) throw NotACrown("poset is not a 2n-crown");
  if (p.size() > options.max_elements) {
    throw CapExceeded("crown_nonbijective_fixed_point", static_cast<std::size_t>(p.size()),
                      static_cast<std::size_t>(options.max_elements));
  }
  std::vector<ElementSet> allowed(p.size());
  for (Element x = 0; x < p.size(); ++x) allowed[x] = p.elements() - ElementSet::singleton(x);
  bool every_counterexample_bijective = true;
  MonotoneMapSearch(p, p, std::move(allowed)).for_each([&](std::span<const Element> values) {
    ElementSet image;
    for (Element v : values) image.insert(v);
    if (image.size() != p.size()) {
      every_counterexample_bijective = false;
      return false;
    }
    return true;
  });
  return every_counterexample_bijective;
}

HoftResult hoft_check(const Poset& p, SearchOptions options) {
  const ElementSet bottoms = minimal_elements(p);
  if (bottoms.size() > kHoftMinimalCap) {
    throw CapExceeded("hoft_check minimal elements", static_cast<std::size_t>(bottoms.size()), kHoftMinimalCap);
  }
  if (p.size() > options.max_elements) {
    throw CapExceeded("hoft_check", static_cast<std::size_t>(p.size()),
                      static_cast<std::size_t>(options.max_elements));
  }
  HoftResult result;
  if (p.empty()) return result;
  const std::vector<Element> members = bottoms.to_vector();
  const std::size_t subsets = std::size_t{1} << members.size();
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    ElementSet a;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if ((mask >> i) & 1U) a.insert(members[i]);
    }
    if (!has_join(p, a)) return result;
  }
  result.applicable = true;
  // Look for a map with f(x) not above x everywhere.
  std::vector<ElementSet> allowed(p.size());
  for (Element x = 0; x < p.size(); ++x) allowed[x] = p.elements() - p.up_set(x);
  result.holds = !MonotoneMapSearch(p, p, std::move(allowed)).first().has_value();
  return result;
}

bool level_preserved_by_fixed_point_free(const Poset& p, ElementSet level, SearchOptions options) {
  if (p.size() > options.max_elements) {
    throw CapExceeded("level check", static_cast<std::size_t>(p.size()),
                      static_cast<std::size_t>(options.max_elements));
  }
  p.check_subset(level);
  std::vector<ElementSet> allowed(p.size());
  for (Element x = 0; x < p.size(); ++x) allowed[x] = p.elements() - ElementSet::singleton(x);
  bool preserved = true;
  MonotoneMapSearch(p, p, std::move(allowed)).for_each([&](std::span<const Element> values) {
    ElementSet image;
    for (Element x : level) image.insert(values[x]);
    preserved = image == level;
    return preserved;
  });
  return preserved;
}

bool lemma_middle_level(const Poset& p) {
  if (!(p == lemma_p1()) && !(p == lemma_p2())) {
    throw WrongFixture("the middle-level lemma applies to the fixtures P1 and P2 only");
  }
  return level_preserved_by_fixed_point_free(p, ElementSet{3, 4, 5});
}

namespace {

// True when the crosscut poset and every node (as a subposet of the base) have the property.
bool crosscut_route_succeeds(const Poset& p, const CrosscutPoset& cc, SearchOptions options) {
  if (!has_fpp(*cc.order, options).has_fpp) return false;
  for (ElementSet node : cc.nodes) {
    if (!has_fpp(induced_subposet(p, node), options).has_fpp) return false;
  }
  return true;
}

}  // namespace

FppVerdict pipeline_fpp(const Poset& p, SearchOptions options) {
  if (!p.empty()) {
    try {
      if (crosscut_route_succeeds(p, d_poset(p), options)) {
        return FppVerdict{true, std::nullopt, FppMethod::Pipeline, "D"};
      }
    } catch (const CapExceeded&) {
      // Inconclusive; try the next route.
    }
    try {
      if (crosscut_route_succeeds(p, c_poset(p), options)) {
        return FppVerdict{true, std::nullopt, FppMethod::Pipeline, "C"};
      }
    } catch (const NotDisjoint&) {
      // C(P) undefined; only the D route applies.
    } catch (const CapExceeded&) {
      // Inconclusive; fall back.
    }
  }
  FppVerdict fallback = has_fpp(p, options);
  fallback.detail = "fallback";
  return fallback;
}

}  // namespace crosscut
