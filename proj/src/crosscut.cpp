#include "crosscut/crosscut.hpp"

#include <algorithm>
#include <unordered_set>

#include "crosscut/error.hpp"

namespace crosscut {

char side_letter(Side side) { return side == Side::D ? 'D' : 'U'; }

std::optional<int> CrosscutPoset::find(ElementSet members, Side side) const {
  for (int i = 0; i < size(); ++i) {
    if (nodes[i] == members && sides[i] == side) return i;
  }
  return std::nullopt;
}

std::optional<int> CrosscutPoset::find(ElementSet members) const {
  for (int i = 0; i < size(); ++i) {
    if (nodes[i] == members) return i;
  }
  return std::nullopt;
}

std::string node_label(const Poset& base, ElementSet node) {
  std::string out = "{";
  bool first = true;
  for (Element x : node) {
    if (!first) out += ' ';
    out += base.label(x);
    first = false;
  }
  out += '}';
  return out;
}

ElementSet st(const Poset& p, ElementSet a) {
  if (a.empty()) throw EmptyInput("st of an empty subset");
  p.check_subset(a);
  ElementSet result = p.elements();
  for (Element x : a) result &= p.comparable_set(x);
  return result;
}

ElementSet index_set(const Poset& p, ElementSet x, ElementSet b) {
  if (b.empty()) throw EmptyInput("index set of an empty subset");
  p.check_subset(x);
  p.check_subset(b);
  ElementSet result;
  for (Element candidate : x) {
    if (b.is_subset_of(p.comparable_set(candidate))) result.insert(candidate);
  }
  return result;
}

namespace {

std::shared_ptr<const Poset> inclusion_order(const Poset& base, const std::vector<ElementSet>& nodes,
                                             bool reversed) {
  const int n = static_cast<int>(nodes.size());
  std::vector<std::string> labels;
  std::vector<ElementSet> up(n);
  for (int i = 0; i < n; ++i) {
    labels.push_back(node_label(base, nodes[i]));
    for (int j = 0; j < n; ++j) {
      const bool below = reversed ? nodes[j].is_subset_of(nodes[i]) : nodes[i].is_subset_of(nodes[j]);
      if (below) up[i].insert(j);
    }
  }
  return std::make_shared<const Poset>(Poset::from_up_sets(std::move(labels), std::move(up)));
}

}  // namespace

CrosscutPoset gamma(const Poset& p, ElementSet x, Side side) {
  p.check_subset(x);
  if (x.size() > kGammaCap) throw CapExceeded("gamma", static_cast<std::size_t>(x.size()), kGammaCap);
  const std::vector<Element> generators = x.to_vector();
  const std::size_t subsets = std::size_t{1} << generators.size();

  // st_of[mask] = st of the generators selected by mask; built from the mask
  // without its lowest bit.
  std::vector<ElementSet> st_of(subsets);
  st_of[0] = p.elements();
  std::unordered_set<ElementSet> seen;
  std::vector<ElementSet> nodes;
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    st_of[mask] = st_of[mask & (mask - 1)] & p.comparable_set(generators[low]);
    if (st_of[mask].empty()) continue;
    for (ElementSet part : connected_components(p, st_of[mask])) {
      if (seen.insert(part).second) nodes.push_back(part);
    }
  }
  std::sort(nodes.begin(), nodes.end(), canonical_less);

  CrosscutPoset result;
  result.base = std::make_shared<const Poset>(p);
  result.sides.assign(nodes.size(), side);
  result.order = inclusion_order(p, nodes, false);
  result.nodes = std::move(nodes);
  return result;
}

CrosscutPoset d_poset(const Poset& p) { return gamma(p, maximal_elements(p), Side::D); }

CrosscutPoset u_poset(const Poset& p) {
  CrosscutPoset result = gamma(p, minimal_elements(p), Side::U);
  result.order = inclusion_order(p, result.nodes, true);
  return result;
}

CrosscutPoset c_poset(const Poset& p) {
  const CrosscutPoset d = d_poset(p);
  const CrosscutPoset u = u_poset(p);
  for (ElementSet node : d.nodes) {
    if (u.find(node)) {
      throw NotDisjoint("D(P) and U(P) share the node " + node_label(p, node));
    }
  }
  CrosscutPoset result;
  result.base = d.base;
  result.nodes = u.nodes;
  result.nodes.insert(result.nodes.end(), d.nodes.begin(), d.nodes.end());
  result.sides.assign(u.nodes.size(), Side::U);
  result.sides.insert(result.sides.end(), d.nodes.size(), Side::D);

  const int n = result.size();
  std::vector<std::string> labels;
  std::vector<ElementSet> up(n);
  for (int i = 0; i < n; ++i) {
    labels.push_back(node_label(p, result.nodes[i]));
    for (int j = 0; j < n; ++j) {
      const ElementSet a = result.nodes[i];
      const ElementSet b = result.nodes[j];
      bool below = false;
      if (result.sides[i] == Side::D && result.sides[j] == Side::D) {
        below = a.is_subset_of(b);
      } else if (result.sides[i] == Side::U && result.sides[j] == Side::U) {
        below = b.is_subset_of(a);
      } else if (result.sides[i] == Side::U) {
        below = a.intersects(b);
      }
      if (below) up[i].insert(j);
    }
  }
  // from_up_sets re-checks reflexivity, antisymmetry and transitivity of the mixed order.
  result.order = std::make_shared<const Poset>(Poset::from_up_sets(std::move(labels), std::move(up)));
  return result;
}

std::optional<ElementSet> min_containing_unchecked(const Poset& p, ElementSet x, ElementSet b) {
  ElementSet index;
  for (Element candidate : x) {
    if (b.is_subset_of(p.comparable_set(candidate))) index.insert(candidate);
  }
  if (index.empty()) return std::nullopt;
  ElementSet support = p.elements();
  for (Element a : index) support &= p.comparable_set(a);
  if (!b.is_subset_of(support)) return std::nullopt;
  return component_of(p, support, b.first());
}

std::optional<ElementSet> min_containing(const Poset& p, ElementSet x, ElementSet b) {
  if (b.empty()) throw EmptyInput("min_containing of an empty subset");
  p.check_subset(x);
  p.check_subset(b);
  if (!is_connected(p, b)) throw NotConnected("subset " + node_label(p, b) + " is not connected");
  return min_containing_unchecked(p, x, b);
}

}  // namespace crosscut
