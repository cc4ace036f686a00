#include "crosscut/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

#include "crosscut/error.hpp"

namespace crosscut {

bool canonical_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Same cardinality: the set whose least differing member is smaller comes first.
  const ElementSet diff(a.bits() ^ b.bits());
  if (diff.empty()) return false;
  return a.contains(diff.first());
}

Poset Poset::from_up_sets(std::vector<std::string> labels, std::vector<ElementSet> up_sets) {
  const int n = static_cast<int>(up_sets.size());
  if (n > kMaxElements) throw CapExceeded("poset", static_cast<std::size_t>(n), kMaxElements);
  if (labels.size() != up_sets.size()) throw InvalidOrder("label count does not match element count");
  const ElementSet all = ElementSet::first_n(n);
  for (Element x = 0; x < n; ++x) {
    if (!up_sets[x].is_subset_of(all)) throw IndexError("relation mentions an element out of range");
    if (!up_sets[x].contains(x)) throw InvalidOrder("relation is not reflexive at " + labels[x]);
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y : up_sets[x]) {
      if (y != x && up_sets[y].contains(x)) {
        throw CycleError("antisymmetry violated between " + labels[x] + " and " + labels[y]);
      }
      if (!up_sets[y].is_subset_of(up_sets[x])) {
        throw InvalidOrder("relation is not transitive through " + labels[y]);
      }
    }
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(up_sets);
  p.down_.assign(n, ElementSet{});
  for (Element x = 0; x < n; ++x) {
    for (Element y : p.up_[x]) p.down_[y].insert(x);
  }
  return p;
}

ElementSet Poset::up_set(Element x) const {
  check_element(x);
  return up_[x];
}

ElementSet Poset::down_set(Element x) const {
  check_element(x);
  return down_[x];
}

ElementSet Poset::strict_up_set(Element x) const {
  check_element(x);
  return up_[x] - ElementSet::singleton(x);
}

ElementSet Poset::strict_down_set(Element x) const {
  check_element(x);
  return down_[x] - ElementSet::singleton(x);
}

ElementSet Poset::comparable_set(Element x) const {
  check_element(x);
  return up_[x] | down_[x];
}

std::optional<Element> Poset::find_label(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

void Poset::check_element(Element x) const {
  if (x < 0 || x >= size()) {
    throw IndexError("element " + std::to_string(x) + " out of range for poset of size " +
                     std::to_string(size()));
  }
}

void Poset::check_subset(ElementSet s) const {
  if (!s.is_subset_of(elements())) throw IndexError("subset is not contained in the poset");
}

std::vector<std::string> numeric_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

Poset from_covers(std::vector<std::string> labels, const std::vector<Cover>& covers) {
  const int n = static_cast<int>(labels.size());
  if (n > Poset::kMaxElements) throw CapExceeded("poset", static_cast<std::size_t>(n), Poset::kMaxElements);
  std::vector<ElementSet> up(n);
  for (Element x = 0; x < n; ++x) up[x].insert(x);
  for (auto [x, y] : covers) {
    if (x < 0 || x >= n || y < 0 || y >= n) {
      throw IndexError("cover (" + std::to_string(x) + ", " + std::to_string(y) + ") out of range");
    }
    if (x == y) throw CycleError("element " + labels[x] + " cannot cover itself");
    up[x].insert(y);
  }
  // Warshall closure on bit rows.
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (up[i].contains(k)) up[i] |= up[k];
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y : up[x]) {
      if (y != x && up[y].contains(x)) {
        throw CycleError("cover relation has a cycle through " + labels[x] + " and " + labels[y]);
      }
    }
  }
  return Poset::from_up_sets(std::move(labels), std::move(up));
}

std::vector<Cover> hasse_covers(const Poset& p) {
  std::vector<Cover> covers;
  for (Element x = 0; x < p.size(); ++x) {
    const ElementSet above = p.strict_up_set(x);
    for (Element y : minimal_elements(p, above)) covers.emplace_back(x, y);
  }
  return covers;
}

ElementSet maximal_elements(const Poset& p, ElementSet s) {
  ElementSet result;
  for (Element x : s) {
    if (!p.strict_up_set(x).intersects(s)) result.insert(x);
  }
  return result;
}

ElementSet minimal_elements(const Poset& p, ElementSet s) {
  ElementSet result;
  for (Element x : s) {
    if (!p.strict_down_set(x).intersects(s)) result.insert(x);
  }
  return result;
}

ElementSet maximal_elements(const Poset& p) { return maximal_elements(p, p.elements()); }
ElementSet minimal_elements(const Poset& p) { return minimal_elements(p, p.elements()); }

ElementSet component_of(const Poset& p, ElementSet s, Element x) {
  ElementSet seen = ElementSet::singleton(x);
  ElementSet frontier = seen;
  while (!frontier.empty()) {
    ElementSet next;
    for (Element y : frontier) next |= p.comparable_set(y) & s;
    frontier = next - seen;
    seen |= next;
  }
  return seen;
}

std::vector<ElementSet> connected_components(const Poset& p, ElementSet s) {
  p.check_subset(s);
  std::vector<ElementSet> parts;
  ElementSet rest = s;
  while (!rest.empty()) {
    ElementSet part = component_of(p, s, rest.first());
    parts.push_back(part);
    rest -= part;
  }
  return parts;
}

bool is_connected(const Poset& p, ElementSet s) {
  if (s.empty()) return false;
  return component_of(p, s, s.first()) == s;
}

bool is_connected(const Poset& p) { return is_connected(p, p.elements()); }

bool is_down_set(const Poset& p, ElementSet s) {
  for (Element x : s) {
    if (!p.down_set(x).is_subset_of(s)) return false;
  }
  return true;
}

bool is_up_set(const Poset& p, ElementSet s) {
  for (Element x : s) {
    if (!p.up_set(x).is_subset_of(s)) return false;
  }
  return true;
}

Poset opposite(const Poset& p) {
  std::vector<ElementSet> up(p.size());
  for (Element x = 0; x < p.size(); ++x) up[x] = p.down_set(x);
  return Poset::from_up_sets(p.labels(), std::move(up));
}

Poset induced_subposet(const Poset& p, ElementSet s) {
  p.check_subset(s);
  const std::vector<Element> members = s.to_vector();
  std::vector<std::string> labels;
  std::vector<ElementSet> up(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    labels.push_back(p.label(members[i]));
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (p.leq(members[i], members[j])) up[i].insert(static_cast<Element>(j));
    }
  }
  return Poset::from_up_sets(std::move(labels), std::move(up));
}

Poset remove_element(const Poset& p, Element x) {
  p.check_element(x);
  return induced_subposet(p, p.elements() - ElementSet::singleton(x));
}

bool is_cutset(const Poset& p, ElementSet x) {
  if (p.size() > kCutsetCap) throw CapExceeded("is_cutset", static_cast<std::size_t>(p.size()), kCutsetCap);
  p.check_subset(x);
  // A maximal chain is a saturated chain from a minimal to a maximal element.
  // avoids[v]: some saturated chain from v up to a maximal element misses x.
  const ElementSet tops = maximal_elements(p);
  std::vector<int> memo(p.size(), -1);
  std::function<bool(Element)> avoids = [&](Element v) -> bool {
    if (x.contains(v)) return false;
    if (memo[v] >= 0) return memo[v] == 1;
    bool ok = tops.contains(v);
    if (!ok) {
      for (Element u : minimal_elements(p, p.strict_up_set(v))) {
        if (avoids(u)) {
          ok = true;
          break;
        }
      }
    }
    memo[v] = ok ? 1 : 0;
    return ok;
  };
  for (Element m : minimal_elements(p)) {
    if (avoids(m)) return false;
  }
  return true;
}

std::optional<Element> has_join(const Poset& p, ElementSet s) {
  if (s.empty()) throw EmptyInput("join of an empty subset");
  p.check_subset(s);
  ElementSet upper = p.elements();
  for (Element x : s) upper &= p.up_set(x);
  for (Element u : upper) {
    if (upper.is_subset_of(p.up_set(u))) return u;
  }
  return std::nullopt;
}

std::vector<int> heights(const Poset& p) {
  std::vector<Element> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return p.down_set(a).size() < p.down_set(b).size();
  });
  std::vector<int> h(p.size(), 0);
  for (Element x : order) {
    for (Element y : p.strict_down_set(x)) h[x] = std::max(h[x], h[y] + 1);
  }
  return h;
}

bool is_isomorphism(const Poset& p, const Poset& q, const std::vector<Element>& bijection) {
  if (p.size() != q.size() || static_cast<int>(bijection.size()) != p.size()) return false;
  ElementSet image;
  for (Element v : bijection) {
    if (v < 0 || v >= q.size() || image.contains(v)) return false;
    image.insert(v);
  }
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = 0; y < p.size(); ++y) {
      if (p.leq(x, y) != q.leq(bijection[x], bijection[y])) return false;
    }
  }
  return true;
}

namespace {

using Signature = std::tuple<int, int, int, int, int>;

std::vector<Signature> signatures(const Poset& p) {
  const std::vector<int> h = heights(p);
  const std::vector<int> d = heights(opposite(p));
  std::vector<Signature> sig(p.size());
  for (Element x = 0; x < p.size(); ++x) {
    sig[x] = {p.strict_down_set(x).size(), p.strict_up_set(x).size(),
              minimal_elements(p, p.strict_up_set(x)).size(), h[x], d[x]};
  }
  return sig;
}

}  // namespace

std::optional<std::vector<Element>> are_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return std::nullopt;
  const int n = p.size();
  const auto sp = signatures(p);
  const auto sq = signatures(q);
  {
    auto a = sp;
    auto b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // Assign the most constrained elements (rarest signature) first.
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    auto count = [&](Element x) { return std::count(sp.begin(), sp.end(), sp[x]); };
    return count(a) < count(b);
  });

  std::vector<Element> image(n, -1);
  ElementSet used;
  std::function<bool(int)> extend = [&](int depth) -> bool {
    if (depth == n) return true;
    const Element x = order[depth];
    for (Element y = 0; y < n; ++y) {
      if (used.contains(y) || sq[y] != sp[x]) continue;
      bool consistent = true;
      for (int k = 0; k < depth && consistent; ++k) {
        const Element z = order[k];
        consistent = p.leq(x, z) == q.leq(y, image[z]) && p.leq(z, x) == q.leq(image[z], y);
      }
      if (!consistent) continue;
      image[x] = y;
      used.insert(y);
      if (extend(depth + 1)) return true;
      used.erase(y);
      image[x] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

}  // namespace crosscut
