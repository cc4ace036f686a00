#include "crosscut/random.hpp"

#include <algorithm>
#include <functional>

#include "crosscut/error.hpp"

namespace crosscut {

double unit_interval(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Poset random_poset(int n, double density, std::uint64_t seed) {
  if (n < 1 || n > kRandomPosetCap) throw BadParams("random_poset needs 1 <= n <= 25");
  if (!(density >= 0.0 && density <= 1.0)) throw BadParams("random_poset needs 0 <= density <= 1");
  Rng rng(seed);
  std::vector<Cover> edges;
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) {
      if (unit_interval(rng) < density) edges.emplace_back(i, j);
    }
  }
  return from_covers(numeric_labels(n), edges);
}

std::vector<Element> random_monotone_map(const Poset& source, const Poset& target, Rng& rng) {
  const int n = source.size();
  std::vector<Element> values(n, -1);
  std::function<bool(int, std::vector<ElementSet>)> assign = [&](int depth, std::vector<ElementSet> domains) {
    if (depth == n) return true;
    std::vector<Element> candidates = domains[depth].to_vector();
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (Element v : candidates) {
      std::vector<ElementSet> next = domains;
      bool viable = true;
      for (Element y = depth + 1; y < n && viable; ++y) {
        if (source.leq(depth, y)) next[y] &= target.up_set(v);
        if (source.leq(y, depth)) next[y] &= target.down_set(v);
        viable = !next[y].empty();
      }
      values[depth] = v;
      if (viable && assign(depth + 1, std::move(next))) return true;
    }
    return false;
  };
  assign(0, std::vector<ElementSet>(n, target.elements()));
  return values;
}

}  // namespace crosscut
