#include "crosscut/theorem_checks.hpp"

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "crosscut/crosscut.hpp"
#include "crosscut/error.hpp"
#include "crosscut/fpp.hpp"
#include "crosscut/io.hpp"
#include "crosscut/morphisms.hpp"
#include "crosscut/random.hpp"

namespace crosscut {

namespace {

class Suite {
 public:
  Suite(std::string id, std::string name) {
    result_.id = std::move(id);
    result_.name = std::move(name);
  }

  // Records one case; `describe` is only evaluated for the first failure.
  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.failure = describe();
    }
  }

  SuiteResult result() const { return result_; }

 private:
  SuiteResult result_;
};

std::string describe_poset(const Poset& p) {
  std::string text = emit_poset(p);
  for (char& ch : text) {
    if (ch == '\n') ch = ';';
  }
  return text;
}

std::string describe_map(std::span<const Element> values) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
  out << ']';
  return out.str();
}

std::vector<std::vector<Element>> sample_endomaps(const Poset& p, const CheckOptions& options, Rng& rng) {
  std::vector<std::vector<Element>> maps;
  const bool complete = MonotoneMapSearch(p, p).for_each([&](std::span<const Element> values) {
    maps.emplace_back(values.begin(), values.end());
    return static_cast<int>(maps.size()) < options.exhaustive_maps;
  });
  if (!complete) {
    for (int i = 0; i < options.random_maps; ++i) maps.push_back(random_endomap(p, rng));
  }
  return maps;
}

bool has_fixed_point_in(std::span<const Element> values, ElementSet where) {
  for (Element x : where) {
    if (values[x] == x) return true;
  }
  return false;
}

bool has_fixed_point(std::span<const Element> values) {
  for (std::size_t x = 0; x < values.size(); ++x) {
    if (values[x] == static_cast<Element>(x)) return true;
  }
  return false;
}

bool search_fpp(const Poset& p) { return !find_fixed_point_free(p, SearchOptions{Poset::kMaxElements}).has_value(); }

// Brute-force minimum (by inclusion) of the nodes containing b.
std::optional<ElementSet> brute_min_containing(const CrosscutPoset& g, ElementSet b) {
  std::vector<ElementSet> containing;
  for (ElementSet node : g.nodes) {
    if (b.is_subset_of(node)) containing.push_back(node);
  }
  for (ElementSet candidate : containing) {
    bool least = true;
    for (ElementSet other : containing) least = least && candidate.is_subset_of(other);
    if (least) return candidate;
  }
  return std::nullopt;
}

struct Suites {
  Suite a{"a", "Gamma nodes are components of st(I_X(B))"};
  Suite b{"b", "min_containing equals brute-force minimum"};
  Suite c{"c", "duality D(P^op)=U(P)^op, C(P^op)=C(P)^op"};
  Suite d{"d", "induced maps order-preserving and dominating"};
  Suite e{"e", "fixed point of f => fixed point of D(f)"};
  Suite f{"f", "fixed node with FPP => fixed point of f in it"};
  Suite g{"g", "dismantlable => FPP"};
  Suite h{"h", "irreducible removal preserves FPP both ways"};
  Suite i{"i", "Hoft-Hoft: joins of minimal subsets => f(x) >= x"};
  Suite j{"j", "C(P) order validity and D/U disjointness"};
  Suite k{"k", "pipeline_fpp agrees with has_fpp"};
  Suite l{"l", "Abian-Brown iteration reaches a fixed point"};
};

void check_gamma(Suites& s, const Poset& p, ElementSet x, const std::string& what) {
  const CrosscutPoset g = gamma(p, x);
  for (ElementSet node : g.nodes) {
    s.a.check(
        [&] {
          if (node.empty() || !is_connected(p, node)) return false;
          const ElementSet index = index_set(p, x, node);
          if (index.empty()) return false;
          for (ElementSet part : connected_components(p, st(p, index))) {
            if (part == node) return true;
          }
          return false;
        }(),
        [&] { return what + " node " + node_label(p, node) + " in " + describe_poset(p); });
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p.size()); ++mask) {
    const ElementSet b(mask);
    if (!is_connected(p, b)) continue;
    const auto fast = min_containing(p, x, b);
    const auto slow = brute_min_containing(g, b);
    s.b.check(fast == slow, [&] { return what + " b=" + node_label(p, b) + " in " + describe_poset(p); });
  }
}

void check_duality(Suites& s, const Poset& p) {
  const Poset op = opposite(p);
  const CrosscutPoset d_op = d_poset(op);
  const CrosscutPoset u = u_poset(p);
  s.c.check(d_op.nodes == u.nodes && *d_op.order == opposite(*u.order),
            [&] { return "D(P^op) vs U(P)^op in " + describe_poset(p); });

  std::optional<CrosscutPoset> c;
  std::optional<CrosscutPoset> c_op;
  try {
    c = c_poset(p);
  } catch (const NotDisjoint&) {
  }
  try {
    c_op = c_poset(op);
  } catch (const NotDisjoint&) {
  }
  s.c.check(c.has_value() == c_op.has_value(), [&] { return "C(P) defined iff C(P^op) defined in " + describe_poset(p); });
  if (!c || !c_op) return;
  bool dual = c->size() == c_op->size();
  for (int i = 0; dual && i < c->size(); ++i) {
    const Side flipped = c->sides[i] == Side::D ? Side::U : Side::D;
    const auto image_i = c_op->find(c->nodes[i], flipped);
    dual = image_i.has_value();
    for (int j = 0; dual && j < c->size(); ++j) {
      const auto image_j = c_op->find(c->nodes[j], c->sides[j] == Side::D ? Side::U : Side::D);
      dual = image_j && c->order->leq(i, j) == c_op->order->leq(*image_j, *image_i);
    }
  }
  s.c.check(dual, [&] { return "C(P^op) vs C(P)^op in " + describe_poset(p); });
}

void check_disjointness(Suites& s, const Poset& p) {
  const CrosscutPoset d = d_poset(p);
  const CrosscutPoset u = u_poset(p);
  bool meet = false;
  for (ElementSet node : d.nodes) meet = meet || u.find(node).has_value();
  if (is_connected(p)) {
    const bool bounded = maximal_elements(p).size() == 1 && minimal_elements(p).size() == 1;
    const bool both_whole = d.size() == 1 && u.size() == 1 && d.nodes[0] == p.elements() && u.nodes[0] == p.elements();
    s.j.check(meet == bounded && bounded == both_whole,
              [&] { return "disjointness characterisation fails in " + describe_poset(p); });
  }
  if (!meet) {
    bool valid = true;
    try {
      c_poset(p);
    } catch (const InvalidOrder&) {
      valid = false;
    }
    s.j.check(valid, [&] { return "C(P) is not a partial order in " + describe_poset(p); });
  }
}

// Checks (d) for one map and returns the node table (empty if not monotone).
std::vector<Element> check_induced(Suites& s, const Poset& p, const InducedMapper& mapper,
                                   std::span<const Element> values, const char* tag) {
  std::vector<Element> table;
  bool monotone = true;
  try {
    table = mapper.apply(values);
    OrderMap(mapper.source_crosscut().order, mapper.target_crosscut().order, table);
  } catch (const Error&) {
    monotone = false;
  }
  s.d.check(monotone, [&] {
    return std::string(tag) + "(f) not order-preserving, f=" + describe_map(values) + " in " + describe_poset(p);
  });
  if (!monotone) return {};
  const CrosscutPoset& cc = mapper.source_crosscut();
  bool dominated = true;
  for (int node = 0; node < cc.size(); ++node) {
    ElementSet image;
    for (Element x : cc.nodes[node]) image.insert(values[x]);
    dominated = dominated && image.is_subset_of(mapper.target_crosscut().nodes[table[node]]);
  }
  s.d.check(dominated, [&] {
    return std::string(tag) + "(f)(C) misses f(C), f=" + describe_map(values) + " in " + describe_poset(p);
  });
  return table;
}

// (d) for maps between two different posets.
void check_cross_maps(Suites& s, const Poset& p, const Poset& q, int samples, Rng& rng) {
  for (Construction kind : {Construction::D, Construction::U, Construction::C}) {
    std::optional<InducedMapper> mapper;
    try {
      mapper.emplace(p, q, kind);
    } catch (const NotDisjoint&) {
      continue;
    }
    const char* tag = kind == Construction::D ? "D" : kind == Construction::U ? "U" : "C";
    for (int i = 0; i < samples; ++i) check_induced(s, p, *mapper, random_monotone_map(p, q, rng), tag);
  }
}

void check_maps(Suites& s, const Poset& p, const CheckOptions& options, Rng& rng) {
  const auto maps = sample_endomaps(p, options, rng);
  const InducedMapper d_mapper(p, Construction::D);
  const InducedMapper u_mapper(p, Construction::U);
  std::optional<InducedMapper> c_mapper;
  try {
    c_mapper.emplace(p, Construction::C);
  } catch (const NotDisjoint&) {
  }

  std::unordered_map<ElementSet, bool> node_fpp;
  const auto node_has_fpp = [&](ElementSet node) {
    auto it = node_fpp.find(node);
    if (it == node_fpp.end()) it = node_fpp.emplace(node, has_fpp(induced_subposet(p, node)).has_fpp).first;
    return it->second;
  };

  for (const auto& values : maps) {
    const auto d_table = check_induced(s, p, d_mapper, values, "D");
    check_induced(s, p, u_mapper, values, "U");
    std::vector<Element> c_table;
    if (c_mapper) c_table = check_induced(s, p, *c_mapper, values, "C");

    if (d_table.empty()) continue;
    if (has_fixed_point(values)) {
      s.e.check(has_fixed_point(d_table), [&] { return "D(f) fixed-point-free, f=" + describe_map(values) + " in " + describe_poset(p); });
    }
    const auto check_fixed_nodes = [&](const CrosscutPoset& cc, const std::vector<Element>& table, const char* tag) {
      for (int node = 0; node < cc.size(); ++node) {
        if (table[node] != node || !node_has_fpp(cc.nodes[node])) continue;
        s.f.check(has_fixed_point_in(values, cc.nodes[node]), [&] {
          return std::string(tag) + " node " + node_label(p, cc.nodes[node]) + " f=" + describe_map(values) + " in " +
                 describe_poset(p);
        });
      }
    };
    check_fixed_nodes(d_mapper.source_crosscut(), d_table, "D");
    if (c_mapper && !c_table.empty()) check_fixed_nodes(c_mapper->source_crosscut(), c_table, "C");

    const OrderMap f = make_endomap(p, values);
    for (Element x0 = 0; x0 < p.size(); ++x0) {
      if (!p.leq(x0, values[x0])) continue;
      const Element fixed = abian_brown(f, x0);
      s.l.check(values[fixed] == fixed && p.leq(x0, fixed), [&] { return "Abian-Brown from " + p.label(x0) + " f=" + describe_map(values); });
    }
  }
}

void check_fpp(Suites& s, const Poset& p) {
  const bool fpp = search_fpp(p);
  if (dismantle(p).dismantlable()) {
    s.g.check(fpp, [&] { return "dismantlable but fixed-point-free map exists in " + describe_poset(p); });
  }
  for (Element x : irreducible_points(p)) {
    if (p.size() < 2) break;
    const bool after = search_fpp(remove_element(p, x));
    s.h.check(after == fpp, [&] { return "removing " + p.label(x) + " changes FPP in " + describe_poset(p); });
  }
  const HoftResult hoft = hoft_check(p, SearchOptions{Poset::kMaxElements});
  if (hoft.applicable) {
    s.i.check(hoft.holds.value_or(false), [&] { return "Hoft-Hoft conclusion fails in " + describe_poset(p); });
  }
  const FppVerdict pipeline = pipeline_fpp(p, SearchOptions{Poset::kMaxElements});
  s.k.check(pipeline.has_fpp == fpp, [&] { return "pipeline verdict differs in " + describe_poset(p); });
}

}  // namespace

std::vector<SuiteResult> run_theorem_checks(const CheckOptions& options) {
  if (options.seeds < 0 || options.max_size < 1 || options.max_size > kRandomPosetCap) {
    throw BadParams("check-theorems needs seeds >= 0 and 1 <= max-size <= 25");
  }
  Suites s;
  for (int seed = 0; seed < options.seeds; ++seed) {
    Rng rng(options.base_seed + static_cast<std::uint64_t>(seed) * 0x9E3779B97F4A7C15ULL);
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(options.max_size));
    const double density = 0.15 + 0.7 * unit_interval(rng);
    const Poset p = random_poset(n, density, rng());

    check_gamma(s, p, maximal_elements(p), "X=mxl");
    check_gamma(s, p, minimal_elements(p), "X=mnl");
    ElementSet x(rng() & p.elements().bits());
    if (x.empty()) x.insert(0);
    check_gamma(s, p, x, "X=" + node_label(p, x));

    check_duality(s, p);
    check_disjointness(s, p);
    check_maps(s, p, options, rng);
    check_fpp(s, p);

    const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(options.max_size));
    const Poset q = random_poset(m, 0.15 + 0.7 * unit_interval(rng), rng());
    check_cross_maps(s, p, q, options.random_maps, rng);
  }
  return {s.a.result(), s.b.result(), s.c.result(), s.d.result(), s.e.result(), s.f.result(),
          s.g.result(), s.h.result(), s.i.result(), s.j.result(), s.k.result(), s.l.result()};
}

}  // namespace crosscut
