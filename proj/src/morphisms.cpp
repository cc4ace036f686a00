#include "crosscut/morphisms.hpp"

#include "crosscut/error.hpp"

namespace crosscut {

OrderMap::OrderMap(std::shared_ptr<const Poset> source, std::shared_ptr<const Poset> target,
                   std::vector<Element> values)
    : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != source_->size()) {
    throw IndexError("map table has " + std::to_string(values_.size()) + " entries for a source of size " +
                     std::to_string(source_->size()));
  }
  for (Element v : values_) target_->check_element(v);
  for (Element x = 0; x < source_->size(); ++x) {
    for (Element y : source_->strict_up_set(x)) {
      if (!target_->leq(values_[x], values_[y])) throw NotMonotone(x, y);
    }
  }
}

bool OrderMap::is_endomap() const { return source_ == target_ || *source_ == *target_; }

ElementSet OrderMap::image(ElementSet s) const {
  ElementSet result;
  for (Element x : s) result.insert(values_[x]);
  return result;
}

bool OrderMap::operator==(const OrderMap& other) const {
  return values_ == other.values_ && *source_ == *other.source_ && *target_ == *other.target_;
}

OrderMap make_map(const Poset& source, const Poset& target, std::vector<Element> values) {
  return OrderMap(std::make_shared<const Poset>(source), std::make_shared<const Poset>(target), std::move(values));
}

OrderMap make_endomap(const Poset& p, std::vector<Element> values) {
  auto shared = std::make_shared<const Poset>(p);
  return OrderMap(shared, shared, std::move(values));
}

OrderMap identity_map(const Poset& p) {
  std::vector<Element> values(p.size());
  for (Element x = 0; x < p.size(); ++x) values[x] = x;
  return make_endomap(p, std::move(values));
}

OrderMap constant_map(const Poset& source, const Poset& target, Element value) {
  return make_map(source, target, std::vector<Element>(source.size(), value));
}

OrderMap compose(const OrderMap& f, const OrderMap& g) {
  if (!(g.target() == f.source())) throw Mismatch("cannot compose: target of g is not the source of f");
  std::vector<Element> values(g.source().size());
  for (Element x = 0; x < g.source().size(); ++x) values[x] = f(g(x));
  return OrderMap(g.source_ptr(), f.target_ptr(), std::move(values));
}

ElementSet fixed_points(const OrderMap& f) {
  if (!f.is_endomap()) throw NotEndomap("fixed points need a self-map");
  ElementSet result;
  for (Element x = 0; x < f.source().size(); ++x) {
    if (f(x) == x) result.insert(x);
  }
  return result;
}

OrderMap opposite_map(const OrderMap& f) {
  auto source = std::make_shared<const Poset>(opposite(f.source()));
  auto target = f.is_endomap() ? source : std::make_shared<const Poset>(opposite(f.target()));
  return OrderMap(source, target, f.values());
}

MonotoneMapSearch::MonotoneMapSearch(const Poset& source, const Poset& target)
    : MonotoneMapSearch(source, target, std::vector<ElementSet>(source.size(), target.elements())) {}

MonotoneMapSearch::MonotoneMapSearch(const Poset& source, const Poset& target, std::vector<ElementSet> allowed)
    : source_(source), target_(target), allowed_(std::move(allowed)) {
  if (static_cast<int>(allowed_.size()) != source_.size()) {
    throw IndexError("one candidate set per source element is required");
  }
  for (ElementSet& a : allowed_) a &= target_.elements();
  const int n = source_.size();
  later_above_.resize(n);
  later_below_.resize(n);
  for (Element x = 0; x < n; ++x) {
    const ElementSet later = source_.elements() - ElementSet::first_n(x + 1);
    later_above_[x] = source_.up_set(x) & later;
    later_below_[x] = source_.down_set(x) & later;
  }
}

std::uint64_t MonotoneMapSearch::count() const {
  std::uint64_t total = 0;
  for_each([&](std::span<const Element>) {
    ++total;
    return true;
  });
  return total;
}

std::optional<std::vector<Element>> MonotoneMapSearch::first() const {
  std::optional<std::vector<Element>> found;
  for_each([&](std::span<const Element> values) {
    found.emplace(values.begin(), values.end());
    return false;
  });
  return found;
}

namespace {

void check_cap(const char* what, const Poset& p, const SearchOptions& options) {
  if (p.size() > options.max_elements) {
    throw CapExceeded(what, static_cast<std::size_t>(p.size()), static_cast<std::size_t>(options.max_elements));
  }
}

}  // namespace

std::optional<OrderMap> find_fixed_point_free(const Poset& p, SearchOptions options) {
  check_cap("find_fixed_point_free", p, options);
  std::vector<ElementSet> allowed(p.size());
  for (Element x = 0; x < p.size(); ++x) allowed[x] = p.elements() - ElementSet::singleton(x);
  auto table = MonotoneMapSearch(p, p, std::move(allowed)).first();
  if (!table) return std::nullopt;
  return make_endomap(p, std::move(*table));
}

std::uint64_t count_endomaps(const Poset& p, SearchOptions options) {
  check_cap("count_endomaps", p, options);
  return MonotoneMapSearch(p, p).count();
}

Element abian_brown(const OrderMap& f, Element x0) {
  if (!f.is_endomap()) throw NotEndomap("Abian-Brown iteration needs a self-map");
  f.source().check_element(x0);
  if (!f.source().leq(x0, f(x0))) throw PreconditionFailed("start point is not below its image");
  Element x = x0;
  while (f(x) != x) x = f(x);
  return x;
}

namespace {

std::shared_ptr<const CrosscutPoset> build_crosscut(const Poset& p, Construction kind) {
  switch (kind) {
    case Construction::D:
      return std::make_shared<const CrosscutPoset>(d_poset(p));
    case Construction::U:
      return std::make_shared<const CrosscutPoset>(u_poset(p));
    case Construction::C:
      return std::make_shared<const CrosscutPoset>(c_poset(p));
  }
  throw PreconditionFailed("unknown construction");
}

}  // namespace

InducedMapper::InducedMapper(const Poset& source, const Poset& target, Construction kind)
    : source_(source), target_(target), kind_(kind) {
  source_cc_ = build_crosscut(source_, kind_);
  target_cc_ = source_ == target_ ? source_cc_ : build_crosscut(target_, kind_);
  target_maximal_ = maximal_elements(target_);
  target_minimal_ = minimal_elements(target_);
  for (int i = 0; i < target_cc_->size(); ++i) {
    auto& index = target_cc_->sides[i] == Side::D ? target_d_index_ : target_u_index_;
    index.emplace(target_cc_->nodes[i], i);
  }
}

InducedMapper::InducedMapper(const Poset& p, Construction kind) : InducedMapper(p, p, kind) {}

Element InducedMapper::image_of(int node, std::span<const Element> values) const {
  ElementSet image;
  for (Element x : source_cc_->nodes[node]) image.insert(values[x]);
  const bool d_side = source_cc_->sides[node] == Side::D;
  // The image of a connected node under a monotone map is connected.
  const auto containing =
      min_containing_unchecked(target_, d_side ? target_maximal_ : target_minimal_, image);
  if (!containing) throw PreconditionFailed("no crosscut node contains the image " + node_label(target_, image));
  const auto& index = d_side ? target_d_index_ : target_u_index_;
  const auto it = index.find(*containing);
  if (it == index.end()) throw PreconditionFailed("minimum containing node is missing from the target");
  return it->second;
}

std::vector<Element> InducedMapper::apply(std::span<const Element> values) const {
  if (static_cast<int>(values.size()) != source_.size()) throw Mismatch("map table does not match the source");
  std::vector<Element> table(source_cc_->size());
  for (int i = 0; i < source_cc_->size(); ++i) table[i] = image_of(i, values);
  return table;
}

OrderMap InducedMapper::induce(const OrderMap& f) const {
  if (!(f.source() == source_) || !(f.target() == target_)) {
    throw Mismatch("map does not run between the posets of this mapper");
  }
  return OrderMap(source_cc_->order, target_cc_->order, apply(f.values()));
}

namespace {

InducedMap induce_with(const OrderMap& f, Construction kind) {
  const InducedMapper mapper = f.is_endomap() ? InducedMapper(f.source(), kind)
                                              : InducedMapper(f.source(), f.target(), kind);
  OrderMap map = mapper.induce(f);
  return InducedMap{mapper.source_crosscut(), mapper.target_crosscut(), std::move(map)};
}

}  // namespace

InducedMap induced_d(const OrderMap& f) { return induce_with(f, Construction::D); }
InducedMap induced_u(const OrderMap& f) { return induce_with(f, Construction::U); }
InducedMap induced_c(const OrderMap& f) { return induce_with(f, Construction::C); }

}  // namespace crosscut
