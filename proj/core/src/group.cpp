#include "zslen/group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "zslen/errors.hpp"

namespace zslen {

struct FiniteAbelianGroup::Tables {
  std::vector<std::int64_t> factors;
  std::int64_t order = 1;
  std::vector<std::int64_t> coords;  // order * rank, row per element
  std::vector<ElementId> sum;        // order * order
  std::vector<ElementId> negation;
  std::vector<std::int64_t> element_order;
};

namespace {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw InvalidArgument("cannot parse " + std::string(what) + " from '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::shared_ptr<const FiniteAbelianGroup::Tables> FiniteAbelianGroup::trivial_tables() {
  static const auto tables = [] {
    auto t = std::make_shared<FiniteAbelianGroup::Tables>();
    t->sum = {0};
    t->negation = {0};
    t->element_order = {1};
    return std::shared_ptr<const FiniteAbelianGroup::Tables>(t);
  }();
  return tables;
}

FiniteAbelianGroup::FiniteAbelianGroup() : tables_(trivial_tables()) {}
FiniteAbelianGroup::FiniteAbelianGroup(std::shared_ptr<const Tables> tables) : tables_(std::move(tables)) {}

std::span<const std::int64_t> FiniteAbelianGroup::invariant_factors() const noexcept { return tables_->factors; }
std::int64_t FiniteAbelianGroup::order() const noexcept { return tables_->order; }
std::size_t FiniteAbelianGroup::rank() const noexcept { return tables_->factors.size(); }
std::int64_t FiniteAbelianGroup::exponent() const noexcept {
  return tables_->factors.empty() ? 1 : tables_->factors.back();
}

ElementId FiniteAbelianGroup::add(ElementId a, ElementId b) const noexcept {
  return tables_->sum[static_cast<std::size_t>(a) * tables_->order + b];
}
ElementId FiniteAbelianGroup::neg(ElementId a) const noexcept { return tables_->negation[a]; }
std::int64_t FiniteAbelianGroup::order_of(ElementId a) const noexcept { return tables_->element_order[a]; }

std::span<const std::int64_t> FiniteAbelianGroup::coords(ElementId a) const noexcept {
  const std::size_t r = rank();
  return std::span<const std::int64_t>(tables_->coords).subspan(a * r, r);
}

ElementId FiniteAbelianGroup::index_of(std::span<const std::int64_t> coords) const {
  if (coords.size() != rank())
    throw InvalidArgument("element has " + std::to_string(coords.size()) + " coordinates, group rank is " +
                          std::to_string(rank()));
  std::int64_t id = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const std::int64_t n = tables_->factors[i];
    id = id * n + ((coords[i] % n) + n) % n;
  }
  return static_cast<ElementId>(id);
}

GroupElement FiniteAbelianGroup::zero() const { return GroupElement(*this, 0); }
GroupElement FiniteAbelianGroup::element(std::span<const std::int64_t> coords) const {
  return GroupElement(*this, index_of(coords));
}
GroupElement FiniteAbelianGroup::element(std::initializer_list<std::int64_t> coords) const {
  return element(std::span<const std::int64_t>(coords.begin(), coords.size()));
}
GroupElement FiniteAbelianGroup::element_at(ElementId id) const {
  if (id >= order()) throw InvalidArgument("element index " + std::to_string(id) + " out of range");
  return GroupElement(*this, id);
}

std::string FiniteAbelianGroup::element_to_string(ElementId a) const {
  const auto c = coords(a);
  if (c.size() == 1) return std::to_string(c[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out + ")";
}

std::string FiniteAbelianGroup::to_string() const {
  if (tables_->factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < tables_->factors.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(tables_->factors[i]);
  }
  return out;
}

bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) noexcept {
  return a.tables_ == b.tables_ || a.tables_->factors == b.tables_->factors;
}

std::vector<std::int64_t> GroupElement::coords() const {
  const auto c = group_.coords(id_);
  return {c.begin(), c.end()};
}

FiniteAbelianGroup make_group(std::span<const std::int64_t> moduli, std::int64_t max_order) {
  // Collect prime-power components per prime, then recombine greedily: the
  // largest invariant factor takes the largest power of every prime, the next
  // takes the second largest, and so on.
  std::map<std::int64_t, std::vector<int>> powers;
  __int128 order = 1;
  for (const std::int64_t m : moduli) {
    if (m < 1) throw InvalidArgument("modulus must be at least 1, got " + std::to_string(m));
    order *= m;
    if (order > max_order)
      throw ResourceLimit("max_group_order", static_cast<std::uint64_t>(max_order),
                          "group order exceeds the configured cap of " + std::to_string(max_order));
    for (const auto& [p, e] : factorize(m)) powers[p].push_back(e);
  }
  std::size_t rank = 0;
  for (auto& [p, es] : powers) {
    std::sort(es.begin(), es.end(), std::greater<>());
    rank = std::max(rank, es.size());
  }
  std::vector<std::int64_t> factors(rank, 1);
  for (const auto& [p, es] : powers) {
    for (std::size_t i = 0; i < es.size(); ++i) {
      std::int64_t q = 1;
      for (int k = 0; k < es[i]; ++k) q *= p;
      factors[rank - 1 - i] *= q;
    }
  }
  if (factors.empty()) return FiniteAbelianGroup();

  auto t = std::make_shared<FiniteAbelianGroup::Tables>();
  t->factors = factors;
  t->order = static_cast<std::int64_t>(order);
  const auto n = static_cast<std::size_t>(t->order);
  t->coords.resize(n * rank);
  for (std::size_t id = 0; id < n; ++id) {
    std::size_t rest = id;
    for (std::size_t i = rank; i-- > 0;) {
      const auto f = static_cast<std::size_t>(factors[i]);
      t->coords[id * rank + i] = static_cast<std::int64_t>(rest % f);
      rest /= f;
    }
  }
  auto encode = [&](auto&& coord_of) {
    std::int64_t id = 0;
    for (std::size_t i = 0; i < rank; ++i) id = id * factors[i] + coord_of(i);
    return static_cast<ElementId>(id);
  };
  t->sum.resize(n * n);
  t->negation.resize(n);
  t->element_order.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      t->sum[a * n + b] =
          encode([&](std::size_t i) { return (t->coords[a * rank + i] + t->coords[b * rank + i]) % factors[i]; });
    }
    t->negation[a] =
        encode([&](std::size_t i) { return (factors[i] - t->coords[a * rank + i]) % factors[i]; });
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < rank; ++i) {
      const std::int64_t c = t->coords[a * rank + i];
      ord = std::lcm(ord, factors[i] / std::gcd(c, factors[i]));
    }
    t->element_order[a] = ord;
  }
  return FiniteAbelianGroup(std::move(t));
}

FiniteAbelianGroup make_group(std::initializer_list<std::int64_t> moduli, std::int64_t max_order) {
  return make_group(std::span<const std::int64_t>(moduli.begin(), moduli.size()), max_order);
}

FiniteAbelianGroup parse_group(std::string_view text, std::int64_t max_order) {
  std::vector<std::int64_t> moduli;
  text = trim(text);
  if (text.empty()) throw InvalidArgument("empty group description");
  while (true) {
    const auto comma = text.find(',');
    moduli.push_back(parse_int(text.substr(0, comma), "group modulus"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return make_group(moduli, max_order);
}

GroupElement add(const GroupElement& a, const GroupElement& b) {
  if (!(a.group() == b.group())) throw InvalidArgument("cannot add elements of different groups");
  return GroupElement(a.group(), a.group().add(a.id(), b.id()));
}

GroupElement neg(const GroupElement& a) { return GroupElement(a.group(), a.group().neg(a.id())); }
GroupElement zero(const FiniteAbelianGroup& group) { return group.zero(); }
std::int64_t order_of(const GroupElement& g) { return g.group().order_of(g.id()); }

std::vector<GroupElement> elements(const FiniteAbelianGroup& group) {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(group.order()));
  for (std::int64_t i = 0; i < group.order(); ++i) out.emplace_back(group, static_cast<ElementId>(i));
  return out;
}

std::vector<ElementId> all_elements(const FiniteAbelianGroup& group) {
  std::vector<ElementId> out(static_cast<std::size_t>(group.order()));
  std::iota(out.begin(), out.end(), ElementId{0});
  return out;
}

std::vector<ElementId> nonzero_elements(const FiniteAbelianGroup& group) {
  auto out = all_elements(group);
  out.erase(out.begin());
  return out;
}

ElementId parse_element(const FiniteAbelianGroup& group, std::string_view text) {
  text = trim(text);
  std::vector<std::int64_t> coords;
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw InvalidArgument("unterminated element tuple '" + std::string(text) + "'");
    text = trim(text.substr(1, text.size() - 2));
    while (!text.empty()) {
      const auto comma = text.find(',');
      coords.push_back(parse_int(text.substr(0, comma), "element coordinate"));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
  } else {
    coords.push_back(parse_int(text, "element"));
  }
  if (coords.size() != group.rank())
    throw InvalidArgument("element '" + std::string(text) + "' does not match group rank " +
                          std::to_string(group.rank()));
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] < 0 || coords[i] >= group.invariant_factors()[i])
      throw InvalidArgument("element '" + std::string(text) + "' is not in the group " + group.to_string());
  return group.index_of(coords);
}

}  // namespace zslen
