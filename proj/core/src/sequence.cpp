#include "zslen/sequence.hpp"

#include <algorithm>
#include <limits>

#include "zslen/errors.hpp"

namespace zslen {

namespace {

Multiplicity checked_add(Multiplicity a, std::uint64_t b) {
  const std::uint64_t sum = static_cast<std::uint64_t>(a) + b;
  if (sum > std::numeric_limits<Multiplicity>::max()) throw InvalidArgument("sequence multiplicity overflow");
  return static_cast<Multiplicity>(sum);
}

void require_same_group(const Sequence& a, const Sequence& b) {
  if (!(a.group() == b.group())) throw InvalidArgument("sequences over different groups");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

}  // namespace

Sequence::Sequence(FiniteAbelianGroup group, std::vector<Term> terms) : group_(std::move(group)) {
  std::sort(terms.begin(), terms.end());
  for (const auto& [g, m] : terms) {
    if (g >= group_.order()) throw InvalidArgument("element index out of range for group");
    if (m == 0) continue;
    if (!terms_.empty() && terms_.back().first == g)
      terms_.back().second = checked_add(terms_.back().second, m);
    else
      terms_.emplace_back(g, m);
  }
}

Sequence Sequence::power_of(const GroupElement& g, Multiplicity mult) {
  return Sequence(g.group(), {{g.id(), mult}});
}

Sequence Sequence::from_exponents(const FiniteAbelianGroup& group, std::span<const ElementId> alphabet,
                                  std::span<const Multiplicity> exponents) {
  if (alphabet.size() != exponents.size()) throw InvalidArgument("exponent vector does not match alphabet");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (exponents[i] > 0) terms.emplace_back(alphabet[i], exponents[i]);
  return Sequence(group, std::move(terms));
}

std::uint64_t Sequence::length() const noexcept {
  std::uint64_t n = 0;
  for (const auto& t : terms_) n += t.second;
  return n;
}

Multiplicity Sequence::multiplicity(ElementId g) const noexcept {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{g, 0});
  return it != terms_.end() && it->first == g ? it->second : 0;
}

std::vector<ElementId> Sequence::support() const {
  std::vector<ElementId> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.first);
  return out;
}

GroupElement Sequence::sigma() const {
  ElementId acc = 0;
  for (const auto& [g, m] : terms_) {
    // m * g by doubling keeps this logarithmic in the multiplicity.
    ElementId term = 0;
    ElementId base = g;
    for (Multiplicity k = m; k > 0; k >>= 1) {
      if (k & 1) term = group_.add(term, base);
      base = group_.add(base, base);
    }
    acc = group_.add(acc, term);
  }
  return GroupElement(group_, acc);
}

Sequence Sequence::negate() const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [g, m] : terms_) terms.emplace_back(group_.neg(g), m);
  return Sequence(group_, std::move(terms));
}

Sequence Sequence::power(Multiplicity k) const {
  std::vector<Term> terms;
  for (const auto& [g, m] : terms_) {
    const std::uint64_t p = static_cast<std::uint64_t>(m) * k;
    if (p > std::numeric_limits<Multiplicity>::max()) throw InvalidArgument("sequence multiplicity overflow");
    terms.emplace_back(g, static_cast<Multiplicity>(p));
  }
  return Sequence(group_, std::move(terms));
}

ExponentVector Sequence::exponents(std::span<const ElementId> alphabet) const {
  ExponentVector out(alphabet.size(), 0);
  for (const auto& [g, m] : terms_) {
    const auto it = std::lower_bound(alphabet.begin(), alphabet.end(), g);
    if (it == alphabet.end() || *it != g)
      throw InvalidArgument("sequence element " + group_.element_to_string(g) + " lies outside the subset");
    out[static_cast<std::size_t>(it - alphabet.begin())] = m;
  }
  return out;
}

std::string Sequence::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += ',';
    out += group_.element_to_string(terms_[i].first);
    out += ':';
    out += std::to_string(terms_[i].second);
  }
  return out + "]";
}

std::strong_ordering operator<=>(const Sequence& a, const Sequence& b) noexcept {
  if (const auto c = a.length() <=> b.length(); c != 0) return c;
  // Lexicographic comparison of dense vectors: the first element id at which
  // multiplicities differ decides.
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    const ElementId ga = i < a.terms_.size() ? a.terms_[i].first : std::numeric_limits<ElementId>::max();
    const ElementId gb = j < b.terms_.size() ? b.terms_[j].first : std::numeric_limits<ElementId>::max();
    if (ga != gb) return ga < gb ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.terms_[i].second != b.terms_[j].second) return a.terms_[i].second <=> b.terms_[j].second;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

GroupElement sigma(const Sequence& s) { return s.sigma(); }
bool is_zero_sum(const Sequence& s) { return s.is_zero_sum(); }
Sequence negate(const Sequence& s) { return s.negate(); }

Sequence mul(const Sequence& s, const Sequence& t) {
  require_same_group(s, t);
  std::vector<Sequence::Term> terms(s.terms().begin(), s.terms().end());
  terms.insert(terms.end(), t.terms().begin(), t.terms().end());
  return Sequence(s.group(), std::move(terms));
}

bool divides(const Sequence& t, const Sequence& s) {
  require_same_group(s, t);
  for (const auto& [g, m] : t.terms())
    if (s.multiplicity(g) < m) return false;
  return true;
}

Sequence quotient(const Sequence& s, const Sequence& t) {
  if (!divides(t, s)) throw InvalidArgument("quotient requires the divisor " + t.to_string() + " to divide " +
                                            s.to_string());
  std::vector<Sequence::Term> terms;
  for (const auto& [g, m] : s.terms()) terms.emplace_back(g, m - t.multiplicity(g));
  return Sequence(s.group(), std::move(terms));
}

Sequence parse_sequence(const FiniteAbelianGroup& group, std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw InvalidArgument("sequence must be written as [g:mult,...], got '" + std::string(text) + "'");
  text = trim(text.substr(1, text.size() - 2));
  std::vector<Sequence::Term> terms;
  while (!text.empty()) {
    // An item ends at the first top-level comma (commas inside tuples do not count).
    std::size_t end = 0;
    int depth = 0;
    for (; end < text.size(); ++end) {
      if (text[end] == '(') ++depth;
      if (text[end] == ')') --depth;
      if (text[end] == ',' && depth == 0) break;
    }
    const std::string_view item = trim(text.substr(0, end));
    const auto colon = item.rfind(':');
    Multiplicity mult = 1;
    std::string_view elem = item;
    if (colon != std::string_view::npos) {
      elem = item.substr(0, colon);
      const auto m = trim(item.substr(colon + 1));
      std::uint64_t v = 0;
      for (const char c : m) {
        if (c < '0' || c > '9') throw InvalidArgument("bad multiplicity '" + std::string(m) + "'");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > std::numeric_limits<Multiplicity>::max()) throw InvalidArgument("sequence multiplicity overflow");
      }
      if (m.empty()) throw InvalidArgument("missing multiplicity in '" + std::string(item) + "'");
      mult = static_cast<Multiplicity>(v);
    }
    terms.emplace_back(parse_element(group, elem), mult);
    if (end >= text.size()) break;
    text = trim(text.substr(end + 1));
  }
  return Sequence(group, std::move(terms));
}

std::vector<ElementId> normalize_subset(const FiniteAbelianGroup& group, std::span<const ElementId> subset) {
  std::vector<ElementId> out(subset.begin(), subset.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && out.back() >= group.order()) throw InvalidArgument("subset element out of range");
  return out;
}

void for_each_zero_sum(const FiniteAbelianGroup& group, std::span<const ElementId> subset,
                       std::uint64_t max_length, const std::function<void(const ExponentVector&)>& visit) {
  const auto alphabet = normalize_subset(group, subset);
  const std::size_t n = alphabet.size();
  ExponentVector exps(n, 0);
  // reachable[i] is the subgroup generated by alphabet[i..], i.e. every sum
  // the suffix can still contribute; used to cut dead branches.
  std::vector<std::vector<bool>> reachable(n + 1, std::vector<bool>(static_cast<std::size_t>(group.order()), false));
  reachable[n][0] = true;
  for (std::size_t i = n; i-- > 0;) {
    reachable[i] = reachable[i + 1];
    std::vector<ElementId> frontier;
    for (ElementId h = 0; h < group.order(); ++h)
      if (reachable[i][h]) frontier.push_back(h);
    while (!frontier.empty()) {
      const ElementId h = group.add(frontier.back(), alphabet[i]);
      frontier.pop_back();
      if (!reachable[i][h]) {
        reachable[i][h] = true;
        frontier.push_back(h);
      }
    }
  }
  if (n == 0) {
    visit(exps);
    return;
  }
  // Exact length `remaining` to distribute over positions i..n-1, lexicographic.
  std::function<void(std::size_t, std::uint64_t, ElementId)> rec = [&](std::size_t i, std::uint64_t remaining,
                                                                       ElementId sum) {
    if (!reachable[i][group.neg(sum)]) return;
    if (i + 1 == n) {
      ElementId s = sum;
      ElementId base = alphabet[i];
      for (std::uint64_t k = remaining; k > 0; k >>= 1) {
        if (k & 1) s = group.add(s, base);
        base = group.add(base, base);
      }
      if (s == 0) {
        exps[i] = static_cast<Multiplicity>(remaining);
        visit(exps);
        exps[i] = 0;
      }
      return;
    }
    ElementId s = sum;
    for (std::uint64_t m = 0; m <= remaining; ++m) {
      exps[i] = static_cast<Multiplicity>(m);
      rec(i + 1, remaining - m, s);
      s = group.add(s, alphabet[i]);
    }
    exps[i] = 0;
  };
  for (std::uint64_t len = 0; len <= max_length; ++len) rec(0, len, 0);
}

std::vector<Sequence> enumerate_zero_sum(const FiniteAbelianGroup& group, std::span<const ElementId> subset,
                                         std::uint64_t max_length) {
  const auto alphabet = normalize_subset(group, subset);
  std::vector<Sequence> out;
  for_each_zero_sum(group, alphabet, max_length, [&](const ExponentVector& e) {
    out.push_back(Sequence::from_exponents(group, alphabet, e));
  });
  return out;
}

}  // namespace zslen
