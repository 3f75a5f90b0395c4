#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace zslen::oracle {

namespace {

ElementId multiple(const FiniteAbelianGroup& g, ElementId x, std::uint32_t k) {
  ElementId s = 0;
  for (std::uint32_t i = 0; i < k; ++i) s = g.add(s, x);
  return s;
}

ElementId sum_of(const FiniteAbelianGroup& g, const std::vector<ElementId>& alphabet, const Counts& c) {
  ElementId s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s = g.add(s, multiple(g, alphabet[i], c[i]));
  return s;
}

// Calls f on every vector 0 <= v <= box (componentwise).
void for_each_below(const Counts& box, const std::function<void(const Counts&)>& f) {
  Counts v(box.size(), 0);
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < box.size() && v[i] == box[i]) v[i++] = 0;
    if (i == box.size()) return;
    ++v[i];
  }
}

}  // namespace

std::vector<Counts> zero_sum_multisets(const FiniteAbelianGroup& g, const std::vector<ElementId>& alphabet,
                                       std::uint32_t max_length) {
  std::vector<Counts> out;
  Counts box(alphabet.size(), max_length);
  for_each_below(box, [&](const Counts& c) {
    std::uint32_t len = 0;
    for (const auto x : c) len += x;
    if (len <= max_length && sum_of(g, alphabet, c) == 0) out.push_back(c);
  });
  return out;
}

bool has_proper_zero_sum(const FiniteAbelianGroup& g, const std::vector<ElementId>& alphabet, const Counts& c) {
  bool found = false;
  for_each_below(c, [&](const Counts& t) {
    if (found) return;
    const bool empty = std::all_of(t.begin(), t.end(), [](std::uint32_t x) { return x == 0; });
    if (empty || t == c) return;
    if (sum_of(g, alphabet, t) == 0) found = true;
  });
  return found;
}

std::set<Counts> atoms(const FiniteAbelianGroup& g, const std::vector<ElementId>& alphabet) {
  Counts box(alphabet.size());
  for (std::size_t i = 0; i < alphabet.size(); ++i) box[i] = static_cast<std::uint32_t>(g.order_of(alphabet[i]));
  std::set<Counts> out;
  for_each_below(box, [&](const Counts& c) {
    const bool empty = std::all_of(c.begin(), c.end(), [](std::uint32_t x) { return x == 0; });
    if (!empty && sum_of(g, alphabet, c) == 0 && !has_proper_zero_sum(g, alphabet, c)) out.insert(c);
  });
  return out;
}

std::set<std::int64_t> factorization_lengths(const Counts& b, const std::vector<Counts>& atoms) {
  std::set<std::int64_t> out;
  std::function<void(const Counts&, std::int64_t)> go = [&](const Counts& rest, std::int64_t depth) {
    if (std::all_of(rest.begin(), rest.end(), [](std::uint32_t x) { return x == 0; })) {
      out.insert(depth);
      return;
    }
    for (const auto& a : atoms) {
      bool divides = true;
      for (std::size_t i = 0; i < a.size() && divides; ++i) divides = a[i] <= rest[i];
      if (!divides) continue;
      Counts next = rest;
      for (std::size_t i = 0; i < a.size(); ++i) next[i] -= a[i];
      go(next, depth + 1);
    }
  };
  go(b, 0);
  return out;
}

std::set<std::int64_t> numerical_lengths(const std::vector<std::int64_t>& gens, std::int64_t n) {
  std::set<std::int64_t> out;
  std::function<void(std::size_t, std::int64_t, std::int64_t)> go = [&](std::size_t i, std::int64_t rest,
                                                                        std::int64_t len) {
    if (i == gens.size()) {
      if (rest == 0) out.insert(len);
      return;
    }
    for (std::int64_t k = 0; k * gens[i] <= rest; ++k) go(i + 1, rest - k * gens[i], len + k);
  };
  go(0, n, 0);
  return out;
}

std::int64_t frobenius(const std::vector<std::int64_t>& gens) {
  const auto [lo, hi] = std::minmax_element(gens.begin(), gens.end());
  const std::int64_t limit = *lo * *hi;
  std::vector<bool> member(static_cast<std::size_t>(limit + 1), false);
  member[0] = true;
  for (std::int64_t n = 1; n <= limit; ++n)
    for (const auto g : gens)
      if (g <= n && member[n - g]) member[n] = true;
  for (std::int64_t n = limit; n >= 0; --n)
    if (!member[n]) return n;
  return -1;
}

}  // namespace zslen::oracle
