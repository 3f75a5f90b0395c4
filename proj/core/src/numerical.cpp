#include "zslen/numerical.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

#include "zslen/errors.hpp"

namespace zslen {

namespace {

constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max();

// Smallest N0-combination of `gens` in each residue class mod m (Dijkstra
// on the residue graph). Classes the generators cannot reach stay kUnreachable.
std::vector<std::int64_t> residue_minima(std::int64_t m, std::span<const std::int64_t> gens) {
  std::vector<std::int64_t> dist(static_cast<std::size_t>(m), kUnreachable);
  using Item = std::pair<std::int64_t, std::int64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    const auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[r]) continue;
    for (const auto g : gens) {
      const auto next = (r + g) % m;
      if (d + g < dist[next]) {
        dist[next] = d + g;
        queue.emplace(d + g, next);
      }
    }
  }
  return dist;
}

// Length bitsets over values 0..max_n, `words` 64-bit words per value.
struct LengthTable {
  std::size_t words;
  std::vector<std::uint64_t> bits;
  std::uint64_t* row(std::int64_t n) { return bits.data() + static_cast<std::size_t>(n) * words; }
};

LengthTable build_table(const NumericalMonoid& h, std::int64_t max_n) {
  const auto gens = h.generators();
  const std::int64_t max_len = max_n / gens.front();
  LengthTable t{static_cast<std::size_t>(max_len / 64 + 1), {}};
  t.bits.assign(t.words * static_cast<std::size_t>(max_n + 1), 0);
  t.row(0)[0] = 1;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    auto* dst = t.row(n);
    for (const auto g : gens) {
      if (g > n) break;
      const auto* src = t.row(n - g);
      std::uint64_t carry = 0;
      for (std::size_t w = 0; w < t.words; ++w) {
        dst[w] |= (src[w] << 1) | carry;
        carry = src[w] >> 63;
      }
    }
  }
  return t;
}

std::optional<LengthSet> decode(const std::uint64_t* row, std::size_t words) {
  std::vector<std::int64_t> v;
  for (std::size_t w = 0; w < words; ++w)
    for (std::uint64_t b = row[w]; b; b &= b - 1)
      v.push_back(static_cast<std::int64_t>(w * 64) + std::countr_zero(b));
  if (v.empty()) return std::nullopt;
  return LengthSet(std::move(v));
}

}  // namespace

NumericalMonoid make_numerical(std::span<const std::int64_t> raw_generators) {
  if (raw_generators.empty()) throw InvalidArgument("a numerical monoid needs at least one generator");
  std::vector<std::int64_t> gens(raw_generators.begin(), raw_generators.end());
  std::int64_t g = 0;
  for (const auto x : gens) {
    if (x < 1) throw InvalidArgument("generators must be positive, got " + std::to_string(x));
    g = std::gcd(g, x);
  }
  if (g != 1) throw InvalidArgument("generators must have gcd 1, got " + std::to_string(g));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // A generator is redundant iff the smaller kept ones already reach it.
  NumericalMonoid h;
  const std::int64_t n1 = gens.front();
  h.generators_.push_back(n1);
  auto minima = residue_minima(n1, h.generators_);
  for (std::size_t i = 1; i < gens.size(); ++i) {
    if (minima[gens[i] % n1] <= gens[i]) continue;
    h.generators_.push_back(gens[i]);
    minima = residue_minima(n1, h.generators_);
  }
  h.apery_ = std::move(minima);
  h.frobenius_ = *std::max_element(h.apery_.begin(), h.apery_.end()) - n1;
  return h;
}

NumericalMonoid make_numerical(std::initializer_list<std::int64_t> raw_generators) {
  return make_numerical(std::span<const std::int64_t>(raw_generators.begin(), raw_generators.size()));
}

bool contains(const NumericalMonoid& h, std::int64_t n) {
  if (n < 0) return false;
  const auto n1 = h.generators().front();
  return h.apery()[static_cast<std::size_t>(n % n1)] <= n;
}

LengthSet num_length_set(const NumericalMonoid& h, std::int64_t n) {
  if (!contains(h, n)) throw InvalidArgument(std::to_string(n) + " is not in the monoid");
  auto table = build_table(h, n);
  return *decode(table.row(n), table.words);
}

std::vector<std::optional<LengthSet>> num_length_sets(const NumericalMonoid& h, std::int64_t max_n) {
  if (max_n < 0) throw InvalidArgument("max_n must be nonnegative");
  auto table = build_table(h, max_n);
  std::vector<std::optional<LengthSet>> out;
  out.reserve(static_cast<std::size_t>(max_n + 1));
  for (std::int64_t n = 0; n <= max_n; ++n) out.push_back(decode(table.row(n), table.words));
  return out;
}

Rational num_elasticity(const NumericalMonoid& h) {
  const auto gens = h.generators();
  return Rational(gens.back(), gens.front());
}

std::optional<std::int64_t> num_min_delta(const NumericalMonoid& h) {
  const auto gens = h.generators();
  if (gens.size() < 2) return std::nullopt;
  std::int64_t g = 0;
  for (std::size_t i = 1; i < gens.size(); ++i) g = std::gcd(g, gens[i] - gens[i - 1]);
  return g;
}

}  // namespace zslen
