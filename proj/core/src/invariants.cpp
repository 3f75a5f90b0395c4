#include "zslen/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "zslen/errors.hpp"
#include "zslen/lengths.hpp"
#include "zslen/parallel.hpp"

namespace zslen {

namespace {

std::u16string key_of(const ExponentVector& v) {
  std::u16string key(v.size(), u'\0');
  for (std::size_t i = 0; i < v.size(); ++i) key[i] = static_cast<char16_t>(v[i]);
  return key;
}

std::uint64_t total(const ExponentVector& v) {
  return std::accumulate(v.begin(), v.end(), std::uint64_t{0});
}

// Canonical order on exponent vectors over a sorted alphabet: length, then
// lexicographic. Matches Sequence ordering.
bool canonical_less(const ExponentVector& a, const ExponentVector& b) {
  const auto ta = total(a);
  const auto tb = total(b);
  if (ta != tb) return ta < tb;
  return a < b;
}

std::vector<LengthEngine> make_engines(const AtomSet& atoms, unsigned workers, const Options& options) {
  std::vector<LengthEngine> engines;
  engines.reserve(workers);
  const auto dense = atoms.dense();
  for (unsigned w = 0; w < workers; ++w) engines.emplace_back(atoms.subset().size(), dense, options);
  return engines;
}

void append_range(std::vector<LengthSet>& out, std::int64_t lo, std::int64_t hi, std::int64_t step) {
  std::vector<std::int64_t> v;
  for (std::int64_t x = lo; x <= hi; x += step) v.push_back(x);
  out.emplace_back(std::move(v));
}

bool is_group(const FiniteAbelianGroup& g, std::initializer_list<std::int64_t> factors) {
  const auto f = g.invariant_factors();
  return std::equal(f.begin(), f.end(), factors.begin(), factors.end());
}

}  // namespace

bool SystemOfLengthSets::contains(const LengthSet& l) const {
  return std::ranges::binary_search(entries, l, {}, &LengthSetEntry::lengths);
}

std::vector<LengthSet> SystemOfLengthSets::sets() const {
  std::vector<LengthSet> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.lengths);
  return out;
}

SystemOfLengthSets system_of_length_sets(const FiniteAbelianGroup& group, std::span<const ElementId> subset,
                                         std::uint64_t bound, const Options& options) {
  const auto alphabet = normalize_subset(group, subset);
  const AtomSet atoms = enumerate_atoms(group, alphabet, options);
  std::vector<ExponentVector> sequences;
  for_each_zero_sum(group, alphabet, bound, [&](const ExponentVector& e) { sequences.push_back(e); });

  // Stripe w handles indices w, w + W, ... in ascending order so each
  // engine's memo sees short sequences before the long ones built on them.
  const unsigned workers = worker_count(options.threads, sequences.size());
  auto engines = make_engines(atoms, workers, options);
  std::vector<std::map<LengthSet, std::size_t>> first(workers);
  parallel_for(workers, workers, [&](std::size_t w, unsigned) {
    for (std::size_t i = w; i < sequences.size(); i += workers) {
      auto l = engines[w].lengths(sequences[i]);
      first[w].try_emplace(std::move(l), i);
    }
  });
  std::map<LengthSet, std::size_t> merged;
  for (auto& m : first)
    for (auto& [l, i] : m) {
      auto [it, inserted] = merged.try_emplace(l, i);
      if (!inserted) it->second = std::min(it->second, i);
    }

  SystemOfLengthSets out{group, alphabet, bound, {}, sequences.size(), atoms.max_length()};
  for (auto& [l, i] : merged)
    out.entries.push_back({l, Sequence::from_exponents(group, alphabet, sequences[i])});
  return out;
}

SystemOfLengthSets system_of_length_sets(const FiniteAbelianGroup& group, std::uint64_t bound,
                                         const Options& options) {
  return system_of_length_sets(group, all_elements(group), bound, options);
}

bool has_closed_form_system(const FiniteAbelianGroup& g) {
  return is_group(g, {3}) || is_group(g, {2, 2}) || is_group(g, {4}) || is_group(g, {2, 2, 2}) ||
         is_group(g, {3, 3});
}

std::vector<LengthSet> closed_form_system(const FiniteAbelianGroup& g, std::int64_t max_element) {
  std::vector<LengthSet> out;
  const std::int64_t m = max_element;
  if (is_group(g, {3}) || is_group(g, {2, 2})) {
    // y + 2k + [0, k]
    for (std::int64_t k = 0; 3 * k <= m; ++k)
      for (std::int64_t y = 0; y + 3 * k <= m; ++y) append_range(out, y + 2 * k, y + 3 * k, 1);
  } else if (is_group(g, {4})) {
    // y + k + 1 + [0, k]  and  y + 2k + 2[0, k]
    for (std::int64_t k = 0; 2 * k + 1 <= m; ++k)
      for (std::int64_t y = 0; y + 2 * k + 1 <= m; ++y) append_range(out, y + k + 1, y + 2 * k + 1, 1);
    for (std::int64_t k = 0; 4 * k <= m; ++k)
      for (std::int64_t y = 0; y + 4 * k <= m; ++y) append_range(out, y + 2 * k, y + 4 * k, 2);
  } else if (is_group(g, {2, 2, 2})) {
    // y + (k+1) + [0,k] for k <= 2,  y + k + [0,k] for k >= 3,  y + 2k + 2[0,k]
    for (std::int64_t k = 0; k <= 2; ++k)
      for (std::int64_t y = 0; y + 2 * k + 1 <= m; ++y) append_range(out, y + k + 1, y + 2 * k + 1, 1);
    for (std::int64_t k = 3; 2 * k <= m; ++k)
      for (std::int64_t y = 0; y + 2 * k <= m; ++y) append_range(out, y + k, y + 2 * k, 1);
    for (std::int64_t k = 0; 4 * k <= m; ++k)
      for (std::int64_t y = 0; y + 4 * k <= m; ++y) append_range(out, y + 2 * k, y + 4 * k, 2);
  } else if (is_group(g, {3, 3})) {
    // [2k, l] for l in [2k, 5k];  [2k+1, l] for k >= 1, l in [2k+1, 5k+2];  {1}
    for (std::int64_t k = 0; 2 * k <= m; ++k)
      for (std::int64_t l = 2 * k; l <= std::min(5 * k, m); ++l) append_range(out, 2 * k, l, 1);
    for (std::int64_t k = 1; 2 * k + 1 <= m; ++k)
      for (std::int64_t l = 2 * k + 1; l <= std::min(5 * k + 2, m); ++l) append_range(out, 2 * k + 1, l, 1);
    if (m >= 1) out.push_back(LengthSet{1});
  } else {
    throw InvalidArgument("no closed-form system is known for the group " + g.to_string());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<LengthSet> complete_part(const SystemOfLengthSets& computed) {
  std::vector<LengthSet> out;
  const auto d = static_cast<std::int64_t>(computed.davenport);
  for (const auto& e : computed.entries)
    if (d * e.lengths.min() <= static_cast<std::int64_t>(computed.bound)) out.push_back(e.lengths);
  return out;
}

ClosedFormComparison compare_with_closed_form(const SystemOfLengthSets& computed) {
  const auto d = static_cast<std::int64_t>(computed.davenport);
  const auto bound = static_cast<std::int64_t>(computed.bound);
  const auto closed = closed_form_system(computed.group, std::max<std::int64_t>(d * bound, 1));
  ClosedFormComparison cmp;
  for (const auto& e : computed.entries) {
    if (!std::binary_search(closed.begin(), closed.end(), e.lengths)) {
      cmp.sound = false;
      cmp.unexpected.push_back(e);
    }
  }
  for (const auto& l : closed) {
    if (d * l.min() > bound) continue;
    ++cmp.compared;
    if (!computed.contains(l)) {
      cmp.complete = false;
      cmp.missing.push_back(l);
    }
  }
  return cmp;
}

UnionsComputation unions_up_to(const FiniteAbelianGroup& group, std::span<const ElementId> subset, std::int64_t kmax,
                               const Options& options) {
  if (kmax < 1) throw InvalidArgument("k must be at least 1");
  const auto alphabet = normalize_subset(group, subset);
  const AtomSet atoms = enumerate_atoms(group, alphabet, options);
  const auto dense = atoms.dense();
  const unsigned workers = worker_count(options.threads, 1u << 20);
  auto engines = make_engines(atoms, workers, options);

  UnionsComputation out;
  std::set<std::int64_t> distances;
  std::vector<ExponentVector> level = dense;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    if (k > 1) {
      std::unordered_set<std::u16string> seen;
      std::vector<ExponentVector> next;
      for (const auto& p : level) {
        for (const auto& a : dense) {
          ExponentVector q = p;
          for (std::size_t i = 0; i < q.size(); ++i) q[i] += a[i];
          if (seen.insert(key_of(q)).second) {
            next.push_back(std::move(q));
            if (next.size() > options.product_limit)
              throw ResourceLimit("product_limit", options.product_limit,
                                  "products of " + std::to_string(k) + " atoms exceed " +
                                      std::to_string(options.product_limit));
          }
        }
      }
      level = std::move(next);
    }
    std::sort(level.begin(), level.end(), canonical_less);

    std::vector<std::map<std::int64_t, std::size_t>> first(workers);
    std::vector<std::set<std::int64_t>> dist(workers);
    parallel_for(workers, workers, [&](std::size_t w, unsigned) {
      for (std::size_t i = w; i < level.size(); i += workers) {
        const auto l = engines[w].lengths(level[i]);
        for (const auto v : l.values()) first[w].try_emplace(v, i);
        for (const auto gap : delta_of(l)) dist[w].insert(gap);
      }
    });
    std::map<std::int64_t, std::size_t> merged;
    for (unsigned w = 0; w < workers; ++w) {
      for (const auto& [v, i] : first[w]) {
        auto [it, inserted] = merged.try_emplace(v, i);
        if (!inserted) it->second = std::min(it->second, i);
      }
      distances.insert(dist[w].begin(), dist[w].end());
    }
    UnionOfLengths u;
    u.k = k;
    u.products = level.size();
    for (const auto& [v, i] : merged) {
      u.values.push_back(v);
      u.witnesses.emplace_back(v, Sequence::from_exponents(group, alphabet, level[i]));
    }
    u.lambda_k = u.values.front();
    u.rho_k = u.values.back();
    out.unions.push_back(std::move(u));
  }
  out.distances.assign(distances.begin(), distances.end());
  return out;
}

UnionOfLengths union_k(const FiniteAbelianGroup& group, std::int64_t k, const Options& options) {
  return std::move(unions_up_to(group, all_elements(group), k, options).unions.back());
}

std::int64_t rho_k(const FiniteAbelianGroup& group, std::int64_t k, const Options& options) {
  return union_k(group, k, options).rho_k;
}

std::int64_t lambda_k(const FiniteAbelianGroup& group, std::int64_t k, const Options& options) {
  return union_k(group, k, options).lambda_k;
}

LengthSet length_set_in_support(const Sequence& b, const Options& options) {
  if (!b.is_zero_sum()) throw InvalidArgument("sequence " + b.to_string() + " is not zero-sum");
  if (b.empty()) return LengthSet{0};
  const auto atoms = enumerate_atoms(b.group(), b.support(), options);
  LengthEngine engine(atoms, options);
  return engine.length_set(b);
}

ElasticityResult elasticity(const FiniteAbelianGroup& group, const Options& options) {
  ElasticityResult r;
  if (group.order() <= 2) {
    r.value = Rational(1);
    r.cross_checked = true;
    return r;
  }
  const auto d = davenport(group, options);
  r.value = Rational(static_cast<std::int64_t>(d.value), 2);
  const Sequence b = mul(d.witness.negate(), d.witness);
  const LengthSet l = length_set_in_support(b, options);
  r.cross_checked = elasticity_of(l) == r.value;
  r.witness = b;
  r.witness_lengths = l;
  return r;
}

DeltaResult delta_of_group(const SystemOfLengthSets& system) {
  std::map<std::int64_t, const Sequence*> best;
  for (const auto& e : system.entries) {
    for (const auto gap : delta_of(e.lengths)) {
      auto [it, inserted] = best.try_emplace(gap, &e.witness);
      if (!inserted && e.witness < *it->second) it->second = &e.witness;
    }
  }
  DeltaResult r;
  r.bound = system.bound;
  for (const auto& [gap, w] : best) {
    r.distances.push_back(gap);
    r.witnesses.emplace_back(gap, *w);
  }
  const bool full_group = system.subset.size() == static_cast<std::size_t>(system.group.order());
  if (full_group && !r.distances.empty()) {
    const auto max = r.distances.back();
    const bool interval = r.distances.front() == 1 && static_cast<std::int64_t>(r.distances.size()) == max;
    const std::uint64_t margin = system.davenport;
    r.stable = interval && system.bound >= margin && r.witnesses.back().second.length() <= system.bound - margin;
  }
  return r;
}

DeltaResult delta_of_group(const FiniteAbelianGroup& group, std::span<const ElementId> subset, std::uint64_t bound,
                           const Options& options) {
  return delta_of_group(system_of_length_sets(group, subset, bound, options));
}

DeltaStarResult delta_star(const FiniteAbelianGroup& group, std::uint64_t bound, const Options& options) {
  if (group.order() > options.delta_star_max_order)
    throw ResourceLimit("delta_star_max_order", static_cast<std::uint64_t>(options.delta_star_max_order),
                        "delta_star scans every subset and is capped at group order " +
                            std::to_string(options.delta_star_max_order));
  DeltaStarResult r;
  r.bound = bound;
  // 0 never changes distances (L(0^y B) = y + L(B)), so G0 and G0 \ {0}
  // have the same Delta; scan subsets of the nonzero elements only.
  const auto alphabet = nonzero_elements(group);
  const std::size_t n = alphabet.size();
  if (n == 0) return r;
  const AtomSet atoms = enumerate_atoms(group, alphabet, options);
  LengthEngine engine(atoms, options);
  std::vector<std::int64_t> gcd_by_support(std::size_t{1} << n, 0);
  for_each_zero_sum(group, alphabet, bound, [&](const ExponentVector& e) {
    std::size_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i]) mask |= std::size_t{1} << i;
    if (mask == 0) return;
    const auto l = engine.lengths(e);
    for (const auto gap : delta_of(l)) gcd_by_support[mask] = std::gcd(gcd_by_support[mask], gap);
  });
  // Sets of lengths over G0 are those of sequences supported inside G0
  // (B(G0) is divisor-closed), so fold each support into its supersets.
  for (std::size_t bit = 0; bit < n; ++bit)
    for (std::size_t mask = 0; mask < gcd_by_support.size(); ++mask)
      if (mask & (std::size_t{1} << bit))
        gcd_by_support[mask] = std::gcd(gcd_by_support[mask], gcd_by_support[mask ^ (std::size_t{1} << bit)]);
  std::map<std::int64_t, std::size_t> first;
  for (std::size_t mask = 0; mask < gcd_by_support.size(); ++mask) {
    if (gcd_by_support[mask] == 0) continue;
    ++r.subsets_with_distances;
    first.try_emplace(gcd_by_support[mask], mask);
  }
  for (const auto& [v, mask] : first) {
    r.values.push_back(v);
    std::vector<ElementId> elems;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) elems.push_back(alphabet[i]);
    r.witnesses.emplace_back(v, std::move(elems));
  }
  return r;
}

HalfFactorialVerdict is_half_factorial(const FiniteAbelianGroup& group, std::span<const ElementId> subset,
                                       std::uint64_t bound, const Options& options) {
  const auto alphabet = normalize_subset(group, subset);
  if (alphabet.empty()) throw InvalidArgument("half-factoriality needs a nonempty subset");
  const bool full_group = alphabet.size() == static_cast<std::size_t>(group.order());
  if (full_group) {
    if (group.order() <= 2) return {HalfFactorialKind::kYesExact, std::nullopt, std::nullopt, ""};
    // An element of order n >= 3 gives (-U)U = V^n; otherwise G is an
    // elementary 2-group of rank >= 2 and U^2 = V0 V1 V2.
    for (ElementId g = 1; g < group.order(); ++g) {
      const auto n = group.order_of(g);
      if (n >= 3) {
        const Sequence u = Sequence::power_of(group.element_at(g), static_cast<Multiplicity>(n));
        const Sequence b = mul(u.negate(), u);
        return {HalfFactorialKind::kNo, b, length_set_in_support(b, options), "(-U)U = V^" + std::to_string(n)};
      }
    }
    const ElementId e1 = 1;
    ElementId e2 = 2;
    const Sequence u(group, {{e1, 1}, {e2, 1}, {group.add(e1, e2), 1}});
    const Sequence b = u.power(2);
    return {HalfFactorialKind::kNo, b, length_set_in_support(b, options), "U^2 = V0 V1 V2"};
  }

  const AtomSet atoms = enumerate_atoms(group, alphabet, options);
  // Atoms with pairwise disjoint supports generate a free monoid.
  std::vector<int> uses(alphabet.size(), 0);
  bool disjoint = true;
  for (const auto& d : atoms.dense())
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] && ++uses[i] > 1) disjoint = false;
  if (disjoint) return {HalfFactorialKind::kYesExact, std::nullopt, std::nullopt, "free"};

  LengthEngine engine(atoms, options);
  std::optional<HalfFactorialVerdict> found;
  for_each_zero_sum(group, alphabet, bound, [&](const ExponentVector& e) {
    if (found) return;
    const auto l = engine.lengths(e);
    if (l.size() > 1)
      found = HalfFactorialVerdict{HalfFactorialKind::kNo, Sequence::from_exponents(group, alphabet, e), l, ""};
  });
  if (found) return *found;
  return {HalfFactorialKind::kYesUpToBound, std::nullopt, std::nullopt, ""};
}

TwoDResult has_two_D_lengthset(const FiniteAbelianGroup& group, const Options& options) {
  const AtomSet atoms = enumerate_atoms(group, options);
  TwoDResult r;
  r.davenport = atoms.max_length();
  r.in_scope = r.davenport >= 4;
  const auto dense = atoms.dense();
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!(atoms.atoms()[i].length() == 1)) nonzero.push_back(i);
  const LengthSet target{2, static_cast<std::int64_t>(r.davenport)};
  LengthEngine engine(atoms, options);
  r.pairs_total = nonzero.size() * (nonzero.size() + 1) / 2;
  for (std::size_t a = 0; a < nonzero.size() && !r.found; ++a) {
    for (std::size_t b = a; b < nonzero.size(); ++b) {
      const auto& u = dense[nonzero[a]];
      const auto& v = dense[nonzero[b]];
      if (total(u) + total(v) < 2 * r.davenport) continue;
      ++r.pairs_scanned;
      ExponentVector p = u;
      for (std::size_t i = 0; i < p.size(); ++i) p[i] += v[i];
      if (engine.lengths(p) == target) {
        r.found = true;
        r.witness = Sequence::from_exponents(group, atoms.subset(), p);
        break;
      }
    }
  }
  return r;
}

std::vector<std::vector<ElementId>> subgroups(const FiniteAbelianGroup& group) {
  const auto n = static_cast<std::size_t>(group.order());
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> queue;
  std::vector<bool> trivial(n, false);
  trivial[0] = true;
  seen.insert(trivial);
  queue.push_back(trivial);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto h = queue[q];
    for (ElementId g = 0; g < n; ++g) {
      if (h[g]) continue;
      // <H, g> = union of cosets H + m g
      std::vector<bool> next = h;
      std::vector<ElementId> members;
      for (ElementId x = 0; x < n; ++x)
        if (h[x]) members.push_back(x);
      ElementId shift = g;
      while (!h[shift]) {
        for (const ElementId x : members) next[group.add(x, shift)] = true;
        shift = group.add(shift, g);
      }
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<std::vector<ElementId>> out;
  for (const auto& h : seen) {
    std::vector<ElementId> elems;
    for (ElementId x = 0; x < n; ++x)
      if (h[x]) elems.push_back(x);
    out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

IntervalSupportReport interval_support_check(const FiniteAbelianGroup& group, std::uint64_t samples,
                                             std::uint64_t seed, std::uint64_t max_length, const Options& options) {
  IntervalSupportReport r;
  r.seed = seed;
  std::vector<std::vector<ElementId>> usable;
  for (auto& h : subgroups(group))
    if (h.size() <= max_length) usable.push_back(std::move(h));
  std::mt19937_64 rng(seed);
  std::map<std::size_t, LengthEngine> engines;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const std::size_t hi = std::uniform_int_distribution<std::size_t>(0, usable.size() - 1)(rng);
    const auto& h = usable[hi];
    std::vector<Sequence::Term> terms;
    for (const ElementId x : h)
      if (x != 0) terms.emplace_back(x, 1);
    // h.size() - 1 nonzero elements plus one closing element leaves this many extras.
    const std::uint64_t budget = max_length - h.size();
    const std::uint64_t extras = std::uniform_int_distribution<std::uint64_t>(0, budget)(rng);
    for (std::uint64_t e = 0; e < extras; ++e)
      terms.emplace_back(h[std::uniform_int_distribution<std::size_t>(0, h.size() - 1)(rng)], 1);
    Sequence a(group, terms);
    const ElementId sum = a.sigma().id();
    if (sum != 0) a = mul(a, Sequence(group, {{group.neg(sum), 1}}));

    auto it = engines.find(hi);
    if (it == engines.end())
      it = engines.emplace(hi, LengthEngine(enumerate_atoms(group, h, options), options)).first;
    const LengthSet l = it->second.length_set(a);
    ++r.samples;
    if (l.is_interval()) {
      ++r.passes;
    } else if (!r.counterexample) {
      r.counterexample = a;
      r.counterexample_lengths = l;
    }
  }
  return r;
}

}  // namespace zslen
