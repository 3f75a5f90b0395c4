#include "zslen/transfer.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "zslen/errors.hpp"

namespace zslen {

namespace {

ElementId class_sum(const KrullInstance& instance, const PrimeWord& a) {
  ElementId s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (Multiplicity m = 0; m < a[i]; ++m) s = instance.group.add(s, instance.classes[i]);
  return s;
}

void check_word(const KrullInstance& instance, const PrimeWord& a) {
  if (a.size() != instance.primes())
    throw InvalidArgument("word has " + std::to_string(a.size()) + " exponents, instance has " +
                          std::to_string(instance.primes()) + " primes");
}

std::uint64_t word_length(const PrimeWord& a) { return std::accumulate(a.begin(), a.end(), std::uint64_t{0}); }

PrimeWord random_element(const std::vector<PrimeWord>& atoms, std::size_t primes, std::uint64_t max_length,
                         std::mt19937_64& rng) {
  PrimeWord a(primes, 0);
  const std::uint64_t target = std::uniform_int_distribution<std::uint64_t>(0, max_length)(rng);
  std::uint64_t length = 0;
  std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
  for (int misses = 0; misses < 4;) {
    const auto& u = atoms[pick(rng)];
    const auto lu = word_length(u);
    if (length + lu > target) {
      ++misses;
      continue;
    }
    for (std::size_t i = 0; i < primes; ++i) a[i] += u[i];
    length += lu;
  }
  return a;
}

// Splits beta(a) = B C along a random factorization into atoms of B(G0),
// then hands each class's primes of a to b greedily until b covers B.
bool lift_random_split(const KrullInstance& instance, const PrimeWord& a, const std::vector<ExponentVector>& g0_atoms,
                       std::mt19937_64& rng) {
  const std::size_t n = instance.subset.size();
  ExponentVector rest = beta(instance, a).exponents(instance.subset);
  ExponentVector b_image(n, 0);
  std::bernoulli_distribution coin(0.5);
  while (std::any_of(rest.begin(), rest.end(), [](Multiplicity m) { return m > 0; })) {
    std::vector<const ExponentVector*> dividing;
    for (const auto& u : g0_atoms) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = u[i] <= rest[i];
      if (ok) dividing.push_back(&u);
    }
    if (dividing.empty()) return false;
    const auto& u = *dividing[std::uniform_int_distribution<std::size_t>(0, dividing.size() - 1)(rng)];
    const bool into_b = coin(rng);
    for (std::size_t i = 0; i < n; ++i) {
      rest[i] -= u[i];
      if (into_b) b_image[i] += u[i];
    }
  }

  PrimeWord b(a.size(), 0);
  std::vector<Multiplicity> need = b_image;
  for (std::size_t p = 0; p < a.size(); ++p) {
    const auto c = static_cast<std::size_t>(
        std::lower_bound(instance.subset.begin(), instance.subset.end(), instance.classes[p]) -
        instance.subset.begin());
    const Multiplicity take = std::min(need[c], a[p]);
    b[p] = take;
    need[c] -= take;
  }
  if (std::any_of(need.begin(), need.end(), [](Multiplicity m) { return m > 0; })) return false;
  PrimeWord c(a.size(), 0);
  for (std::size_t p = 0; p < a.size(); ++p) c[p] = a[p] - b[p];
  if (!in_monoid(instance, b) || !in_monoid(instance, c)) return false;
  const Sequence big_b = Sequence::from_exponents(instance.group, instance.subset, b_image);
  return beta(instance, b) == big_b && mul(beta(instance, b), beta(instance, c)) == beta(instance, a);
}

}  // namespace

KrullInstance make_krull_instance(const FiniteAbelianGroup& group, std::span<const ElementId> subset,
                                  std::span<const unsigned> primes_per_class) {
  KrullInstance instance{group, normalize_subset(group, subset), {}, {}};
  if (instance.subset.empty()) throw InvalidArgument("a Krull instance needs a nonempty class set");
  if (primes_per_class.size() != instance.subset.size())
    throw InvalidArgument("need one prime count per class");
  for (std::size_t i = 0; i < instance.subset.size(); ++i) {
    if (primes_per_class[i] == 0) throw InvalidArgument("every class needs at least one prime");
    const ElementId g = instance.subset[i];
    for (unsigned j = 0; j < primes_per_class[i]; ++j) {
      instance.labels.push_back("p" + group.element_to_string(g) + "_" + std::to_string(j));
      instance.classes.push_back(g);
    }
  }
  return instance;
}

KrullInstance make_krull_instance(const FiniteAbelianGroup& group, std::span<const ElementId> subset,
                                  unsigned primes_per_class) {
  const std::vector<unsigned> counts(normalize_subset(group, subset).size(), primes_per_class);
  return make_krull_instance(group, subset, counts);
}

KrullInstance random_krull_instance(const FiniteAbelianGroup& group, std::span<const ElementId> subset,
                                    std::uint64_t seed, unsigned min_primes, unsigned max_primes) {
  if (min_primes == 0 || min_primes > max_primes) throw InvalidArgument("invalid prime count range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> count(min_primes, max_primes);
  std::vector<unsigned> counts(normalize_subset(group, subset).size());
  for (auto& c : counts) c = count(rng);
  return make_krull_instance(group, subset, counts);
}

bool in_monoid(const KrullInstance& instance, const PrimeWord& a) {
  check_word(instance, a);
  return class_sum(instance, a) == 0;
}

Sequence beta(const KrullInstance& instance, const PrimeWord& a) {
  if (!in_monoid(instance, a))
    throw InvalidArgument("word " + word_to_string(instance, a) + " is not in the monoid");
  std::vector<Sequence::Term> terms;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) terms.emplace_back(instance.classes[i], a[i]);
  return Sequence(instance.group, std::move(terms));
}

std::string word_to_string(const KrullInstance& instance, const PrimeWord& a) {
  check_word(instance, a);
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    if (!out.empty()) out += '*';
    out += instance.labels[i];
    if (a[i] > 1) out += "^" + std::to_string(a[i]);
  }
  return out.empty() ? "1" : out;
}

KrullMonoid::KrullMonoid(KrullInstance instance, const Options& options)
    : instance_(std::move(instance)),
      atoms_(minimal_zero_sum_words(instance_.group, instance_.classes, options)),
      engine_(instance_.primes(), atoms_, options) {
  std::sort(atoms_.begin(), atoms_.end());
}

bool KrullMonoid::is_atom(const PrimeWord& a) const {
  check_word(instance_, a);
  return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

LengthSet KrullMonoid::length_set(const PrimeWord& a) {
  if (!in_monoid(instance_, a))
    throw InvalidArgument("word " + word_to_string(instance_, a) + " is not in the monoid");
  return engine_.lengths(a);
}

LengthSet direct_length_set(const KrullInstance& instance, const PrimeWord& a, const Options& options) {
  KrullMonoid h(instance, options);
  return h.length_set(a);
}

TransferReport check_transfer(const KrullInstance& instance, std::uint64_t samples, std::uint64_t max_word_length,
                              std::uint64_t seed, const Options& options) {
  KrullMonoid h(instance, options);
  const AtomSet g0_atoms = enumerate_atoms(instance.group, instance.subset, options);
  const auto g0_dense = g0_atoms.dense();
  LengthEngine g0_engine(g0_atoms, options);
  std::vector<PrimeWord> h_atoms(h.atoms().begin(), h.atoms().end());

  TransferReport r;
  r.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    ++r.samples;
    const PrimeWord a = random_element(h_atoms, instance.primes(), max_word_length, rng);
    const LengthSet direct = h.length_set(a);
    const LengthSet transferred = g0_engine.length_set(beta(instance, a));
    const bool lengths_ok = direct == transferred;
    r.passes += lengths_ok;

    const PrimeWord b = random_element(h_atoms, instance.primes(), max_word_length, rng);
    PrimeWord ab = a;
    for (std::size_t i = 0; i < ab.size(); ++i) ab[i] += b[i];
    const bool hom_ok = beta(instance, ab) == mul(beta(instance, a), beta(instance, b));
    r.homomorphism_passes += hom_ok;

    const bool lift_ok = lift_random_split(instance, a, g0_dense, rng);
    r.lifting_passes += lift_ok;

    if ((!lengths_ok || !hom_ok || !lift_ok) && r.failure.empty()) {
      r.failure = !lengths_ok ? "lengths" : !hom_ok ? "homomorphism" : "lifting";
      r.counterexample = a;
      r.direct_lengths = direct;
      r.transferred_lengths = transferred;
    }
  }
  return r;
}

AtomCorrespondenceReport check_atom_correspondence(const KrullInstance& instance, const Options& options) {
  KrullMonoid h(instance, options);
  const auto max_length = enumerate_atoms(instance.group, instance.subset, options).max_length();
  AtomCorrespondenceReport r;
  r.h_atoms = h.atoms().size();

  // Every word over the primes with at most max_length letters, by recursion
  // on the prime index with the running class sum.
  const std::size_t n = instance.primes();
  PrimeWord word(n, 0);
  auto visit = [&](auto&& self, std::size_t i, std::uint64_t length, ElementId sum) -> void {
    if (i == n) {
      if (length == 0 || sum != 0) return;
      ++r.words_checked;
      const bool image_atom = zslen::is_atom(beta(instance, word));
      r.beta_atoms += image_atom;
      if (image_atom != h.is_atom(word) && !r.mismatch) r.mismatch = word;
      return;
    }
    ElementId s = sum;
    for (std::uint64_t m = 0; length + m <= max_length; ++m) {
      word[i] = static_cast<Multiplicity>(m);
      self(self, i + 1, length + m, s);
      s = instance.group.add(s, instance.classes[i]);
    }
    word[i] = 0;
  };
  visit(visit, 0, 0, 0);
  return r;
}

}  // namespace zslen
