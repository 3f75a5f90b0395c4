#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "zslen/errors.hpp"
#include "zslen/lengths.hpp"
#include "zslen/transfer.hpp"

namespace zslen {
namespace {

std::set<std::int64_t> oracle_lengths(const KrullInstance& inst, const PrimeWord& a) {
  const auto atoms = oracle::atoms(inst.group, inst.classes);
  const oracle::Counts b(a.begin(), a.end());
  return oracle::factorization_lengths(b, std::vector<oracle::Counts>(atoms.begin(), atoms.end()));
}

TEST(Krull, InstanceLayout) {
  const auto g = make_group({3});
  const std::vector<ElementId> subset{2, 1};
  const std::vector<unsigned> counts{2, 1};
  const auto inst = make_krull_instance(g, subset, counts);
  EXPECT_EQ(inst.subset, (std::vector<ElementId>{1, 2}));
  EXPECT_EQ(inst.classes, (std::vector<ElementId>{1, 1, 2}));
  EXPECT_EQ(inst.labels, (std::vector<std::string>{"p1_0", "p1_1", "p2_0"}));
  EXPECT_EQ(word_to_string(inst, {1, 2, 0}), "p1_0*p1_1^2");
  EXPECT_EQ(word_to_string(inst, {0, 0, 0}), "1");
  const std::vector<unsigned> zero{1, 0};
  EXPECT_THROW(make_krull_instance(g, subset, zero), InvalidArgument);
}

TEST(Krull, RandomInstanceIsSurjectiveAndSeeded) {
  const auto g = make_group({2, 2});
  const auto s = nonzero_elements(g);
  const auto a = random_krull_instance(g, s, 5);
  const auto b = random_krull_instance(g, s, 5);
  EXPECT_EQ(a.classes, b.classes);
  for (const auto c : s) {
    const auto n = std::count(a.classes.begin(), a.classes.end(), c);
    EXPECT_GE(n, 1);
    EXPECT_LE(n, 3);
  }
}

TEST(Beta, Examples) {
  const auto g = make_group({3});
  const std::vector<ElementId> s{1, 2};
  const auto inst = make_krull_instance(g, s, 1u);
  EXPECT_EQ(beta(inst, {1, 1}), Sequence(g, {{1, 1}, {2, 1}}));
  EXPECT_TRUE(beta(inst, {0, 0}).empty());
  EXPECT_THROW(beta(inst, {1, 0}), InvalidArgument);
  EXPECT_FALSE(in_monoid(inst, {2, 0}));
  EXPECT_TRUE(in_monoid(inst, {3, 0}));
}

TEST(Beta, ImagesAreZeroSumAndMultiplicative) {
  const auto g = make_group({4});
  const auto inst = make_krull_instance(g, all_elements(g), 2u);
  KrullMonoid h(inst);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, h.atoms().size() - 1);
  for (int i = 0; i < 100; ++i) {
    PrimeWord a(inst.primes(), 0), b(inst.primes(), 0), ab(inst.primes(), 0);
    const auto& u = h.atoms()[pick(rng)];
    const auto& v = h.atoms()[pick(rng)];
    for (std::size_t j = 0; j < a.size(); ++j) {
      a[j] = u[j];
      b[j] = v[j];
      ab[j] = u[j] + v[j];
    }
    EXPECT_TRUE(beta(inst, a).is_zero_sum());
    EXPECT_EQ(beta(inst, ab), mul(beta(inst, a), beta(inst, b)));
  }
}

TEST(DirectLengths, Examples) {
  const auto g = make_group({3});
  const std::vector<ElementId> s{1, 2};
  const auto one = make_krull_instance(g, s, 1u);
  EXPECT_EQ(direct_length_set(one, {3, 3}), LengthSet({2, 3}));
  EXPECT_EQ(direct_length_set(one, {1, 1}), LengthSet({1}));
  const std::vector<unsigned> counts{2, 1};
  const auto two = make_krull_instance(g, s, counts);
  const PrimeWord a{1, 2, 3};
  const auto want = oracle_lengths(two, a);
  EXPECT_EQ(direct_length_set(two, a), LengthSet(std::vector<std::int64_t>(want.begin(), want.end())));
  EXPECT_THROW(direct_length_set(two, {1, 0, 0}), InvalidArgument);
}

TEST(DirectLengths, AtomsMatchOracle) {
  for (const auto& g : {make_group({3}), make_group({4}), make_group({2, 2})}) {
    const auto inst = make_krull_instance(g, nonzero_elements(g), 2u);
    KrullMonoid h(inst);
    const auto want = oracle::atoms(g, inst.classes);
    ASSERT_EQ(h.atoms().size(), want.size()) << g.to_string();
    for (const auto& a : h.atoms()) {
      EXPECT_TRUE(want.contains(oracle::Counts(a.begin(), a.end())));
      EXPECT_TRUE(h.is_atom(a));
    }
  }
}

TEST(DirectLengths, RandomWordsMatchOracleAndTransfer) {
  const auto g = make_group({4});
  const auto inst = make_krull_instance(g, nonzero_elements(g), 2u);
  KrullMonoid h(inst);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> pick(0, h.atoms().size() - 1);
  std::uniform_int_distribution<int> count(1, 3);
  for (int i = 0; i < 60; ++i) {
    PrimeWord a(inst.primes(), 0);
    for (int k = count(rng); k > 0; --k) {
      const auto& u = h.atoms()[pick(rng)];
      for (std::size_t j = 0; j < a.size(); ++j) a[j] += u[j];
    }
    const auto want = oracle_lengths(inst, a);
    const LengthSet expected(std::vector<std::int64_t>(want.begin(), want.end()));
    EXPECT_EQ(h.length_set(a), expected) << word_to_string(inst, a);
    EXPECT_EQ(length_set(beta(inst, a), enumerate_atoms(g, inst.subset)), expected);
  }
}

TEST(CheckTransfer, PassesOnSmallGroups) {
  for (const auto& g : {make_group({3}), make_group({4}), make_group({2, 2})}) {
    const auto inst = make_krull_instance(g, all_elements(g), 2u);
    const auto r = check_transfer(inst, 100, 12, 42);
    EXPECT_EQ(r.samples, 100u);
    EXPECT_TRUE(r.ok()) << g.to_string() << ": " << r.failure;
    EXPECT_EQ(r.seed, 42u);
  }
  const auto g = make_group({3});
  const auto one = make_krull_instance(g, all_elements(g), 1u);
  EXPECT_TRUE(check_transfer(one, 50, 10, 1).ok());
}

TEST(CheckTransfer, Deterministic) {
  const auto g = make_group({2, 2});
  const auto inst = random_krull_instance(g, all_elements(g), 3);
  const auto a = check_transfer(inst, 30, 10, 77);
  const auto b = check_transfer(inst, 30, 10, 77);
  EXPECT_EQ(a.passes, b.passes);
  EXPECT_EQ(a.failure, b.failure);
}

TEST(AtomCorrespondence, CrossEnumeration) {
  for (const auto& g : {make_group({3}), make_group({4}), make_group({2, 2})}) {
    const auto inst = make_krull_instance(g, all_elements(g), 2u);
    const auto r = check_atom_correspondence(inst);
    EXPECT_TRUE(r.ok()) << g.to_string();
    EXPECT_GT(r.words_checked, r.h_atoms);
    EXPECT_EQ(r.h_atoms, KrullMonoid(inst).atoms().size());
  }
}

}  // namespace
}  // namespace zslen
