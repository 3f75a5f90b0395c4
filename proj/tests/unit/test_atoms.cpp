#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "zslen/atoms.hpp"
#include "zslen/errors.hpp"

namespace zslen {
namespace {

std::set<std::string> atom_strings(const AtomSet& a) {
  std::set<std::string> out;
  for (const auto& s : a.atoms()) out.insert(s.to_string());
  return out;
}

TEST(Atoms, CyclicOfOrderThree) {
  const auto a = enumerate_atoms(make_group({3}));
  EXPECT_EQ(atom_strings(a), (std::set<std::string>{"[0:1]", "[1:3]", "[2:3]", "[1:1,2:1]"}));
}

TEST(Atoms, KleinFourGroup) {
  const auto a = enumerate_atoms(make_group({2, 2}));
  EXPECT_EQ(atom_strings(a), (std::set<std::string>{"[(0,0):1]", "[(0,1):2]", "[(1,0):2]", "[(1,1):2]",
                                                    "[(0,1):1,(1,0):1,(1,1):1]"}));
}

TEST(Atoms, SubsetWithoutZero) {
  const auto g = make_group({4});
  const std::vector<ElementId> subset{1, 3};
  const auto a = enumerate_atoms(g, subset);
  EXPECT_EQ(atom_strings(a), (std::set<std::string>{"[1:4]", "[3:4]", "[1:1,3:1]"}));
}

TEST(Atoms, RejectsEmptySubset) {
  EXPECT_THROW(enumerate_atoms(make_group({3}), std::vector<ElementId>{}), InvalidArgument);
  EXPECT_THROW(enumerate_atoms(make_group({3}), std::vector<ElementId>{7}), InvalidArgument);
}

TEST(Atoms, NodeLimitRaisesResourceLimit) {
  Options o;
  o.node_limit = 50;
  try {
    enumerate_atoms(make_group({2, 2, 2, 2}), o);
    FAIL() << "expected ResourceLimit";
  } catch (const ResourceLimit& e) {
    EXPECT_EQ(e.bound(), "node_limit");
    EXPECT_EQ(e.limit(), 50u);
  }
}

TEST(Atoms, MatchesBruteForceOnSmallGroups) {
  for (const auto& moduli : std::vector<std::vector<std::int64_t>>{
           {2}, {3}, {4}, {5}, {6}, {2, 2}, {2, 4}, {2, 2, 2}, {3, 3}}) {
    const auto g = make_group(moduli);
    const auto alphabet = all_elements(g);
    const auto want = oracle::atoms(g, alphabet);
    const auto got = enumerate_atoms(g);
    std::set<oracle::Counts> got_set;
    for (const auto& d : got.dense()) got_set.insert(oracle::Counts(d.begin(), d.end()));
    EXPECT_EQ(got_set, want) << g.to_string();
    EXPECT_EQ(got.size(), want.size()) << "duplicates for " << g.to_string();
  }
}

TEST(Atoms, RandomSubsetsMatchBruteForce) {
  std::mt19937_64 rng(3);
  for (const auto& moduli : std::vector<std::vector<std::int64_t>>{{6}, {2, 4}, {3, 3}}) {
    const auto g = make_group(moduli);
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<ElementId> subset;
      for (ElementId x = 0; x < g.order(); ++x)
        if (std::bernoulli_distribution(0.5)(rng)) subset.push_back(x);
      if (subset.empty()) subset.push_back(1);
      const auto want = oracle::atoms(g, subset);
      std::set<oracle::Counts> got;
      for (const auto& d : enumerate_atoms(g, subset).dense()) got.insert(oracle::Counts(d.begin(), d.end()));
      EXPECT_EQ(got, want);
    }
  }
}

TEST(Atoms, ThreadCountDoesNotChangeResult) {
  const auto g = make_group({3, 3});
  Options one, four;
  four.threads = 4;
  EXPECT_EQ(enumerate_atoms(g, one), enumerate_atoms(g, four));
}

TEST(Atoms, IsAtom) {
  const auto g = make_group({3});
  EXPECT_TRUE(is_atom(parse_sequence(g, "[1:3]")));
  EXPECT_TRUE(is_atom(parse_sequence(g, "[0]")));
  EXPECT_FALSE(is_atom(parse_sequence(g, "[1:3,2:3]")));
  EXPECT_FALSE(is_atom(parse_sequence(g, "[1:2]")));
  EXPECT_FALSE(is_atom(Sequence(g)));
  EXPECT_FALSE(is_atom(parse_sequence(g, "[0,1,2]")));
}

TEST(Atoms, IsAtomAgreesWithBruteForceOnZeroSums) {
  const auto g = make_group({2, 4});
  const auto alphabet = all_elements(g);
  for (const auto& c : oracle::zero_sum_multisets(g, alphabet, 5)) {
    const auto s = Sequence::from_exponents(g, alphabet, ExponentVector(c.begin(), c.end()));
    if (s.empty()) continue;
    EXPECT_EQ(is_atom(s), !oracle::has_proper_zero_sum(g, alphabet, c)) << s.to_string();
  }
}

TEST(Atoms, EveryAtomIsMinimalAndTheSetIsAnAntichain) {
  const auto a = enumerate_atoms(make_group({2, 2, 2}));
  for (const auto& s : a.atoms()) EXPECT_TRUE(is_atom(s));
  for (const auto& s : a.atoms())
    for (const auto& t : a.atoms())
      if (!(s == t)) EXPECT_FALSE(divides(s, t));
}

TEST(Davenport, EqualsLowerBoundOnPGroupsAndRankTwo) {
  for (const auto& moduli : std::vector<std::vector<std::int64_t>>{
           {1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {2, 2}, {2, 2, 2}, {3, 3}, {2, 4}, {2, 2, 2, 2}}) {
    const auto g = make_group(moduli);
    const auto d = davenport(g);
    EXPECT_EQ(d.value, davenport_star(g)) << g.to_string();
    EXPECT_EQ(d.witness.length(), d.value);
    EXPECT_TRUE(is_atom(d.witness));
  }
}

TEST(Davenport, StarWitnessIsAnAtomOfThatLength) {
  for (const auto& moduli : std::vector<std::vector<std::int64_t>>{{5}, {2, 4}, {3, 3}, {2, 2, 2}, {2, 6}}) {
    const auto g = make_group(moduli);
    const auto w = davenport_star_witness(g);
    EXPECT_TRUE(is_atom(w)) << w.to_string();
    EXPECT_EQ(w.length(), davenport_star(g));
  }
}

TEST(Davenport, CyclicWitnessIsAGeneratorPower) {
  const auto d = davenport(make_group({5}));
  EXPECT_EQ(d.value, 5u);
  EXPECT_EQ(d.witness.support().size(), 1u);
}

}  // namespace
}  // namespace zslen
