#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "zslen/errors.hpp"
#include "zslen/sequence.hpp"

namespace zslen {
namespace {

TEST(Sequence, SigmaAndZeroSum) {
  const auto g = make_group({3});
  const auto s = parse_sequence(g, "[1:3,2:3]");
  EXPECT_EQ(s.length(), 6u);
  EXPECT_TRUE(s.is_zero_sum());
  EXPECT_EQ(sigma(parse_sequence(g, "[1:2]")).id(), 2u);
  EXPECT_EQ(sigma(Sequence(g)).id(), 0u);
  EXPECT_TRUE(is_zero_sum(Sequence(g)));
}

TEST(Sequence, ParsingMergesAndPrintsCanonically) {
  const auto g = make_group({2, 2});
  const auto s = parse_sequence(g, "[(1,1), (0,1):2, (1,1)]");
  EXPECT_EQ(s.to_string(), "[(0,1):2,(1,1):2]");
  EXPECT_EQ(parse_sequence(g, "[]").to_string(), "[]");
  EXPECT_THROW(parse_sequence(g, "[(1,1):x]"), InvalidArgument);
  EXPECT_THROW(parse_sequence(g, "(1,1)"), InvalidArgument);
}

TEST(Sequence, NegateMulQuotient) {
  const auto g = make_group({5});
  const auto s = parse_sequence(g, "[1:2,3]");
  EXPECT_EQ(negate(s).to_string(), "[2:1,4:2]");
  const auto t = parse_sequence(g, "[1]");
  EXPECT_EQ(mul(s, t).to_string(), "[1:3,3:1]");
  EXPECT_TRUE(divides(t, s));
  EXPECT_EQ(quotient(s, t).to_string(), "[1:1,3:1]");
  EXPECT_FALSE(divides(parse_sequence(g, "[2]"), s));
  EXPECT_THROW(quotient(s, parse_sequence(g, "[2]")), InvalidArgument);
  EXPECT_THROW(mul(s, Sequence(make_group({3}))), InvalidArgument);
}

TEST(Sequence, CanonicalOrderIsLengthThenExponents) {
  const auto g = make_group({3});
  EXPECT_LT(parse_sequence(g, "[2:2]"), parse_sequence(g, "[0:3]"));
  EXPECT_LT(parse_sequence(g, "[1,2]"), parse_sequence(g, "[0,1]"));
  EXPECT_LT(Sequence(g), parse_sequence(g, "[0]"));
}

TEST(Sequence, ExponentsRoundTrip) {
  const auto g = make_group({2, 2});
  const auto alphabet = nonzero_elements(g);
  const auto s = parse_sequence(g, "[(0,1):2,(1,1)]");
  const auto e = s.exponents(alphabet);
  EXPECT_EQ(Sequence::from_exponents(g, alphabet, e), s);
  EXPECT_THROW(parse_sequence(g, "[(0,0)]").exponents(alphabet), InvalidArgument);
}

TEST(Sequence, ZeroSumEnumerationMatchesBruteForce) {
  for (const auto& moduli : std::vector<std::vector<std::int64_t>>{{3}, {4}, {2, 2}, {5}}) {
    const auto g = make_group(moduli);
    const auto alphabet = all_elements(g);
    std::vector<ExponentVector> got;
    for_each_zero_sum(g, alphabet, 6, [&](const ExponentVector& e) { got.push_back(e); });
    auto want = oracle::zero_sum_multisets(g, alphabet, 6);
    // Order: length ascending, then lexicographic.
    for (std::size_t i = 1; i < got.size(); ++i) {
      const auto la = std::accumulate(got[i - 1].begin(), got[i - 1].end(), 0u);
      const auto lb = std::accumulate(got[i].begin(), got[i].end(), 0u);
      EXPECT_TRUE(la < lb || (la == lb && got[i - 1] < got[i]));
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << g.to_string();
  }
}

TEST(Sequence, ZeroSumEnumerationOverSubset) {
  const auto g = make_group({6});
  const std::vector<ElementId> subset{2, 3};
  const auto seqs = enumerate_zero_sum(g, subset, 6);
  std::vector<std::string> text;
  for (const auto& s : seqs) text.push_back(s.to_string());
  EXPECT_EQ(text, (std::vector<std::string>{"[]", "[3:2]", "[2:3]", "[3:4]", "[2:3,3:2]", "[3:6]", "[2:6]"}));
}

TEST(Sequence, EnumerationWithZeroBound) {
  const auto g = make_group({3});
  EXPECT_EQ(enumerate_zero_sum(g, all_elements(g), 0).size(), 1u);
}

TEST(Sequence, RandomAlgebraLaws) {
  std::mt19937_64 rng(11);
  const auto g = make_group({2, 4});
  std::uniform_int_distribution<ElementId> el(0, 7);
  std::uniform_int_distribution<int> len(0, 6);
  auto random_seq = [&] {
    std::vector<Sequence::Term> t;
    for (int i = len(rng); i > 0; --i) t.emplace_back(el(rng), 1);
    return Sequence(g, t);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_seq(), b = random_seq();
    const auto ab = mul(a, b);
    EXPECT_EQ(ab, mul(b, a));
    EXPECT_EQ(ab.length(), a.length() + b.length());
    EXPECT_EQ(sigma(ab).id(), g.add(sigma(a).id(), sigma(b).id()));
    EXPECT_EQ(quotient(ab, b), a);
    EXPECT_EQ(negate(negate(a)), a);
    EXPECT_EQ(g.add(sigma(a).id(), sigma(negate(a)).id()), 0u);
  }
}

}  // namespace
}  // namespace zslen
