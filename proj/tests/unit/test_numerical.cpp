#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "zslen/errors.hpp"
#include "zslen/numerical.hpp"

namespace zslen {
namespace {

const std::vector<std::vector<std::int64_t>> kMonoids{{2, 3}, {3, 5, 7}, {4, 6, 9}, {5, 7, 11}, {6, 10, 15}, {3, 4}};

TEST(Numerical, Examples) {
  const auto h = make_numerical({2, 3});
  EXPECT_EQ(num_elasticity(h), Rational(3, 2));
  EXPECT_EQ(num_min_delta(h), 1);
  EXPECT_EQ(h.frobenius(), 1);
  const auto k = make_numerical({3, 5, 7});
  EXPECT_EQ(num_elasticity(k), Rational(7, 3));
  EXPECT_EQ(num_min_delta(k), 2);
  EXPECT_EQ(k.frobenius(), 4);
  EXPECT_EQ(num_length_set(k, 15), LengthSet({3, 5}));
}

TEST(Numerical, MinimalGenerators) {
  const auto h = make_numerical({2, 3, 4});
  EXPECT_EQ(std::vector<std::int64_t>(h.generators().begin(), h.generators().end()),
            (std::vector<std::int64_t>{2, 3}));
  const auto k = make_numerical({10, 6, 15, 16, 21});
  EXPECT_EQ(std::vector<std::int64_t>(k.generators().begin(), k.generators().end()),
            (std::vector<std::int64_t>{6, 10, 15}));
  const auto n0 = make_numerical({1, 5});
  EXPECT_EQ(n0.generators().size(), 1u);
  EXPECT_EQ(n0.frobenius(), -1);
  EXPECT_FALSE(num_min_delta(n0));
}

TEST(Numerical, Errors) {
  EXPECT_THROW(make_numerical({}), InvalidArgument);
  EXPECT_THROW(make_numerical({0, 3}), InvalidArgument);
  EXPECT_THROW(make_numerical({-2, 3}), InvalidArgument);
  EXPECT_THROW(make_numerical({4, 6}), InvalidArgument);
  EXPECT_THROW(num_length_set(make_numerical({3, 5}), 7), InvalidArgument);
}

TEST(Numerical, LengthSetsMatchEnumeration) {
  for (const auto& gens : kMonoids) {
    const auto h = make_numerical(gens);
    const std::vector<std::int64_t> mg(h.generators().begin(), h.generators().end());
    const auto table = num_length_sets(h, 60);
    ASSERT_EQ(table.size(), 61u);
    for (std::int64_t n = 0; n <= 60; ++n) {
      const auto want = oracle::numerical_lengths(mg, n);
      EXPECT_EQ(contains(h, n), !want.empty()) << n;
      EXPECT_EQ(table[n].has_value(), !want.empty()) << n;
      if (want.empty()) continue;
      const LengthSet expected(std::vector<std::int64_t>(want.begin(), want.end()));
      EXPECT_EQ(*table[n], expected) << "n=" << n;
      EXPECT_EQ(num_length_set(h, n), expected) << "n=" << n;
    }
  }
}

TEST(Numerical, FrobeniusAndApery) {
  for (const auto& gens : kMonoids) {
    const auto h = make_numerical(gens);
    const std::vector<std::int64_t> mg(h.generators().begin(), h.generators().end());
    EXPECT_EQ(h.frobenius(), oracle::frobenius(mg));
    const auto n1 = mg.front();
    ASSERT_EQ(h.apery().size(), static_cast<std::size_t>(n1));
    for (std::int64_t r = 0; r < n1; ++r) {
      const auto w = h.apery()[r];
      EXPECT_EQ(w % n1, r);
      EXPECT_FALSE(oracle::numerical_lengths(mg, w).empty());
      if (w >= n1) EXPECT_TRUE(oracle::numerical_lengths(mg, w - n1).empty());
    }
  }
}

TEST(Numerical, LengthBoundsAndDistances) {
  for (const auto& gens : kMonoids) {
    const auto h = make_numerical(gens);
    const auto n1 = h.generators().front();
    const auto nt = h.generators().back();
    const auto table = num_length_sets(h, 200);
    std::int64_t g = 0;
    std::int64_t least = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t n = 1; n <= 200; ++n) {
      if (!table[n]) continue;
      // n / nt <= min L, max L <= n / n1
      EXPECT_GE(table[n]->min() * nt, n);
      EXPECT_LE(table[n]->max() * n1, n);
      for (const auto x : delta_of(*table[n])) {
        g = std::gcd(g, x);
        least = std::min(least, x);
      }
    }
    if (g) {
      EXPECT_EQ(least, g);
      EXPECT_EQ(num_min_delta(h), g);
    }
  }
}

TEST(Numerical, ElasticityIsApproachedByMultiples) {
  const auto h = make_numerical({3, 5, 7});
  // n = 21 k has lengths k*3 .. k*7, so rho(L) = 7/3 exactly.
  EXPECT_EQ(elasticity_of(num_length_set(h, 21)), num_elasticity(h));
  for (std::int64_t n = 0; n <= 120; ++n)
    if (contains(h, n) && n > 0) EXPECT_LE(elasticity_of(num_length_set(h, n)), num_elasticity(h));
}

}  // namespace
}  // namespace zslen
