#include <gtest/gtest.h>

#include "zslen/errors.hpp"
#include "zslen/length_set.hpp"

namespace zslen {
namespace {

TEST(LengthSet, NormalizesAndValidates) {
  const LengthSet l{4, 2, 2, 3};
  EXPECT_EQ(l.to_string(), "{2,3,4}");
  EXPECT_TRUE(l.is_interval());
  EXPECT_EQ(LengthSet().to_string(), "{0}");
  EXPECT_THROW(LengthSet(std::vector<std::int64_t>{}), InvalidArgument);
  EXPECT_THROW(LengthSet({-1, 2}), InvalidArgument);
}

TEST(LengthSet, Distances) {
  EXPECT_EQ(delta_of({2, 3}), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(delta_of({2, 4, 7}), (std::vector<std::int64_t>{2, 3}));
  EXPECT_TRUE(delta_of({5}).empty());
  EXPECT_EQ(delta_of({1, 3, 5, 6}), (std::vector<std::int64_t>{1, 2}));
}

TEST(LengthSet, Elasticity) {
  EXPECT_EQ(elasticity_of({2, 3}), Rational(3, 2));
  EXPECT_EQ(elasticity_of({0}), Rational(1));
  EXPECT_EQ(elasticity_of({2, 7}), Rational(7, 2));
  EXPECT_EQ(elasticity_of({4, 6}).to_string(), "3/2");
  EXPECT_THROW(elasticity_of({0, 1}), InvalidArgument);
}

TEST(LengthSet, SumsetShiftDilate) {
  EXPECT_EQ(sumset({2, 3}, {2, 3}), LengthSet({4, 5, 6}));
  EXPECT_EQ(shift({0, 1}, 3), LengthSet({3, 4}));
  EXPECT_EQ(shift({3, 4}, -3), LengthSet({0, 1}));
  EXPECT_THROW(shift({1, 2}, -2), InvalidArgument);
  EXPECT_EQ(dilate(2, {0, 1, 2}), LengthSet({0, 2, 4}));
  EXPECT_EQ(dilate(0, {1, 2}), LengthSet({0}));
  EXPECT_THROW(dilate(-1, {1}), InvalidArgument);
}

TEST(LengthSet, OrderingIsLexicographic) {
  EXPECT_LT(LengthSet({1}), LengthSet({2}));
  EXPECT_LT(LengthSet({2, 3}), LengthSet({2, 4}));
  EXPECT_LT(LengthSet({2}), LengthSet({2, 3}));
}

TEST(Rational, Basics) {
  EXPECT_EQ(Rational(6, 4), Rational(3, 2));
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  EXPECT_LT(Rational(2, 3), Rational(3, 4));
  EXPECT_DOUBLE_EQ(Rational(5, 2).to_double(), 2.5);
  EXPECT_THROW(Rational(1, 0), InvalidArgument);
}

}  // namespace
}  // namespace zslen
