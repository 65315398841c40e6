#include <gtest/gtest.h>

#include "nearcube/box.hpp"
#include "nearcube/error.hpp"

using nearcube::Box;
using nearcube::Interval;
using nearcube::Rational;

TEST(Box, RejectsDegenerateAndEmpty) {
  EXPECT_THROW(Box({{Rational(1), Rational(1)}}), nearcube::DegenerateBox);
  EXPECT_THROW(Box({{Rational(0), Rational(1)}, {Rational(2), Rational(1)}}), nearcube::DegenerateBox);
  EXPECT_THROW(Box(std::vector<Interval>{}), nearcube::InvalidInput);
}

TEST(Box, MeasureAndCorners) {
  const Box b({{Rational(0), Rational(1, 2)}, {Rational(-1), Rational(2)}});
  EXPECT_EQ(b.measure(), Rational(3, 2));
  EXPECT_EQ(b.lo(), (nearcube::Vec{0, -1}));
  EXPECT_EQ(b.midpoint(), (nearcube::Vec{Rational(1, 4), Rational(1, 2)}));
  EXPECT_EQ(Box::cube(3, 0, 2).measure(), Rational(8));
}

TEST(Box, IntersectionNeedsPositiveMeasure) {
  const Box a = Box::cube(2, 0, 1);
  EXPECT_FALSE(a.intersection(a.translated({1, 0})).has_value());
  const auto c = a.intersection(a.translated({Rational(1, 2), Rational(1, 4)}));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->measure(), Rational(3, 8));
  EXPECT_TRUE(a.overlaps(a.translated({Rational(1, 2), 0})));
  EXPECT_FALSE(a.overlaps(a.translated({1, 1})));
}

TEST(Box, ContainmentAndInterior) {
  const Box a = Box::cube(2, 0, 1);
  EXPECT_TRUE(a.contains(Box::cube(2, Rational(1, 4), 1)));
  EXPECT_FALSE(a.contains(Box::cube(2, Rational(1, 4), 2)));
  EXPECT_TRUE(a.contains_interior({Rational(1, 2), Rational(1, 2)}));
  EXPECT_FALSE(a.contains_interior({0, Rational(1, 2)}));
}

TEST(Box, ParseAndPrint) {
  const Box b = nearcube::parse_box("[0,2]x[1/2, 3/4]");
  EXPECT_EQ(b.str(), "[0/1,2/1]x[1/2,3/4]");
  EXPECT_EQ(nearcube::parse_box(b.str()), b);
  EXPECT_THROW((void)nearcube::parse_box("[0,2"), nearcube::InvalidInput);
  EXPECT_THROW((void)nearcube::parse_box("[1,0]"), nearcube::DegenerateBox);
}
