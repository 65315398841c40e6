#include <gtest/gtest.h>

#include "generators.hpp"
#include "nearcube/error.hpp"
#include "nearcube/polybox.hpp"
#include "oracles.hpp"

using namespace nearcube;

namespace {

PolyBox interval(const Rational& lo, const Rational& hi) { return PolyBox::from_box(Box({{lo, hi}})); }

PolyBox example_1d() { return gen::line_set({{0, Rational(1, 2)}, {1, Rational(3, 2)}}); }

}  // namespace

TEST(PolyBox, MakeMergesOverlaps) {
  EXPECT_EQ(measure(interval(0, 1)), Rational(1));
  const auto p = PolyBox::make(1, std::vector<std::vector<Interval>>{{{0, 1}}, {{Rational(1, 2), Rational(3, 2)}}});
  EXPECT_EQ(measure(p), Rational(3, 2));
  EXPECT_EQ(p.size(), 1U);
  const auto q = PolyBox::make(2, std::vector<std::vector<Interval>>{{{0, 1}, {0, 1}},
                                                                    {{Rational(1, 2), Rational(3, 2)}, {0, 1}}});
  EXPECT_EQ(measure(q), Rational(1) + Rational(1) - Rational(1, 2));
}

TEST(PolyBox, DegeneratePolicy) {
  const std::vector<std::vector<Interval>> raw{{{0, 1}}, {{2, 2}}};
  EXPECT_THROW((void)PolyBox::make(1, raw), DegenerateBox);
  EXPECT_EQ(measure(PolyBox::make(1, raw, DegeneratePolicy::drop)), Rational(1));
}

TEST(PolyBox, DimensionMismatch) {
  const std::vector<std::vector<Interval>> raw{{{0, 1}, {0, 1}}};
  EXPECT_THROW((void)PolyBox::make(1, raw), DimensionMismatch);
  EXPECT_THROW((void)intersect(interval(0, 1), PolyBox::from_box(Box::cube(2, 0, 1))), DimensionMismatch);
  EXPECT_THROW((void)translate(interval(0, 1), {1, 1}), DimensionMismatch);
}

TEST(PolyBox, MeasureExamples) {
  EXPECT_EQ(measure(PolyBox::from_box(Box::cube(3, 0, 1))), Rational(1));
  EXPECT_EQ(measure(example_1d()), Rational(1));
}

TEST(PolyBox, TranslateExamples) {
  EXPECT_EQ(translate(interval(0, 1), {0}), interval(0, 1));
  EXPECT_EQ(translate(interval(0, 1), {Rational(3, 4)}), interval(Rational(3, 4), Rational(7, 4)));
}

TEST(PolyBox, BooleanExamples) {
  const auto i = intersect(interval(0, 1), interval(Rational(1, 2), Rational(3, 2)));
  EXPECT_EQ(i, interval(Rational(1, 2), 1));
  const auto e = example_1d();
  EXPECT_EQ(measure(intersect(e, translate(e, {Rational(1, 2)}))), Rational(0));
  EXPECT_TRUE(symmetric_difference(e, e).empty());
}

TEST(PolyBox, PredicatesAndBoundingBox) {
  EXPECT_TRUE(equal_ae(interval(0, 1), unite(interval(0, Rational(1, 2)), interval(Rational(1, 2), 1))));
  EXPECT_TRUE(contains_ae(PolyBox::from_box(Box::cube(2, Rational(-1, 10), Rational(11, 10))),
                          PolyBox::from_box(Box::cube(2, 0, 1))));
  EXPECT_FALSE(contains_ae(PolyBox::from_box(Box::cube(2, 0, 1)),
                           PolyBox::from_box(Box::cube(2, Rational(-1, 10), Rational(11, 10)))));
  EXPECT_EQ(bounding_box(example_1d()), Box({{0, Rational(3, 2)}}));
  EXPECT_FALSE(bounding_box(PolyBox::empty(2)).has_value());
}

TEST(PolyBox, CanonicalFormIgnoresHowTheSetWasCut) {
  const auto whole = PolyBox::from_box(Box::cube(2, 0, 1));
  std::vector<Box> strips;
  for (int k = 0; k < 4; ++k) strips.push_back(Box({{Rational(k, 4), Rational(k + 1, 4)}, {0, 1}}));
  std::vector<Box> rows;
  for (int k = 0; k < 3; ++k) rows.push_back(Box({{0, 1}, {Rational(k, 3), Rational(k + 1, 3)}}));
  EXPECT_EQ(PolyBox::make(2, strips), whole);
  EXPECT_EQ(PolyBox::make(2, rows), whole);
}

TEST(PolyBox, SliceAndProduct) {
  const auto l = PolyBox::make(2, std::vector<std::vector<Interval>>{{{0, 2}, {0, 1}}, {{0, 1}, {1, 2}}});
  EXPECT_EQ(slice(l, 1, Rational(3, 2)), interval(0, 1));
  EXPECT_EQ(slice(l, 1, Rational(1, 2)), interval(0, 2));
  EXPECT_TRUE(slice(l, 1, 5).empty());
  const auto p = product(interval(0, 2), interval(1, 3));
  EXPECT_EQ(p, PolyBox::from_box(Box({{0, 2}, {1, 3}})));
}

TEST(PolyBox, ClipToWindow) {
  EXPECT_EQ(clip(example_1d(), Box({{Rational(1, 4), Rational(5, 4)}})),
            gen::line_set({{Rational(1, 4), Rational(1, 2)}, {1, Rational(5, 4)}}));
}

// properties ------------------------------------------------------------------

class PolyBoxProperty : public ::testing::TestWithParam<std::size_t> {};

TEST_P(PolyBoxProperty, MeasureMatchesGridOracle) {
  const std::size_t dim = GetParam();
  gen::Source g(100 + dim);
  for (int i = 0; i < 60; ++i) {
    const auto boxes = gen::random_boxes(g, dim, static_cast<std::size_t>(g.integer(1, 5)));
    EXPECT_EQ(measure(PolyBox::make(dim, boxes)), oracle::union_measure(boxes)) << "case " << i;
  }
}

TEST_P(PolyBoxProperty, InclusionExclusion) {
  const std::size_t dim = GetParam();
  gen::Source g(200 + dim);
  for (int i = 0; i < 60; ++i) {
    const auto p = gen::random_polybox(g, dim);
    const auto q = gen::random_polybox(g, dim);
    EXPECT_EQ(measure(unite(p, q)) + measure(intersect(p, q)), measure(p) + measure(q)) << "case " << i;
  }
}

TEST_P(PolyBoxProperty, TranslationInvariance) {
  const std::size_t dim = GetParam();
  gen::Source g(300 + dim);
  for (int i = 0; i < 60; ++i) {
    const auto p = gen::random_polybox(g, dim);
    const auto v = gen::random_vec(g, dim, -3, 3);
    EXPECT_EQ(measure(translate(p, v)), measure(p));
    EXPECT_EQ(translate(translate(p, v), Rational(-1) * v), p);
  }
}

TEST_P(PolyBoxProperty, CanonicalizationIsIdempotent) {
  const std::size_t dim = GetParam();
  gen::Source g(400 + dim);
  for (int i = 0; i < 60; ++i) {
    const auto p = gen::random_polybox(g, dim);
    EXPECT_EQ(PolyBox::make(dim, p.boxes()), p);
    // equal sets give identical lists however they were built
    const auto q = gen::random_polybox(g, dim);
    EXPECT_EQ(unite(difference(p, q), intersect(p, q)), p);
  }
}

TEST_P(PolyBoxProperty, DifferencePartition) {
  const std::size_t dim = GetParam();
  gen::Source g(500 + dim);
  for (int i = 0; i < 60; ++i) {
    const auto p = gen::random_polybox(g, dim);
    const auto q = gen::random_polybox(g, dim);
    const auto a = difference(p, q);
    const auto b = intersect(p, q);
    const auto c = difference(q, p);
    EXPECT_EQ(measure(intersect(a, b)), Rational(0));
    EXPECT_EQ(measure(intersect(b, c)), Rational(0));
    EXPECT_EQ(measure(intersect(a, c)), Rational(0));
    EXPECT_EQ(measure(a) + measure(b) + measure(c), measure(unite(p, q)));
    std::vector<PolyBox> parts{a, b, c};
    EXPECT_TRUE(equal_ae(unite(parts), unite(p, q)));
    EXPECT_EQ(symmetric_difference(p, q), unite(a, c));
  }
}

TEST_P(PolyBoxProperty, MembershipMatchesOracle) {
  const std::size_t dim = GetParam();
  gen::Source g(600 + dim);
  for (int i = 0; i < 30; ++i) {
    const auto raw = gen::random_boxes(g, dim, 3);
    const auto p = PolyBox::make(dim, raw);
    for (const auto& b : p.boxes()) {
      // interior point off every raw face (raw coordinates have denominator 8)
      Vec x;
      for (std::size_t a = 0; a < dim; ++a) x.push_back(b[a].lo + b[a].length() * Rational(g.integer(1, 96), 97));
      EXPECT_TRUE(oracle::member(raw, x));
    }
    for (int k = 0; k < 20; ++k) {
      const auto x = gen::random_vec(g, dim, 0, 2, 97);
      EXPECT_EQ(oracle::member(p.boxes(), x), oracle::member(raw, x));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, PolyBoxProperty, ::testing::Values(1U, 2U, 3U));
