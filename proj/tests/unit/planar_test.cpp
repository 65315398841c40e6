#include <gtest/gtest.h>

#include "nearcube/constructions.hpp"
#include "nearcube/planar.hpp"

using namespace nearcube;

namespace {

std::vector<Vec> grid_patch(const Vec& u, const Vec& v, int radius) {
  std::vector<Vec> out;
  for (int k = -radius; k <= radius; ++k) {
    for (int m = -radius; m <= radius; ++m) out.push_back(Rational(k) * u + Rational(m) * v);
  }
  return out;
}

}  // namespace

TEST(Planar, EnclosingMarginAndNearSquare) {
  const auto sq = PolyBox::from_box(Box::cube(2, 0, 1));
  EXPECT_EQ(enclosing_margin(sq), Rational(0));
  const auto bumped = unite(sq, PolyBox::from_box(Box({{Rational(1, 4), Rational(1, 2)}, {1, Rational(21, 20)}})));
  EXPECT_EQ(enclosing_margin(bumped), Rational(1, 20));
  EXPECT_TRUE(is_near_square(bumped, Rational(1, 20)));
  EXPECT_FALSE(is_near_square(bumped, Rational(1, 40)));
  EXPECT_FALSE(is_near_square(PolyBox::from_box(Box::cube(2, 0, Rational(1, 2))), Rational(1, 10)));
  EXPECT_EQ(transpose(transpose(bumped)), bumped);
}

TEST(ExtractLattice2D, UnitSquare) {
  const auto r = extract_lattice_2d(PolyBox::from_box(Box::cube(2, 0, 1)), grid_patch({1, 0}, {0, 1}, 2));
  EXPECT_EQ(r.u, (Vec{1, 0}));
  EXPECT_EQ(r.v, (Vec{0, 1}));
  EXPECT_EQ(r.w, r.u + r.v);
  EXPECT_TRUE(r.tiles);
}

TEST(ExtractLattice2D, GeneratedInstances) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto inst = build_near_square_2d(Rational(1, 40), seed);
    const auto r = extract_lattice_2d(inst.set, inst.patch, Rational(1, 40));
    SCOPED_TRACE("seed " + std::to_string(seed));
    EXPECT_EQ(r.w, r.u + r.v);
    EXPECT_EQ(r.u, inst.u);
    EXPECT_EQ(r.v, inst.v);
    EXPECT_TRUE(r.tiles);
  }
}

TEST(ExtractLattice2D, MissingCornerIsReported) {
  auto patch = grid_patch({1, 0}, {0, 1}, 2);
  std::erase(patch, Vec{1, 1});
  try {
    (void)extract_lattice_2d(PolyBox::from_box(Box::cube(2, 0, 1)), patch);
    FAIL() << "expected ExtractionError";
  } catch (const ExtractionError& e) {
    EXPECT_EQ(e.kind(), ExtractionError::Kind::no_corner);
  }
}

TEST(ExtractLattice2D, CornerMismatchIsACounterexample) {
  const std::vector<Vec> patch{{0, 0}, {1, 0}, {0, 1}, {1, Rational(21, 20)}};
  try {
    (void)extract_lattice_2d(PolyBox::from_box(Box::cube(2, 0, 1)), patch, Rational(1, 10));
    FAIL() << "expected ExtractionError";
  } catch (const ExtractionError& e) {
    EXPECT_EQ(e.kind(), ExtractionError::Kind::corner_mismatch);
    EXPECT_EQ(e.u(), (Vec{1, 0}));
    EXPECT_EQ(e.v(), (Vec{0, 1}));
    EXPECT_EQ(e.w(), (Vec{1, Rational(21, 20)}));
  }
}

TEST(ExtractLattice2D, HypothesisViolation) {
  const auto big = PolyBox::from_box(Box::cube(2, 0, 2));
  EXPECT_THROW((void)extract_lattice_2d(big, grid_patch({2, 0}, {0, 2}, 1), Rational(1, 40)), HypothesisViolation);
}

TEST(ComplementShifts, CollinearWithSlopeBound) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Rational eps(1, 40);
    const auto cfg = build_complement_config(eps, seed);
    SCOPED_TRACE("seed " + std::to_string(seed));
    ASSERT_TRUE(is_near_square(cfg.set, eps));
    ShiftTriple triple{{}, {}, {}, cfg.widths[0], cfg.widths[1], cfg.widths[2]};
    std::array<Vec*, 3> slots{&triple.v, &triple.v_mid, &triple.v_low};
    for (std::size_t k = 0; k < 3; ++k) {
      const auto v = find_complement_shift(cfg.set, cfg.a, cfg.b, cfg.widths[k]);
      ASSERT_TRUE(v.has_value());
      EXPECT_EQ(*v, cfg.expected_shifts[k]);
      EXPECT_TRUE(profiles_complement(cfg.set, {cfg.b - cfg.widths[k], cfg.b}, {cfg.a, cfg.a + cfg.widths[k]}, *v));
      *slots[k] = *v;
    }
    const auto check = check_shift_collinearity(triple, eps);
    EXPECT_TRUE(check.collinear);
    EXPECT_TRUE(check.slope_bound_holds);
    EXPECT_LE(check.slope_quantity, eps);
    // independent collinearity: zero cross product
    const Vec d1 = triple.v_mid - triple.v;
    const Vec d2 = triple.v_low - triple.v;
    EXPECT_EQ(d1[0] * d2[1], d1[1] * d2[0]);
  }
}

TEST(ComplementShifts, WrongShiftIsRejected) {
  const auto cfg = build_complement_config(Rational(1, 40), 3);
  Vec off = cfg.expected_shifts[0];
  off[1] += Rational(1, 1000);
  EXPECT_FALSE(profiles_complement(cfg.set, {cfg.b - cfg.widths[0], cfg.b}, {cfg.a, cfg.a + cfg.widths[0]}, off));
}
