#include "nearcube/planar.hpp"

#include <algorithm>
#include <set>

namespace nearcube {

namespace {

void require_planar(const PolyBox& set) {
  if (set.dim() != 2) throw DimensionMismatch("planar routine needs a 2D set");
}

PolyBox strip(const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1) {
  if (!(x0 < x1) || !(y0 < y1)) return PolyBox::empty(2);
  return PolyBox::from_box(Box({{x0, x1}, {y0, y1}}));
}

bool in_range(const Rational& x, const Rational& lo, const Rational& hi) { return lo <= x && x <= hi; }

}  // namespace

Rational enclosing_margin(const PolyBox& set) {
  require_planar(set);
  const auto hull = bounding_box(set);
  if (!hull) return Rational(0);
  Rational eps(0);
  for (std::size_t i = 0; i < 2; ++i) {
    eps = max(eps, -(*hull)[i].lo);
    eps = max(eps, (*hull)[i].hi - Rational(1));
  }
  return eps;
}

bool is_near_square(const PolyBox& set, const Rational& eps) {
  require_planar(set);
  const PolyBox unit = PolyBox::from_box(Box::cube(2, 0, 1));
  const PolyBox outer = PolyBox::from_box(Box::cube(2, -eps, Rational(1) + eps));
  return contains_ae(set, unit) && contains_ae(outer, set);
}

PolyBox transpose(const PolyBox& set) {
  require_planar(set);
  std::vector<Box> boxes;
  boxes.reserve(set.size());
  for (const auto& b : set.boxes()) boxes.emplace_back(std::vector<Interval>{b[1], b[0]});
  return PolyBox::make(2, boxes);
}

bool profiles_complement(const PolyBox& set, const Interval& upper_columns, const Interval& lower_columns,
                         const Vec& v) {
  require_planar(set);
  if (v.size() != 2) throw DimensionMismatch("complement shift must be planar");
  if (lower_columns.lo + v[0] != upper_columns.lo || lower_columns.hi + v[0] != upper_columns.hi) return false;
  if (!upper_columns.proper()) return false;

  const auto hull = bounding_box(set);
  if (!hull) return false;
  const Rational& c = upper_columns.lo;
  const Rational& d = upper_columns.hi;
  const Rational ylo = min(min(Rational(0), (*hull)[1].lo), (*hull)[1].lo + v[1]) - Rational(1);
  const Rational yhi = max(max(Rational(0), (*hull)[1].hi), v[1]) + Rational(1);

  const PolyBox upper = unite(intersect(set, strip(c, d, 0, yhi)), strip(c, d, ylo, 0));
  const PolyBox lower_raw = unite(intersect(set, strip(lower_columns.lo, lower_columns.hi, ylo - v[1], 0)),
                                  strip(lower_columns.lo, lower_columns.hi, 0, yhi - v[1]));
  const PolyBox lower = translate(lower_raw, v);

  const PolyBox window = strip(c, d, ylo, yhi);
  if (!measure(intersect(upper, lower)).is_zero()) return false;
  return measure(unite(upper, lower)) == measure(window);
}

std::optional<Vec> find_complement_shift(const PolyBox& set, const Rational& a, const Rational& b,
                                         const Rational& s) {
  require_planar(set);
  if (s.sign() <= 0) throw InvalidInput("complement width must be positive");
  std::set<Rational> ys{Rational(0)};
  for (const auto& box : set.boxes()) {
    ys.insert(box[1].lo);
    ys.insert(box[1].hi);
  }
  std::set<Rational> offsets;
  for (const auto& hi : ys) {
    for (const auto& lo : ys) offsets.insert(hi - lo);
  }
  const Interval upper{b - s, b};
  const Interval lower{a, a + s};
  for (const auto& dy : offsets) {
    Vec v{b - s - a, dy};
    if (profiles_complement(set, upper, lower, v)) return v;
  }
  return std::nullopt;
}

CollinearityCheck check_shift_collinearity(const ShiftTriple& t, const Rational& eps) {
  if (!(t.s_low.sign() > 0 && t.s_low < t.s_mid && t.s_mid < t.s && t.s < Rational(2) * t.s_low)) {
    throw HypothesisViolation("shift widths must satisfy 0 < s'' < s' < s < 2s''");
  }
  CollinearityCheck out;
  const Vec d1 = t.v_mid - t.v;
  const Vec d2 = t.v_low - t.v;
  out.collinear = (d1[0] * d2[1] - d1[1] * d2[0]).is_zero();
  out.slope_quantity = (Rational(2) * t.s_low - t.s) / (t.s - t.s_low) * abs(t.v_low[1] - t.v[1]);
  out.slope_bound_holds = out.slope_quantity <= eps;
  return out;
}

LatticeExtraction extract_lattice_2d(const PolyBox& set, const std::vector<Vec>& patch,
                                     std::optional<Rational> eps) {
  require_planar(set);
  const Rational margin = eps.value_or(enclosing_margin(set));
  if (!is_near_square(set, margin)) {
    throw HypothesisViolation("set is not squeezed between [0,1]^2 and [-eps,1+eps]^2 for eps = " + margin.str());
  }
  const Rational one(1);
  const Rational two_eps = Rational(2) * margin;

  std::vector<Vec> pts = patch;
  std::sort(pts.begin(), pts.end());
  std::vector<const Vec*> us;
  std::vector<const Vec*> vs;
  for (const auto& p : pts) {
    if (p.size() != 2) throw DimensionMismatch("patch vectors must be planar");
    if (in_range(p[0], one, one + two_eps) && in_range(p[1], -two_eps, two_eps)) us.push_back(&p);
    if (in_range(p[0], 0, Rational(1, 2) + margin) && in_range(p[1], one, one + two_eps)) vs.push_back(&p);
  }

  std::optional<ExtractionError> mismatch;
  for (const auto* u : us) {
    for (const auto* v : vs) {
      for (const auto& w : pts) {
        if (!in_range(w[0], (*v)[0] + one, (*v)[0] + one + two_eps)) continue;
        if (!in_range(w[1], (*u)[1] + one, (*u)[1] + one + two_eps)) continue;
        if (w != *u + *v) {
          if (!mismatch) {
            mismatch.emplace(ExtractionError::Kind::corner_mismatch,
                             "corner translate w = " + to_string(w) + " differs from u+v = " + to_string(*u + *v),
                             *u, *v, w);
          }
          continue;
        }
        Lattice lattice(Matrix{*u, *v});
        const Box window = lattice.fundamental_window();
        const auto check = is_tiling(set, TranslationSystem::lattice_only(lattice), window);
        return {*u, *v, w, margin, std::move(lattice), window, check.holds, check.witness};
      }
    }
  }
  if (mismatch) throw *mismatch;
  throw ExtractionError(ExtractionError::Kind::no_corner, "no corner (u, v, w) found in patch");
}

}  // namespace nearcube
