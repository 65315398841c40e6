#include "nearcube/autocorr.hpp"

#include <algorithm>
#include <stdexcept>

#include "nearcube/error.hpp"
#include "nearcube/parallel.hpp"

namespace nearcube {

PiecewiseLinear1D::PiecewiseLinear1D(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() != values_.size()) throw InvalidInput("breakpoint and value lists differ in length");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) throw InvalidInput("breakpoints must strictly increase");
  }
  if (!values_.empty() && (!values_.front().is_zero() || !values_.back().is_zero())) {
    throw InvalidInput("piecewise-linear function must vanish at the ends of its support");
  }
}

Rational PiecewiseLinear1D::operator()(const Rational& x) const {
  if (breakpoints_.empty() || x <= breakpoints_.front() || x >= breakpoints_.back()) return Rational(0);
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const std::size_t j = static_cast<std::size_t>(it - breakpoints_.begin());
  const Rational& x0 = breakpoints_[j - 1];
  const Rational& x1 = breakpoints_[j];
  return values_[j - 1] + (values_[j] - values_[j - 1]) * (x - x0) / (x1 - x0);
}

Rational PiecewiseLinear1D::integral() const {
  Rational total(0);
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    total += (breakpoints_[i] - breakpoints_[i - 1]) * (values_[i] + values_[i - 1]) / Rational(2);
  }
  return total;
}

PiecewiseLinear1D autocorrelation(const PolyBox& set) {
  if (set.dim() != 1) throw DimensionMismatch("autocorrelation is one-dimensional");
  if (set.empty()) throw InvalidInput("autocorrelation of the empty set");

  std::vector<Rational> ends;
  for (const auto& b : set.boxes()) {
    ends.push_back(b[0].lo);
    ends.push_back(b[0].hi);
  }
  std::vector<Rational> xs;
  xs.reserve(ends.size() * ends.size());
  for (const auto& p : ends) {
    for (const auto& q : ends) xs.push_back(p - q);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  auto overlap = [&](const Rational& x) { return measure(intersect(set, translate(set, {x}))); };

  std::vector<Rational> values(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) { values[i] = overlap(xs[i]); });

  std::vector<Rational> mids(xs.size() > 0 ? xs.size() - 1 : 0);
  parallel_for(mids.size(), [&](std::size_t i) { mids[i] = overlap((xs[i] + xs[i + 1]) / Rational(2)); });
  for (std::size_t i = 0; i < mids.size(); ++i) {
    if (mids[i] != (values[i] + values[i + 1]) / Rational(2)) {
      throw std::logic_error("autocorrelation not affine between " + xs[i].str() + " and " + xs[i + 1].str());
    }
  }
  return PiecewiseLinear1D(std::move(xs), std::move(values));
}

bool Range1D::contains(const Rational& x) const {
  const bool above = lo_closed ? lo <= x : lo < x;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

std::vector<ZeroComponent> zero_set(const PiecewiseLinear1D& g, const Range1D& range) {
  if (range.hi < range.lo) throw InvalidInput("zero_set: empty range");

  std::vector<Rational> pts{range.lo};
  for (const auto& b : g.breakpoints()) {
    if (range.lo < b && b < range.hi) pts.push_back(b);
  }
  if (range.hi != range.lo) pts.push_back(range.hi);

  // closed zero pieces over [lo, hi], merged as they are produced
  std::vector<ZeroComponent> pieces;
  auto add = [&](const Rational& a, const Rational& b) {
    if (!pieces.empty() && pieces.back().hi >= a) {
      pieces.back().hi = max(pieces.back().hi, b);
      return;
    }
    pieces.push_back({a, b, true, true});
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Rational gi = g(pts[i]);
    if (gi.is_zero()) add(pts[i], pts[i]);
    if (i + 1 == pts.size()) break;
    const Rational gj = g(pts[i + 1]);
    if (gi.is_zero() && gj.is_zero()) {
      add(pts[i], pts[i + 1]);
    } else if (gi.sign() * gj.sign() < 0) {
      const Rational root = pts[i] + gi * (pts[i + 1] - pts[i]) / (gi - gj);
      add(root, root);
    }
  }

  std::vector<ZeroComponent> out;
  for (auto& c : pieces) {
    if (c.lo == range.lo && !range.lo_closed) c.lo_closed = false;
    if (c.hi == range.hi && !range.hi_closed) c.hi_closed = false;
    if (c.is_point() && !(c.lo_closed && c.hi_closed)) continue;
    out.push_back(std::move(c));
  }
  return out;
}

OverlapLemmaReport check_overlap_lemma(const PolyBox& set) {
  if (set.dim() != 1) throw DimensionMismatch("overlap lemma is one-dimensional");
  if (set.empty()) throw InvalidInput("overlap lemma: empty set");
  OverlapLemmaReport report;
  report.measure = measure(set);
  const auto hull = *bounding_box(set);
  report.hull_length = hull[0].length();
  report.hypotheses_hold = report.measure == Rational(1) && report.hull_length < Rational(3, 2);
  report.zeros = zero_set(autocorrelation(set), Range1D{0, 1, true, false});
  report.overlaps_everywhere = report.zeros.empty();
  return report;
}

}  // namespace nearcube
