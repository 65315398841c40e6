#pragma once

#include <vector>

#include "nearcube/polybox.hpp"
#include "nearcube/rational.hpp"

namespace nearcube {

/// Continuous, compactly supported, piecewise-linear function with exact
/// rational breakpoints. Zero outside [front, back] of the breakpoint list.
class PiecewiseLinear1D {
 public:
  PiecewiseLinear1D() = default;
  /// Throws InvalidInput unless breakpoints strictly increase, the lists have
  /// equal length, and the end values are 0 (continuity at the support edge).
  PiecewiseLinear1D(std::vector<Rational> breakpoints, std::vector<Rational> values);

  [[nodiscard]] const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  [[nodiscard]] const std::vector<Rational>& values() const { return values_; }

  [[nodiscard]] Rational operator()(const Rational& x) const;
  /// Exact integral (trapezoid rule is exact for piecewise-linear functions).
  [[nodiscard]] Rational integral() const;

  friend bool operator==(const PiecewiseLinear1D&, const PiecewiseLinear1D&) = default;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> values_;
};

/// g(x) = |E ∩ (E+x)| for a bounded, nonempty 1D polybox.
///
/// Candidate kinks are all differences of interval endpoints; g is evaluated
/// exactly there and, as a self-check, at the midpoint of every pair of
/// consecutive candidates (std::logic_error if a midpoint disagrees with the
/// affine interpolant).
PiecewiseLinear1D autocorrelation(const PolyBox& set);

/// Range with independently open/closed ends.
struct Range1D {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  [[nodiscard]] bool contains(const Rational& x) const;
};

/// A maximal component of a zero set: an isolated point when lo == hi.
/// Closedness flags record whether the endpoints belong to the component
/// (they can only be missing where the range itself is open).
struct ZeroComponent {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  [[nodiscard]] bool is_point() const { return lo == hi; }
  friend bool operator==(const ZeroComponent&, const ZeroComponent&) = default;
};

/// Exact zero locus of g within the range, as maximal components in
/// ascending order.
std::vector<ZeroComponent> zero_set(const PiecewiseLinear1D& g, const Range1D& range);

struct OverlapLemmaReport {
  Rational measure;
  /// Length of the convex hull of E.
  Rational hull_length;
  /// |E| = 1 and hull length < 3/2.
  bool hypotheses_hold = false;
  /// Zero set of the autocorrelation within [0, 1).
  std::vector<ZeroComponent> zeros;
  /// |E ∩ (E+x)| > 0 for every x in [0, 1).
  bool overlaps_everywhere = false;
};

/// Evaluates the overlap property on [0,1) together with its hypotheses.
/// The two are reported separately: a hypothesis failure is not a failure of
/// the property.
OverlapLemmaReport check_overlap_lemma(const PolyBox& set);

}  // namespace nearcube
