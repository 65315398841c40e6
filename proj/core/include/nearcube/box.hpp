#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nearcube/rational.hpp"

namespace nearcube {

struct Interval {
  Rational lo;
  Rational hi;

  [[nodiscard]] Rational length() const { return hi - lo; }
  [[nodiscard]] bool proper() const { return lo < hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Axis-aligned product of closed rational intervals with lo < hi on every
/// axis. Boundaries carry no measure, so open/closed is irrelevant to every
/// predicate built on top of this type.
class Box {
 public:
  /// Throws DegenerateBox if lo >= hi on some axis, InvalidInput if empty.
  explicit Box(std::vector<Interval> intervals);

  static Box cube(std::size_t dim, const Rational& lo, const Rational& hi);
  static Box from_corners(const Vec& lo, const Vec& hi);

  [[nodiscard]] std::size_t dim() const { return intervals_.size(); }
  [[nodiscard]] const Interval& operator[](std::size_t axis) const { return intervals_[axis]; }
  [[nodiscard]] const std::vector<Interval>& intervals() const { return intervals_; }

  [[nodiscard]] Vec lo() const;
  [[nodiscard]] Vec hi() const;
  [[nodiscard]] Vec midpoint() const;
  [[nodiscard]] Rational measure() const;

  [[nodiscard]] Box translated(const Vec& v) const;
  /// Intersection of positive measure, if any.
  [[nodiscard]] std::optional<Box> intersection(const Box& other) const;
  [[nodiscard]] bool overlaps(const Box& other) const;
  /// True iff p lies in the open interior.
  [[nodiscard]] bool contains_interior(const Vec& p) const;
  [[nodiscard]] bool contains(const Box& other) const;

  [[nodiscard]] std::string str() const;

  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// Parses "[a,b]x[c,d]x..." with rational endpoints.
Box parse_box(const std::string& text);

}  // namespace nearcube
