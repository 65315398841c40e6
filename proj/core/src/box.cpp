#include "nearcube/box.hpp"

#include <cctype>

#include "nearcube/error.hpp"

namespace nearcube {

Box::Box(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  if (intervals_.empty()) throw InvalidInput("box must have dimension >= 1");
  for (std::size_t axis = 0; axis < intervals_.size(); ++axis) {
    if (!intervals_[axis].proper()) {
      throw DegenerateBox("degenerate interval [" + intervals_[axis].lo.str() + ", " +
                          intervals_[axis].hi.str() + "] on axis " + std::to_string(axis));
    }
  }
}

Box Box::cube(std::size_t dim, const Rational& lo, const Rational& hi) {
  return Box(std::vector<Interval>(dim, Interval{lo, hi}));
}

Box Box::from_corners(const Vec& lo, const Vec& hi) {
  if (lo.size() != hi.size()) throw DimensionMismatch("box corners of different dimensions");
  std::vector<Interval> iv;
  iv.reserve(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) iv.push_back({lo[i], hi[i]});
  return Box(std::move(iv));
}

Vec Box::lo() const {
  Vec out;
  out.reserve(dim());
  for (const auto& iv : intervals_) out.push_back(iv.lo);
  return out;
}

Vec Box::hi() const {
  Vec out;
  out.reserve(dim());
  for (const auto& iv : intervals_) out.push_back(iv.hi);
  return out;
}

Vec Box::midpoint() const {
  Vec out;
  out.reserve(dim());
  for (const auto& iv : intervals_) out.push_back((iv.lo + iv.hi) / Rational(2));
  return out;
}

Rational Box::measure() const {
  Rational m(1);
  for (const auto& iv : intervals_) m *= iv.length();
  return m;
}

Box Box::translated(const Vec& v) const {
  if (v.size() != dim()) throw DimensionMismatch("translation vector dimension mismatch");
  std::vector<Interval> iv = intervals_;
  for (std::size_t i = 0; i < iv.size(); ++i) {
    iv[i].lo += v[i];
    iv[i].hi += v[i];
  }
  return Box(std::move(iv));
}

std::optional<Box> Box::intersection(const Box& other) const {
  if (other.dim() != dim()) throw DimensionMismatch("box intersection dimension mismatch");
  std::vector<Interval> iv;
  iv.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Interval cut{max(intervals_[i].lo, other[i].lo), min(intervals_[i].hi, other[i].hi)};
    if (!cut.proper()) return std::nullopt;
    iv.push_back(std::move(cut));
  }
  return Box(std::move(iv));
}

bool Box::overlaps(const Box& other) const {
  if (other.dim() != dim()) throw DimensionMismatch("box overlap dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!(intervals_[i].lo < other[i].hi && other[i].lo < intervals_[i].hi)) return false;
  }
  return true;
}

bool Box::contains_interior(const Vec& p) const {
  if (p.size() != dim()) throw DimensionMismatch("point dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!(intervals_[i].lo < p[i] && p[i] < intervals_[i].hi)) return false;
  }
  return true;
}

bool Box::contains(const Box& other) const {
  if (other.dim() != dim()) throw DimensionMismatch("box containment dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (other[i].lo < intervals_[i].lo || intervals_[i].hi < other[i].hi) return false;
  }
  return true;
}

std::string Box::str() const {
  std::string out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) out += "x";
    out += "[" + intervals_[i].lo.str() + "," + intervals_[i].hi.str() + "]";
  }
  return out;
}

Box parse_box(const std::string& text) {
  std::vector<Interval> iv;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] != '[') throw InvalidInput("malformed box: '" + text + "'");
    const auto comma = text.find(',', pos);
    const auto close = text.find(']', pos);
    if (comma == std::string::npos || close == std::string::npos || comma > close) {
      throw InvalidInput("malformed box: '" + text + "'");
    }
    iv.push_back({Rational::parse(text.substr(pos + 1, comma - pos - 1)),
                  Rational::parse(text.substr(comma + 1, close - comma - 1))});
    pos = close + 1;
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != 'x' && text[pos] != 'X' && text[pos] != '*') {
      throw InvalidInput("malformed box: '" + text + "'");
    }
    ++pos;
  }
  return Box(std::move(iv));
}

}  // namespace nearcube
