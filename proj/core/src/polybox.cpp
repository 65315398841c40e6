#include "nearcube/polybox.hpp"

#include <algorithm>

#include "nearcube/error.hpp"

namespace nearcube {

namespace {

enum class SetOp { unite, intersect, difference, symm_diff };

bool apply(SetOp op, bool in_a, bool in_b) {
  switch (op) {
    case SetOp::unite: return in_a || in_b;
    case SetOp::intersect: return in_a && in_b;
    case SetOp::difference: return in_a && !in_b;
    case SetOp::symm_diff: return in_a != in_b;
  }
  return false;
}

using Tuple = std::vector<Interval>;
using Rows = std::vector<const std::vector<Interval>*>;

struct Slab {
  Rational lo;
  Rational hi;
  std::vector<Tuple> section;
};

// Canonical decomposition of op(A, B) restricted to axes [axis, dim).
// Input tuples are full-dimensional interval lists; only axes >= axis are read.
std::vector<Tuple> sweep(const Rows& a, const Rows& b, std::size_t axis, std::size_t dim, SetOp op) {
  if (axis == dim) {
    if (apply(op, !a.empty(), !b.empty())) return {Tuple{}};
    return {};
  }
  if (a.empty() && b.empty()) return {};

  std::vector<Rational> coords;
  coords.reserve(2 * (a.size() + b.size()));
  for (const auto* rows : {&a, &b}) {
    for (const auto* t : *rows) {
      coords.push_back((*t)[axis].lo);
      coords.push_back((*t)[axis].hi);
    }
  }
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

  std::vector<Slab> slabs;
  Rows prev_a;
  Rows prev_b;
  std::vector<Tuple> prev_section;
  bool have_prev = false;

  for (std::size_t i = 0; i + 1 < coords.size(); ++i) {
    const Rational& lo = coords[i];
    const Rational& hi = coords[i + 1];
    Rows cur_a;
    Rows cur_b;
    for (const auto* t : a) {
      if ((*t)[axis].lo <= lo && hi <= (*t)[axis].hi) cur_a.push_back(t);
    }
    for (const auto* t : b) {
      if ((*t)[axis].lo <= lo && hi <= (*t)[axis].hi) cur_b.push_back(t);
    }
    std::vector<Tuple> section;
    if (have_prev && cur_a == prev_a && cur_b == prev_b) {
      section = prev_section;
    } else {
      section = sweep(cur_a, cur_b, axis + 1, dim, op);
    }
    if (!section.empty()) {
      if (!slabs.empty() && slabs.back().hi == lo && slabs.back().section == section) {
        slabs.back().hi = hi;
      } else {
        slabs.push_back({lo, hi, section});
      }
    }
    prev_a = std::move(cur_a);
    prev_b = std::move(cur_b);
    prev_section = std::move(section);
    have_prev = true;
  }

  std::vector<Tuple> out;
  for (const auto& slab : slabs) {
    for (const auto& rest : slab.section) {
      Tuple t;
      t.reserve(dim - axis);
      t.push_back({slab.lo, slab.hi});
      t.insert(t.end(), rest.begin(), rest.end());
      out.push_back(std::move(t));
    }
  }
  return out;
}

void check_dims(const PolyBox& p, const PolyBox& q, const char* what) {
  if (p.dim() != q.dim()) {
    throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(p.dim()) +
                            " and " + std::to_string(q.dim()));
  }
}

}  // namespace

class PolyBoxAlgebra {
 public:
  static PolyBox combine(std::size_t dim, const std::vector<Tuple>& a,
                         const std::vector<Tuple>& b, SetOp op) {
    Rows ra;
    Rows rb;
    ra.reserve(a.size());
    rb.reserve(b.size());
    for (const auto& t : a) ra.push_back(&t);
    for (const auto& t : b) rb.push_back(&t);
    std::vector<Box> boxes;
    for (auto& t : sweep(ra, rb, 0, dim, op)) boxes.emplace_back(std::move(t));
    return PolyBox(dim, std::move(boxes));
  }

  static std::vector<Tuple> tuples(const PolyBox& p) {
    std::vector<Tuple> out;
    out.reserve(p.size());
    for (const auto& b : p.boxes()) out.push_back(b.intervals());
    return out;
  }

  static PolyBox binary(const PolyBox& p, const PolyBox& q, SetOp op) {
    return combine(p.dim(), tuples(p), tuples(q), op);
  }

  static PolyBox trusted(std::size_t dim, std::vector<Box> boxes) {
    return PolyBox(dim, std::move(boxes));
  }
};

PolyBox PolyBox::make(std::size_t dim, const std::vector<std::vector<Interval>>& raw,
                      DegeneratePolicy policy) {
  if (dim == 0) throw InvalidInput("polybox dimension must be positive");
  std::vector<Tuple> kept;
  kept.reserve(raw.size());
  for (const auto& t : raw) {
    if (t.size() != dim) {
      throw DimensionMismatch("box of dimension " + std::to_string(t.size()) +
                              " in polybox of dimension " + std::to_string(dim));
    }
    const bool proper = std::all_of(t.begin(), t.end(), [](const Interval& iv) { return iv.proper(); });
    if (!proper) {
      if (policy == DegeneratePolicy::drop) continue;
      (void)Box(t);  // throws DegenerateBox naming the offending axis
    }
    kept.push_back(t);
  }
  return PolyBoxAlgebra::combine(dim, kept, {}, SetOp::unite);
}

PolyBox PolyBox::make(std::size_t dim, std::span<const Box> boxes) {
  std::vector<Tuple> raw;
  raw.reserve(boxes.size());
  for (const auto& b : boxes) raw.push_back(b.intervals());
  return make(dim, raw);
}

PolyBox PolyBox::from_box(const Box& box) { return PolyBox(box.dim(), {box}); }

PolyBox PolyBox::empty(std::size_t dim) {
  if (dim == 0) throw InvalidInput("polybox dimension must be positive");
  return PolyBox(dim, {});
}

Rational measure(const PolyBox& p) {
  Rational m(0);
  for (const auto& b : p.boxes()) m += b.measure();
  return m;
}

PolyBox translate(const PolyBox& p, const Vec& v) {
  if (v.size() != p.dim()) throw DimensionMismatch("translate: vector dimension mismatch");
  std::vector<Box> boxes;
  boxes.reserve(p.size());
  for (const auto& b : p.boxes()) boxes.push_back(b.translated(v));
  // translation preserves the canonical order and the slab structure
  return PolyBoxAlgebra::trusted(p.dim(), std::move(boxes));
}

PolyBox intersect(const PolyBox& p, const PolyBox& q) {
  check_dims(p, q, "intersect");
  return PolyBoxAlgebra::binary(p, q, SetOp::intersect);
}

PolyBox unite(const PolyBox& p, const PolyBox& q) {
  check_dims(p, q, "union");
  return PolyBoxAlgebra::binary(p, q, SetOp::unite);
}

PolyBox difference(const PolyBox& p, const PolyBox& q) {
  check_dims(p, q, "difference");
  return PolyBoxAlgebra::binary(p, q, SetOp::difference);
}

PolyBox symmetric_difference(const PolyBox& p, const PolyBox& q) {
  check_dims(p, q, "symmetric difference");
  return PolyBoxAlgebra::binary(p, q, SetOp::symm_diff);
}

PolyBox unite(std::span<const PolyBox> parts) {
  if (parts.empty()) throw InvalidInput("union of no polyboxes has no dimension");
  std::vector<Tuple> all;
  for (const auto& p : parts) {
    check_dims(parts.front(), p, "union");
    for (const auto& b : p.boxes()) all.push_back(b.intervals());
  }
  return PolyBoxAlgebra::combine(parts.front().dim(), all, {}, SetOp::unite);
}

bool equal_ae(const PolyBox& p, const PolyBox& q) {
  check_dims(p, q, "equal_ae");
  return measure(symmetric_difference(p, q)).is_zero();
}

bool contains_ae(const PolyBox& p, const PolyBox& q) {
  check_dims(p, q, "contains_ae");
  return measure(difference(q, p)).is_zero();
}

std::optional<Box> bounding_box(const PolyBox& p) {
  if (p.empty()) return std::nullopt;
  Vec lo = p.boxes().front().lo();
  Vec hi = p.boxes().front().hi();
  for (const auto& b : p.boxes()) {
    for (std::size_t i = 0; i < p.dim(); ++i) {
      lo[i] = min(lo[i], b[i].lo);
      hi[i] = max(hi[i], b[i].hi);
    }
  }
  return Box::from_corners(lo, hi);
}

PolyBox clip(const PolyBox& p, const Box& window) {
  if (window.dim() != p.dim()) throw DimensionMismatch("clip: window dimension mismatch");
  return intersect(p, PolyBox::from_box(window));
}

PolyBox product(const PolyBox& p, const PolyBox& q) {
  std::vector<Box> boxes;
  boxes.reserve(p.size() * q.size());
  for (const auto& a : p.boxes()) {
    for (const auto& b : q.boxes()) {
      auto iv = a.intervals();
      iv.insert(iv.end(), b.intervals().begin(), b.intervals().end());
      boxes.emplace_back(std::move(iv));
    }
  }
  return PolyBox::make(p.dim() + q.dim(), boxes);
}

PolyBox slice(const PolyBox& p, std::size_t axis, const Rational& level) {
  if (p.dim() < 2) throw DimensionMismatch("slice needs dimension >= 2");
  if (axis >= p.dim()) throw InvalidInput("slice axis out of range");
  std::vector<Box> boxes;
  for (const auto& b : p.boxes()) {
    if (b[axis].lo <= level && level < b[axis].hi) {
      auto iv = b.intervals();
      iv.erase(iv.begin() + static_cast<std::ptrdiff_t>(axis));
      boxes.emplace_back(std::move(iv));
    }
  }
  return PolyBox::make(p.dim() - 1, boxes);
}

}  // namespace nearcube
