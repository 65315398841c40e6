#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nearcube/box.hpp"
#include "nearcube/rational.hpp"

namespace nearcube {

enum class DegeneratePolicy { reject, drop };

/// Finite union of axis-aligned rational boxes, held in canonical form.
///
/// The canonical form is the minimal slab decomposition: the set is cut along
/// axis 0 only where its cross-section changes, each slab's cross-section is
/// canonicalized recursively, and boxes are emitted in lexicographic order of
/// their lower corner. Two polyboxes that agree up to measure zero therefore
/// have identical box lists, and canonicalization is idempotent.
class PolyBox {
 public:
  /// Union of raw intervals tuples. Tuples with lo >= hi on some axis raise
  /// DegenerateBox under `reject` and are skipped under `drop`.
  static PolyBox make(std::size_t dim, const std::vector<std::vector<Interval>>& raw,
                      DegeneratePolicy policy = DegeneratePolicy::reject);
  static PolyBox make(std::size_t dim, std::span<const Box> boxes);
  static PolyBox from_box(const Box& box);
  static PolyBox empty(std::size_t dim);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<Box>& boxes() const { return boxes_; }
  [[nodiscard]] bool empty() const { return boxes_.empty(); }
  [[nodiscard]] std::size_t size() const { return boxes_.size(); }

  friend bool operator==(const PolyBox&, const PolyBox&) = default;

 private:
  PolyBox(std::size_t dim, std::vector<Box> boxes) : dim_(dim), boxes_(std::move(boxes)) {}

  friend class PolyBoxAlgebra;

  std::size_t dim_ = 1;
  std::vector<Box> boxes_;
};

Rational measure(const PolyBox& p);
PolyBox translate(const PolyBox& p, const Vec& v);

PolyBox intersect(const PolyBox& p, const PolyBox& q);
PolyBox unite(const PolyBox& p, const PolyBox& q);
PolyBox difference(const PolyBox& p, const PolyBox& q);
PolyBox symmetric_difference(const PolyBox& p, const PolyBox& q);
/// n-ary union.
PolyBox unite(std::span<const PolyBox> parts);

bool equal_ae(const PolyBox& p, const PolyBox& q);
/// True iff q \ p has measure zero.
bool contains_ae(const PolyBox& p, const PolyBox& q);
/// Smallest box containing p; nullopt for the empty set.
std::optional<Box> bounding_box(const PolyBox& p);

PolyBox clip(const PolyBox& p, const Box& window);
/// Cartesian product p x q, axes of p first.
PolyBox product(const PolyBox& p, const PolyBox& q);
/// Cross-section {x : (x with x[axis]=level) in p}, of dimension dim-1.
/// A box contributes when lo <= level < hi on the slicing axis.
PolyBox slice(const PolyBox& p, std::size_t axis, const Rational& level);

}  // namespace nearcube
