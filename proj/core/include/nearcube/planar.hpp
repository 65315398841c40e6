#pragma once

#include <optional>
#include <vector>

#include "nearcube/error.hpp"
#include "nearcube/lattice.hpp"
#include "nearcube/polybox.hpp"
#include "nearcube/tiling.hpp"

namespace nearcube {

/// Smallest eps >= 0 with E ⊂ [-eps, 1+eps]^2.
Rational enclosing_margin(const PolyBox& set);

/// Checks [0,1]^2 ⊂ E ⊂ [-eps,1+eps]^2 up to measure zero.
bool is_near_square(const PolyBox& set, const Rational& eps);

/// Swaps the two coordinates of a planar set.
PolyBox transpose(const PolyBox& set);

/// Column profiles of a near-square set over x1 ∈ [lo, hi]:
///   lower(lo,hi) = (E ∩ {x2 <= 0}) ∪ {x2 >= 0}
///   upper(lo,hi) = (E ∩ {x2 >= 0}) ∪ {x2 <= 0}
/// `upper(c,d)` complements `lower(c',d') + v` when the translated lower
/// profile sits on top of the upper one, the two being disjoint with union
/// the whole strip [c,d] x R (all up to measure zero).
bool profiles_complement(const PolyBox& set, const Interval& upper_columns, const Interval& lower_columns,
                         const Vec& v);

/// The shift v, if any, making upper(b-s, b) complement lower(a, a+s) + v.
/// Searches the finitely many vertical offsets that align box edges.
std::optional<Vec> find_complement_shift(const PolyBox& set, const Rational& a, const Rational& b,
                                         const Rational& s);

struct ShiftTriple {
  Vec v;       // width s
  Vec v_mid;   // width s'
  Vec v_low;   // width s''
  Rational s;
  Rational s_mid;
  Rational s_low;
};

struct CollinearityCheck {
  bool collinear = false;
  /// (2s'' - s)/(s - s'') * |v''_2 - v_2|, compared against eps.
  Rational slope_quantity;
  bool slope_bound_holds = false;
};

/// Exact collinearity of three complement shifts and the accompanying slope
/// bound; requires 0 < s'' < s' < s < 2 s''.
CollinearityCheck check_shift_collinearity(const ShiftTriple& triple, const Rational& eps);

class ExtractionError : public Error {
 public:
  enum class Kind { no_corner, corner_mismatch };

  ExtractionError(Kind kind, std::string what, std::optional<Vec> u = {}, std::optional<Vec> v = {},
                  std::optional<Vec> w = {})
      : Error(std::move(what)), kind_(kind), u_(std::move(u)), v_(std::move(v)), w_(std::move(w)) {}

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] const std::optional<Vec>& u() const { return u_; }
  [[nodiscard]] const std::optional<Vec>& v() const { return v_; }
  [[nodiscard]] const std::optional<Vec>& w() const { return w_; }

 private:
  Kind kind_;
  std::optional<Vec> u_;
  std::optional<Vec> v_;
  std::optional<Vec> w_;
};

struct LatticeExtraction {
  Vec u;
  Vec v;
  Vec w;
  Rational epsilon;
  Lattice lattice;
  Box window;
  bool tiles = false;
  std::optional<Cell> witness;
};

/// Locates a corner E, E+u, E+v and the translate E+w fitting into it:
///   1 <= u1 <= 1+2eps,      -2eps <= u2 <= 2eps
///   0 <= v1 <= 1/2+eps,      1 <= v2 <= 1+2eps
///   v1+1 <= w1 <= v1+1+2eps, u2+1 <= w2 <= u2+1+2eps
/// then requires w = u+v exactly and tests the lattice {ku+mv} on a window
/// containing its fundamental parallelogram.
///
/// Throws HypothesisViolation if E is not squeezed between [0,1]^2 and
/// [-eps,1+eps]^2, and ExtractionError when the patch has no corner or the
/// corner translate is not u+v.
LatticeExtraction extract_lattice_2d(const PolyBox& set, const std::vector<Vec>& patch,
                                     std::optional<Rational> eps = std::nullopt);

}  // namespace nearcube
