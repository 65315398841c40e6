#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nearcube/lattice.hpp"
#include "nearcube/polybox.hpp"
#include "nearcube/tiling.hpp"

namespace nearcube {

/// [0,1/2] ∪ [1,3/2]: measure 1, hull length 3/2, tiles with {0,1/2}+2Z.
PolyBox build_E_1d_example();

class NearCube3DParams {
 public:
  /// Throws InvalidInput unless 0 < eps < 1.
  explicit NearCube3DParams(Rational epsilon);
  [[nodiscard]] const Rational& epsilon() const { return epsilon_; }

 private:
  Rational epsilon_;
};

/// One of the nine vertical prisms of [0,1+eps]^2 x [0,1] and the x3 pattern
/// of E inside it.
struct Segment {
  std::string label;
  Box footprint;  // 2D
  std::vector<Interval> pattern;
  Rational pattern_measure;
  Rational measure;
};

struct NearCube3DManifest {
  Rational epsilon;
  std::vector<Segment> segments;
  std::vector<std::string> notes;
  Rational total_measure;

  [[nodiscard]] const Segment& segment(const std::string& label) const;
};

struct NearCube3D {
  PolyBox set;
  NearCube3DManifest manifest;
};

/// Vertical patterns of the eight boundary prisms, as subsets of [0,1].
std::vector<Interval> vertical_pattern(const std::string& label);

/// The set E with [eps,1]^3 ⊂ E ⊂ [0,1+eps]^3: the planes x1, x2 ∈ {eps, 1}
/// cut the cube into nine prisms, the middle one is kept whole and each
/// boundary prism carries its vertical pattern. Footprints:
///   Q = [eps,1]x[0,eps]   P = [eps,1]x[1,1+eps]
///   S = [0,eps]x[eps,1]   R = [1,1+eps]x[eps,1]
///   A = [0,eps]^2         B = [1,1+eps]x[0,eps]
///   C = [1,1+eps]^2       D = [0,eps]x[1,1+eps]
NearCube3D build_E_3d(const NearCube3DParams& params);

/// Columns K + (i, j, t_ij) over a square patch of the x1x2 grid.
struct ColumnTiling {
  int radius = 1;
  std::map<std::pair<int, int>, Rational> offsets;
  Lattice periods;

  /// |t_{i+1,j} - t_ij| = |t_{i,j+1} - t_ij| = 1/4 wherever both are defined.
  [[nodiscard]] bool adjacent_offsets_valid() const;
};

struct CheckerboardTiling {
  ColumnTiling columns;
  TranslationSystem system;
};

/// t_ij = 0 for i+j even and 1/4 for i+j odd: reps over one 2x2 period plus
/// the lattice generated by (2,0,0), (0,2,0), (0,0,1).
CheckerboardTiling build_checkerboard_tiling(const NearCube3DParams& params, int radius);

/// A lattice (1,0,a), (0,1,b), (0,0,1) and the 2x2 offset matrix it realizes.
struct LatticeConfig {
  int index = 0;
  std::array<std::array<Rational, 2>, 2> matrix;
  Rational a;
  Rational b;
  TranslationSystem system;
};

/// The four configurations with |a| = |b| = t, in the order
///   [[0,t],[t,2t]], [[2t,t],[t,0]], [[0,t],[-t,0]], [[0,-t],[t,0]]
/// (row i, column j holds t_ij up to a common vertical shift).
std::vector<LatticeConfig> enumerate_lattice_configs(const Rational& t = Rational(1, 4));

/// E × [0,1]^(n-3); throws InvalidInput for n < 3 or a non-3D set.
PolyBox lift_to_dim(const PolyBox& set, std::size_t n);
/// Extends a system by zero coordinates and the lattice by unit vectors.
TranslationSystem lift_system(const TranslationSystem& system, std::size_t n);

/// Near-square planar tile with complementary boundary strips.
///
/// E = [0,1]^2 ∪ R ∪ L ∪ T ∪ B where R = [1,1+gx] x Y, L = [-gx,0] x ([0,1]\Y),
/// T is a random subset of the cell [0,1+gx] x [1,1+gy] and B is the rest of
/// that cell shifted by -v. It tiles with the lattice u = (1+gx, 0),
/// v = (σ, 1+gy), 0 <= σ <= eps. Seed 0 gives the plain unit square.
struct NearSquareInstance {
  PolyBox set;
  Rational epsilon;
  Vec u;
  Vec v;
  Lattice lattice;
  /// {k u + m v : |k|, |m| <= 2}
  std::vector<Vec> patch;
};

/// Throws InvalidInput unless 0 < eps <= 1/33; throws std::logic_error if the
/// generated strips fail to complement each other.
NearSquareInstance build_near_square_2d(const Rational& eps, std::uint64_t seed);

/// Near-square set whose lower boundary over [0,1] is a staircase
/// g(x + p) = g(x) + τ and whose upper boundary is eps - g(x - c), so that the
/// upper profile over [c_j, 1] is complemented by the lower profile over
/// [0, 1 - c_j] shifted by v_j = (c_j, 1 + eps - jτ), c_j = c + j p.
struct ComplementConfig {
  PolyBox set;
  Rational epsilon;
  Rational a;
  Rational b;
  std::array<Rational, 3> widths;      // s > s' > s''
  std::array<Vec, 3> expected_shifts;  // v, v', v''
};

ComplementConfig build_complement_config(const Rational& eps, std::uint64_t seed);

struct CornerSqueeze {
  /// Q_eps ∩ (Q+v) ≠ ∅ as closed sets.
  bool premise = false;
  Rational overlap;
  /// premise implies overlap >= eps^2
  bool holds = false;
};

/// Q = [0,1]^2, Q_eps = [eps,1-eps]^2, 0 < eps < 1/2.
CornerSqueeze corner_squeeze_check(const Rational& eps, const Vec& v);

/// True when the fractional parts of x1 and x2 both lie in (0, eps), i.e. the
/// point sits over a corner prism of some translate in a column tiling.
bool in_corner_column(const Vec& point, const Rational& eps);

struct LatticeConfigVerdict {
  LatticeConfig config;
  MultiplicityReport report;
  /// Not a tiling, with the witness cell over a corner column.
  bool falsified = false;
};

struct Theorem3DReport {
  Rational epsilon;
  Rational measure;
  MultiplicityReport checkerboard;
  std::vector<LatticeConfigVerdict> configs;

  [[nodiscard]] bool checkerboard_tiles() const { return checkerboard.verdict == Verdict::tiling; }
  [[nodiscard]] bool configs_falsified() const;
  [[nodiscard]] bool verified() const { return measure == Rational(1) && checkerboard_tiles() && configs_falsified(); }
};

/// E(eps) tiles with the checkerboard columns on [0,2]^2 x [0,1] and each of
/// the four lattice configurations fails on [0,1]^3; both windows contain a
/// fundamental domain of the respective period lattice.
Theorem3DReport verify_theorem_3d(const Rational& eps);

}  // namespace nearcube
