#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nearcube/box.hpp"
#include "nearcube/lattice.hpp"
#include "nearcube/polybox.hpp"

namespace nearcube {

/// Translations t of a (possibly infinite) system with |(E+t) ∩ W| > 0.
struct RelevantTranslations {
  std::vector<Vec> translations;
  /// Minkowski bound box bbox(W) ⊖ bbox(E) that was scanned.
  Box search_box;
  /// Integer coefficient hull of the search box (empty for finite systems).
  std::vector<std::pair<mpz_class, mpz_class>> coefficient_hull;
};

RelevantTranslations enumerate_relevant(const TranslationSystem& system, const PolyBox& set, const Box& window);

enum class Verdict { tiling, packing_not_tiling, not_packing };

std::string to_string(Verdict v);

struct Cell {
  Box box;
  std::size_t count = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Exact multiplicity of the translates E+t over a window.
///
/// The window is cut by every coordinate of every contributing translated box;
/// each grid cell's count is the number of translates covering its midpoint.
/// Counts are constant on open cells, so the verdict holds almost everywhere
/// on the window.
struct MultiplicityReport {
  Box window;
  std::vector<Cell> cells;
  Verdict verdict = Verdict::tiling;
  /// First cell (canonical order) with count >= 2 for not_packing, count 0
  /// for packing_not_tiling.
  std::optional<Cell> witness;
  std::size_t translate_count = 0;
  /// sum over cells of count * |cell|
  Rational cell_mass;
  /// sum over translates of |(E+t) ∩ W|
  Rational translate_mass;
  std::vector<std::pair<mpz_class, mpz_class>> coefficient_hull;

  [[nodiscard]] bool mass_conserved() const { return cell_mass == translate_mass; }
};

MultiplicityReport multiplicity_map(const PolyBox& set, const TranslationSystem& system, const Box& window);

struct VerdictCheck {
  bool holds = false;
  std::optional<Cell> witness;
};

/// Packing/tiling verdicts on the window W. When the system is invariant
/// under a lattice L and W contains a fundamental domain of L, the verdict
/// holds on all of R^n.
VerdictCheck is_packing(const PolyBox& set, const TranslationSystem& system, const Box& window);
VerdictCheck is_tiling(const PolyBox& set, const TranslationSystem& system, const Box& window);

struct Density {
  /// #(system ∩ [-R,R]^n) / (2R)^n
  Rational windowed;
  /// |reps| / covolume for periodic systems.
  std::optional<Rational> asymptotic;
};

Density density(const TranslationSystem& system, const Rational& radius);

}  // namespace nearcube
