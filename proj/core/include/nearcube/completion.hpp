#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nearcube/box.hpp"
#include "nearcube/lattice.hpp"
#include "nearcube/polybox.hpp"

namespace nearcube {

struct CompletionResult {
  /// Translations of the completed tiling that lie in the window, ascending.
  std::vector<Rational> translations;
  /// Set when completion failed: the first uncovered point met in the search
  /// at which no translate fits without overlap.
  std::optional<Rational> uncoverable;
  /// True when max_steps placements ran out before the search finished.
  bool exhausted = false;

  [[nodiscard]] bool ok() const { return !uncoverable && !exhausted; }
  /// The translations as a finite 1D translation system.
  [[nodiscard]] TranslationSystem system() const;
};

/// Forced completion of a 1D tiling that contains the translate E+0, over
/// [min(E), max(W)].
///
/// At the leftmost uncovered point p everything just left of p is covered, so
/// the tile through p starts one of its components at p. The candidates
/// t = p - a_j are tried leftmost component first (so the translate whose left
/// edge sits at p comes first) with backtracking over the others; translates
/// with t < 0 are allowed since their later components may reach past min(E).
CompletionResult complete_tiling_1d(const PolyBox& set, const Box& window, std::size_t max_steps = 10000);

}  // namespace nearcube
