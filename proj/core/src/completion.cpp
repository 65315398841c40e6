#include "nearcube/completion.hpp"

#include <algorithm>

#include "nearcube/error.hpp"

namespace nearcube {

TranslationSystem CompletionResult::system() const {
  std::vector<Vec> reps;
  reps.reserve(translations.size());
  for (const auto& t : translations) reps.push_back({t});
  return TranslationSystem(1, std::move(reps));
}

namespace {

struct Search {
  const PolyBox& set;
  PolyBox region;
  std::size_t budget;
  std::size_t steps = 0;
  std::optional<Rational> first_dead_end;
  bool exhausted = false;

  // true once the region is covered; `placed` then holds the translations
  bool extend(const PolyBox& covered, std::vector<Rational>& placed) {
    const PolyBox gap = difference(region, covered);
    if (gap.empty()) return true;
    const Rational p = gap.boxes().front()[0].lo;
    // the tile through p starts one of its components at p
    for (const auto& b : set.boxes()) {
      if (steps >= budget) {
        exhausted = true;
        return false;
      }
      const Rational t = p - b[0].lo;
      const PolyBox tile = translate(set, {t});
      if (!measure(intersect(tile, covered)).is_zero()) continue;
      ++steps;
      placed.push_back(t);
      if (extend(unite(covered, tile), placed)) return true;
      placed.pop_back();
      if (exhausted) return false;
    }
    if (!first_dead_end) first_dead_end = p;
    return false;
  }
};

}  // namespace

CompletionResult complete_tiling_1d(const PolyBox& set, const Box& window, std::size_t max_steps) {
  if (set.dim() != 1 || window.dim() != 1) throw DimensionMismatch("complete_tiling_1d works in dimension 1");
  if (set.empty()) throw InvalidInput("complete_tiling_1d: empty set");

  const Rational leftmost = set.boxes().front()[0].lo;
  const auto in_window = [&](const Rational& t) { return window[0].lo <= t && t <= window[0].hi; };
  CompletionResult out;
  if (!(leftmost < window[0].hi)) {
    if (in_window(Rational(0))) out.translations.push_back(Rational(0));
    return out;
  }

  Search search{set, PolyBox::from_box(Box({{leftmost, window[0].hi}})), max_steps, 0, std::nullopt, false};
  std::vector<Rational> placed{Rational(0)};
  if (!search.extend(set, placed)) {
    out.exhausted = search.exhausted;
    if (!search.exhausted) out.uncoverable = search.first_dead_end;
    return out;
  }
  std::sort(placed.begin(), placed.end());
  for (const auto& t : placed) {
    if (in_window(t)) out.translations.push_back(t);
  }
  return out;
}

}  // namespace nearcube
