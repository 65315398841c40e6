#include "nearcube/tiling.hpp"

#include <algorithm>

#include "nearcube/error.hpp"

namespace nearcube {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::tiling: return "tiling";
    case Verdict::packing_not_tiling: return "packing-not-tiling";
    case Verdict::not_packing: return "not-packing";
  }
  return "unknown";
}

RelevantTranslations enumerate_relevant(const TranslationSystem& system, const PolyBox& set, const Box& window) {
  if (set.dim() != system.dim() || window.dim() != system.dim()) {
    throw DimensionMismatch("enumerate_relevant: set, system and window must share a dimension");
  }
  const auto hull = bounding_box(set);
  if (!hull) return {{}, window, {}};

  Vec lo(system.dim());
  Vec hi(system.dim());
  for (std::size_t i = 0; i < system.dim(); ++i) {
    lo[i] = window[i].lo - (*hull)[i].hi;
    hi[i] = window[i].hi - (*hull)[i].lo;
  }
  const Box search = Box::from_corners(lo, hi);
  PointEnumeration candidates = enumerate_points(system, search);

  RelevantTranslations out{{}, search, std::move(candidates.coefficient_hull)};
  for (auto& t : candidates.points) {
    const bool hits = std::any_of(set.boxes().begin(), set.boxes().end(),
                                  [&](const Box& b) { return b.translated(t).overlaps(window); });
    if (hits) out.translations.push_back(std::move(t));
  }
  return out;
}

MultiplicityReport multiplicity_map(const PolyBox& set, const TranslationSystem& system, const Box& window) {
  RelevantTranslations relevant = enumerate_relevant(system, set, window);
  const std::size_t n = window.dim();

  std::vector<Box> pieces;
  Rational translate_mass(0);
  for (const auto& t : relevant.translations) {
    for (const auto& b : set.boxes()) {
      if (auto cut = b.translated(t).intersection(window)) {
        translate_mass += cut->measure();
        pieces.push_back(std::move(*cut));
      }
    }
  }

  std::vector<std::vector<Rational>> grid(n);
  for (std::size_t axis = 0; axis < n; ++axis) {
    grid[axis] = {window[axis].lo, window[axis].hi};
    for (const auto& p : pieces) {
      grid[axis].push_back(p[axis].lo);
      grid[axis].push_back(p[axis].hi);
    }
    std::sort(grid[axis].begin(), grid[axis].end());
    grid[axis].erase(std::unique(grid[axis].begin(), grid[axis].end()), grid[axis].end());
  }

  std::vector<std::size_t> extent(n);
  std::size_t total = 1;
  for (std::size_t axis = 0; axis < n; ++axis) {
    extent[axis] = grid[axis].size() - 1;
    total *= extent[axis];
  }
  // row-major with axis 0 slowest, which is the lexicographic cell order
  std::vector<std::size_t> counts(total, 0);

  auto index_of = [&](std::size_t axis, const Rational& x) {
    return static_cast<std::size_t>(std::lower_bound(grid[axis].begin(), grid[axis].end(), x) -
                                    grid[axis].begin());
  };

  // A piece's edges lie on grid lines, so the cells whose midpoints it covers
  // are exactly the index block between its edges.
  std::vector<std::size_t> first(n);
  std::vector<std::size_t> last(n);
  std::vector<std::size_t> idx(n);
  for (const auto& p : pieces) {
    for (std::size_t axis = 0; axis < n; ++axis) {
      first[axis] = index_of(axis, p[axis].lo);
      last[axis] = index_of(axis, p[axis].hi);
    }
    idx = first;
    while (true) {
      std::size_t flat = 0;
      for (std::size_t axis = 0; axis < n; ++axis) flat = flat * extent[axis] + idx[axis];
      ++counts[flat];
      std::size_t axis = n;
      while (axis-- > 0) {
        if (++idx[axis] < last[axis]) break;
        idx[axis] = first[axis];
      }
      if (axis == static_cast<std::size_t>(-1)) break;
    }
  }

  MultiplicityReport report{window, {}, Verdict::tiling, std::nullopt, relevant.translations.size(),
                            Rational(0), translate_mass, std::move(relevant.coefficient_hull)};
  report.cells.reserve(total);
  std::optional<Cell> first_overlap;
  std::optional<Cell> first_gap;
  std::fill(idx.begin(), idx.end(), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (std::size_t axis = n; axis-- > 0;) {
      idx[axis] = rem % extent[axis];
      rem /= extent[axis];
    }
    std::vector<Interval> iv(n);
    for (std::size_t axis = 0; axis < n; ++axis) iv[axis] = {grid[axis][idx[axis]], grid[axis][idx[axis] + 1]};
    Cell cell{Box(std::move(iv)), counts[flat]};
    report.cell_mass += Rational(static_cast<long long>(cell.count)) * cell.box.measure();
    if (cell.count >= 2 && !first_overlap) first_overlap = cell;
    if (cell.count == 0 && !first_gap) first_gap = cell;
    report.cells.push_back(std::move(cell));
  }

  if (first_overlap) {
    report.verdict = Verdict::not_packing;
    report.witness = std::move(first_overlap);
  } else if (first_gap) {
    report.verdict = Verdict::packing_not_tiling;
    report.witness = std::move(first_gap);
  }
  return report;
}

VerdictCheck is_packing(const PolyBox& set, const TranslationSystem& system, const Box& window) {
  auto report = multiplicity_map(set, system, window);
  if (report.verdict == Verdict::not_packing) return {false, std::move(report.witness)};
  return {true, std::nullopt};
}

VerdictCheck is_tiling(const PolyBox& set, const TranslationSystem& system, const Box& window) {
  auto report = multiplicity_map(set, system, window);
  if (report.verdict == Verdict::tiling) return {true, std::nullopt};
  return {false, std::move(report.witness)};
}

Density density(const TranslationSystem& system, const Rational& radius) {
  if (radius.sign() <= 0) throw InvalidInput("density radius must be positive");
  const Box cube = Box::cube(system.dim(), -radius, radius);
  const auto points = enumerate_points(system, cube).points;
  Density out;
  out.windowed = Rational(static_cast<long long>(points.size())) /
                 pow(Rational(2) * radius, static_cast<unsigned>(system.dim()));
  if (system.lattice()) {
    out.asymptotic = Rational(static_cast<long long>(system.reps().size())) / system.lattice()->covolume();
  }
  return out;
}

}  // namespace nearcube
