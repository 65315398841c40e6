#pragma once

// Brute-force reference computations. None of these call into the polybox
// sweep, the multiplicity map or the cyclotomic machinery.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <set>
#include <vector>

#include "nearcube/box.hpp"
#include "nearcube/lattice.hpp"

namespace oracle {

using nearcube::Box;
using nearcube::Interval;
using nearcube::Rational;
using nearcube::Vec;

inline bool in_interior(const Box& b, const Vec& p) {
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (!(b[i].lo < p[i] && p[i] < b[i].hi)) return false;
  }
  return true;
}

inline bool member(const std::vector<Box>& boxes, const Vec& p) {
  return std::any_of(boxes.begin(), boxes.end(), [&](const Box& b) { return in_interior(b, p); });
}

/// Measure of a union of possibly overlapping boxes by coordinate compression:
/// every grid cell is either inside or outside the union, decided at its midpoint.
template <class Pred>
Rational grid_measure(const std::vector<Box>& boxes, std::size_t dim, Pred inside) {
  if (boxes.empty()) return Rational(0);
  std::vector<std::vector<Rational>> coords(dim);
  for (const auto& b : boxes) {
    for (std::size_t i = 0; i < dim; ++i) {
      coords[i].push_back(b[i].lo);
      coords[i].push_back(b[i].hi);
    }
  }
  for (auto& c : coords) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  Rational total(0);
  std::vector<std::size_t> idx(dim, 0);
  while (true) {
    Vec mid(dim);
    Rational vol(1);
    for (std::size_t i = 0; i < dim; ++i) {
      mid[i] = (coords[i][idx[i]] + coords[i][idx[i] + 1]) / Rational(2);
      vol *= coords[i][idx[i] + 1] - coords[i][idx[i]];
    }
    if (inside(mid)) total += vol;
    std::size_t k = 0;
    while (k < dim && ++idx[k] + 1 >= coords[k].size()) idx[k++] = 0;
    if (k == dim) break;
  }
  return total;
}

inline Rational union_measure(const std::vector<Box>& boxes) {
  if (boxes.empty()) return Rational(0);
  return grid_measure(boxes, boxes.front().dim(), [&](const Vec& p) { return member(boxes, p); });
}

/// |E ∩ (E+x)| for disjoint intervals, summed pairwise.
inline Rational overlap_1d(const std::vector<Interval>& parts, const Rational& x) {
  Rational total(0);
  for (const auto& a : parts) {
    for (const auto& b : parts) {
      const Rational lo = nearcube::max(a.lo, b.lo + x);
      const Rational hi = nearcube::min(a.hi, b.hi + x);
      if (lo < hi) total += hi - lo;
    }
  }
  return total;
}

/// Composite Simpson rule for ∫_E e^{-2πiξx} dx.
inline std::complex<double> ft_simpson(const std::vector<Interval>& parts, double xi, int panels = 2000) {
  std::complex<double> total{0.0, 0.0};
  auto f = [&](double x) { return std::polar(1.0, -2.0 * std::numbers::pi * xi * x); };
  for (const auto& iv : parts) {
    const double a = iv.lo.to_double();
    const double b = iv.hi.to_double();
    const double h = (b - a) / (2.0 * panels);
    std::complex<double> s = f(a) + f(b);
    for (int k = 1; k < 2 * panels; ++k) s += (k % 2 == 1 ? 4.0 : 2.0) * f(a + k * h);
    total += s * (h / 3.0);
  }
  return total;
}

/// Determinant by cofactor expansion along the first row.
inline Rational cofactor_det(const nearcube::Matrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational total(0);
  for (std::size_t j = 0; j < n; ++j) {
    nearcube::Matrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    const Rational term = m[0][j] * cofactor_det(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

/// All points reps + Σ k_i g_i with |k_i| <= radius.
inline std::vector<Vec> lattice_points(const nearcube::TranslationSystem& system, long radius) {
  std::vector<Vec> out;
  if (!system.lattice()) return system.reps();
  const auto& gens = system.lattice()->generators();
  const std::size_t n = gens.size();
  std::vector<long> k(n, -radius);
  while (true) {
    for (const auto& r : system.reps()) {
      Vec p = r;
      for (std::size_t i = 0; i < n; ++i) p = p + Rational(k[i]) * gens[i];
      out.push_back(p);
    }
    std::size_t i = 0;
    while (i < n && ++k[i] > radius) k[i++] = -radius;
    if (i == n) break;
  }
  return out;
}

/// Number of translates E + t whose interior contains p.
inline std::size_t cover_count(const std::vector<Box>& set, const std::vector<Vec>& translations, const Vec& p) {
  std::size_t count = 0;
  for (const auto& t : translations) {
    if (member(set, p - t)) ++count;
  }
  return count;
}

/// Positive-measure overlap of E + t with a window, decided box by box.
inline bool touches(const std::vector<Box>& set, const Vec& t, const Box& window) {
  return std::any_of(set.begin(), set.end(), [&](const Box& b) { return b.translated(t).overlaps(window); });
}

}  // namespace oracle
