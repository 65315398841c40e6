#include "nearcube/lattice.hpp"

#include <algorithm>

#include "nearcube/error.hpp"

namespace nearcube {

namespace {

void require_square(const Matrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw InvalidInput("matrix is not square");
  }
}

}  // namespace

Rational determinant(const Matrix& m) {
  require_square(m);
  Matrix a = m;
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  require_square(m);
  const std::size_t n = m.size();
  Matrix a = m;
  Matrix inv(n, zero_vec(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw InvalidInput("singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] /= p;
      inv[col][c] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

Lattice::Lattice(Matrix generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw InvalidInput("lattice needs at least one generator");
  require_square(generators_);
  if (determinant(generators_).is_zero()) throw InvalidInput("singular lattice generators");
  inverse_ = inverse(generators_);
}

Lattice Lattice::integer(std::size_t dim) {
  Matrix g(dim, zero_vec(dim));
  for (std::size_t i = 0; i < dim; ++i) g[i][i] = Rational(1);
  return Lattice(std::move(g));
}

Rational Lattice::covolume() const { return abs(determinant(generators_)); }

Vec Lattice::coefficients(const Vec& p) const {
  if (p.size() != dim()) throw DimensionMismatch("lattice coefficient dimension mismatch");
  Vec c = zero_vec(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (p[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) c[j] += p[i] * inverse_[i][j];
  }
  return c;
}

bool Lattice::contains(const Vec& p) const {
  const Vec c = coefficients(p);
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_integer(); });
}

Vec Lattice::point(const std::vector<long long>& k) const {
  if (k.size() != dim()) throw DimensionMismatch("lattice coefficient vector dimension mismatch");
  Vec p = zero_vec(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (k[i] == 0) continue;
    p = p + Rational(k[i]) * generators_[i];
  }
  return p;
}

Box Lattice::fundamental_window() const {
  Vec lo = zero_vec(dim());
  Vec hi = zero_vec(dim());
  for (const auto& g : generators_) {
    for (std::size_t i = 0; i < dim(); ++i) {
      if (g[i].sign() < 0) lo[i] += g[i];
      else hi[i] += g[i];
    }
  }
  return Box::from_corners(lo, hi);
}

Rational covolume(const Lattice& lattice) { return lattice.covolume(); }

TranslationSystem::TranslationSystem(std::size_t dim, std::vector<Vec> reps, std::optional<Lattice> lattice)
    : dim_(dim), lattice_(std::move(lattice)) {
  if (dim_ == 0) throw InvalidInput("translation system dimension must be positive");
  if (lattice_ && lattice_->dim() != dim_) throw DimensionMismatch("lattice dimension mismatch");
  for (auto& r : reps) {
    if (r.size() != dim_) throw DimensionMismatch("representative dimension mismatch");
    const bool duplicate = std::any_of(reps_.begin(), reps_.end(), [&](const Vec& kept) {
      return lattice_ ? lattice_->contains(r - kept) : r == kept;
    });
    if (!duplicate) reps_.push_back(std::move(r));
  }
}

TranslationSystem TranslationSystem::lattice_only(const Lattice& lattice) {
  return TranslationSystem(lattice.dim(), {zero_vec(lattice.dim())}, lattice);
}

bool TranslationSystem::contains(const Vec& p) const {
  if (p.size() != dim_) throw DimensionMismatch("point dimension mismatch");
  return std::any_of(reps_.begin(), reps_.end(), [&](const Vec& r) {
    return lattice_ ? lattice_->contains(p - r) : p == r;
  });
}

PointEnumeration enumerate_points(const TranslationSystem& system, const Box& bounds) {
  if (bounds.dim() != system.dim()) throw DimensionMismatch("enumeration bounds dimension mismatch");
  PointEnumeration out;
  const std::size_t n = system.dim();
  if (!system.lattice()) {
    for (const auto& r : system.reps()) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i) inside = bounds[i].lo <= r[i] && r[i] <= bounds[i].hi;
      if (inside) out.points.push_back(r);
    }
    return out;
  }

  const Lattice& lattice = *system.lattice();
  // coefficient j of p is linear in p: c_j = sum_i p_i * inv_ij
  const Matrix inv = inverse(lattice.generators());
  for (const auto& r : system.reps()) {
    std::vector<std::pair<mpz_class, mpz_class>> hull(n);
    for (std::size_t j = 0; j < n; ++j) {
      Rational lo(0);
      Rational hi(0);
      for (std::size_t i = 0; i < n; ++i) {
        const Rational a = (bounds[i].lo - r[i]) * inv[i][j];
        const Rational b = (bounds[i].hi - r[i]) * inv[i][j];
        lo += min(a, b);
        hi += max(a, b);
      }
      hull[j] = {lo.ceil(), hi.floor()};
    }
    if (out.coefficient_hull.empty()) {
      out.coefficient_hull = hull;
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        if (hull[j].first < out.coefficient_hull[j].first) out.coefficient_hull[j].first = hull[j].first;
        if (hull[j].second > out.coefficient_hull[j].second) out.coefficient_hull[j].second = hull[j].second;
      }
    }
    if (std::any_of(hull.begin(), hull.end(), [](const auto& h) { return h.first > h.second; })) continue;

    std::vector<long long> k(n);
    for (std::size_t j = 0; j < n; ++j) k[j] = hull[j].first.get_si();
    while (true) {
      const Vec p = r + lattice.point(k);
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i) inside = bounds[i].lo <= p[i] && p[i] <= bounds[i].hi;
      if (inside) out.points.push_back(p);
      std::size_t j = 0;
      for (; j < n; ++j) {
        if (k[j] < hull[j].second.get_si()) {
          ++k[j];
          break;
        }
        k[j] = hull[j].first.get_si();
      }
      if (j == n) break;
    }
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

}  // namespace nearcube
