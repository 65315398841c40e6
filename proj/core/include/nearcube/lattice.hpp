#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nearcube/box.hpp"
#include "nearcube/rational.hpp"

namespace nearcube {

using Matrix = std::vector<Vec>;

/// Exact determinant by fraction-free Gaussian elimination over the rationals.
Rational determinant(const Matrix& m);
/// Exact inverse; throws InvalidInput if singular.
Matrix inverse(const Matrix& m);

/// Full-rank lattice {sum_i k_i g_i : k in Z^n}, generators stored as rows.
class Lattice {
 public:
  /// Throws InvalidInput if the generators are not n vectors in R^n or are singular.
  explicit Lattice(Matrix generators);

  static Lattice integer(std::size_t dim);

  [[nodiscard]] std::size_t dim() const { return generators_.size(); }
  [[nodiscard]] const Matrix& generators() const { return generators_; }

  [[nodiscard]] Rational covolume() const;
  /// Real coordinates c with p = sum_i c_i g_i.
  [[nodiscard]] Vec coefficients(const Vec& p) const;
  [[nodiscard]] bool contains(const Vec& p) const;
  [[nodiscard]] Vec point(const std::vector<long long>& k) const;
  /// Bounding box of the half-open parallelepiped spanned by the generators;
  /// it contains a fundamental domain.
  [[nodiscard]] Box fundamental_window() const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  Matrix generators_;
  Matrix inverse_;  // rows map points to coefficients: c = p * inverse_
};

Rational covolume(const Lattice& lattice);

/// Finite coset representatives plus an optional lattice: the set reps + L,
/// or just reps when no lattice is attached.
class TranslationSystem {
 public:
  /// Representatives that differ by a lattice vector are merged (first kept).
  TranslationSystem(std::size_t dim, std::vector<Vec> reps, std::optional<Lattice> lattice = std::nullopt);

  static TranslationSystem lattice_only(const Lattice& lattice);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::vector<Vec>& reps() const { return reps_; }
  [[nodiscard]] const std::optional<Lattice>& lattice() const { return lattice_; }
  [[nodiscard]] bool periodic() const { return lattice_.has_value(); }
  [[nodiscard]] bool contains(const Vec& p) const;

  friend bool operator==(const TranslationSystem&, const TranslationSystem&) = default;

 private:
  std::size_t dim_;
  std::vector<Vec> reps_;
  std::optional<Lattice> lattice_;
};

/// Every point of `system` lying in the box `bounds` (closed), with the
/// integer coefficient hull used to enumerate the lattice part.
struct PointEnumeration {
  std::vector<Vec> points;
  /// Per generator, the inclusive integer range scanned (empty when no lattice).
  std::vector<std::pair<mpz_class, mpz_class>> coefficient_hull;
};

PointEnumeration enumerate_points(const TranslationSystem& system, const Box& bounds);

}  // namespace nearcube
