#pragma once

#include <complex>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "nearcube/rational.hpp"

namespace nearcube {

/// Integer polynomial, coefficient of x^i at index i, no trailing zeros.
using IntPoly = std::vector<mpz_class>;

/// The n-th cyclotomic polynomial (n >= 1). Computed by dividing x^n - 1 by
/// the cyclotomic polynomials of the proper divisors of n; cached by index,
/// safe to call from several threads.
const IntPoly& cyclotomic(unsigned long n);

/// Remainder of p modulo a monic divisor.
IntPoly poly_mod_monic(IntPoly p, const IntPoly& divisor);

/// Formal sum of integer multiples of roots of unity e^{2πi·q}, q ∈ [0,1)
/// rational. Equal exponents are merged and zero coefficients dropped.
class ExpSum {
 public:
  void add(const mpz_class& coeff, const Rational& exponent);

  [[nodiscard]] const std::map<Rational, mpz_class>& terms() const { return terms_; }
  /// Least common denominator of the exponents (1 for an empty sum).
  [[nodiscard]] unsigned long order() const;
  /// Exact test: with N = order(), the sum is P(ζ_N) for P(x) = Σ c·x^{N q},
  /// which vanishes iff the N-th cyclotomic polynomial divides P.
  [[nodiscard]] bool vanishes() const;
  [[nodiscard]] std::complex<double> evaluate() const;

 private:
  std::map<Rational, mpz_class> terms_;
};

}  // namespace nearcube
