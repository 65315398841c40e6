#pragma once

#include <cstdint>
#include <vector>

#include "nearcube/rational.hpp"
#include "nearcube/spectral.hpp"

namespace nearcube {

/// Tent kernel K(x) = max{0, 1 - (1+δ)|x|} for δ > 0.
class FejerKernel {
 public:
  /// Throws InvalidInput unless δ > 0.
  explicit FejerKernel(Rational delta);

  [[nodiscard]] const Rational& delta() const { return delta_; }
  /// Half-width of the support, 1/(1+δ).
  [[nodiscard]] Rational half_width() const;

  [[nodiscard]] double operator()(double x) const;
  /// K̂(ξ) = (1+δ) |χ̂_I(ξ)|² with I = [0, 1/(1+δ)].
  [[nodiscard]] double transform(double xi) const;

 private:
  Rational delta_;
};

double fejer_eval(const Rational& delta, double x);
double fejer_ft(const Rational& delta, double xi);

struct FejerPartitionReport {
  bool passed = false;
  double tolerance = 0.0;
  std::int64_t truncation = 0;
  double worst_deviation = 0.0;
  double worst_remainder = 0.0;
  double worst_crude_tail = 0.0;
  /// Per sample: Σ_{|k|<=M} K̂(x-k), the k = 0 term, tail estimate, deviation.
  struct Sample {
    double point = 0.0;
    double partial = 0.0;
    double zero_term = 0.0;
    double tail_estimate = 0.0;
    double remainder_bound = 0.0;
    double crude_tail_bound = 0.0;
    double deviation = 0.0;
  };
  std::vector<Sample> samples;
};

/// Checks Σ_{k∈Z} K̂(x-k) = 1 at each sample within tol. The sum is the
/// truncated Parseval sum of I = [0, 1/(1+δ)] against Z scaled by (1+δ),
/// with the same analytic tail. Throws TailBoundExceeded if the certified
/// remainder exceeds tol.
FejerPartitionReport fejer_partition_check(const Rational& delta, std::int64_t truncation,
                                           const std::vector<double>& samples, double tolerance);

}  // namespace nearcube
