#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "nearcube/cyclotomic.hpp"
#include "nearcube/polybox.hpp"

namespace nearcube {

/// Periodic candidate spectrum reps + period·Z.
class SpectrumCandidate {
 public:
  /// Throws InvalidInput unless period > 0, reps are distinct mod period and
  /// one of them is ≡ 0 (the set contains 0).
  SpectrumCandidate(std::vector<Rational> reps, Rational period);

  [[nodiscard]] const std::vector<Rational>& reps() const { return reps_; }
  [[nodiscard]] const Rational& period() const { return period_; }
  /// reps.size() / period
  [[nodiscard]] Rational density() const;

 private:
  std::vector<Rational> reps_;
  Rational period_;
};

/// Fourier transform of the indicator of a 1D polybox,
///   sum_j ∫_{a_j}^{b_j} e^{-2πiξx} dx,
/// evaluated per interval as e^{-πiξ(a+b)} (b-a) sinc(πξ(b-a)) in double
/// precision, which is stable through ξ = 0.
std::complex<double> ft_indicator(const PolyBox& set, double xi);

struct ZeroCertificate {
  Rational frequency;
  /// Σ_j e^{2πi(-ξ a_j)} - e^{2πi(-ξ b_j)}, the numerator of the transform.
  ExpSum numerator;
  unsigned long order = 1;
  bool vanishes = false;
};

/// Exact test of whether the transform vanishes at a nonzero rational ξ.
ZeroCertificate ft_zero_certificate(const PolyBox& set, const Rational& xi);
bool ft_zero_exact(const PolyBox& set, const Rational& xi);

struct ResidueCheck {
  /// (r_i - r_j) reduced to [0, period)
  Rational class_offset;
  /// k mod residue_period, the frequency tested being class_offset + period*k
  std::uint64_t residue = 0;
  Rational frequency;
  unsigned long order = 1;
  bool vanishes = false;
};

struct OrthogonalityReport {
  bool orthogonal = false;
  /// Period in k after which e^{-2πi(c + βk)e} repeats for every endpoint e.
  std::uint64_t residue_period = 1;
  std::vector<ResidueCheck> residues;
  /// A difference λ-λ' ≠ 0 at which the transform does not vanish.
  std::optional<Rational> witness;
};

/// Checks that the transform vanishes on (Λ-Λ)\{0}. The difference set is
/// c + βZ over finitely many classes c, and the numerator depends only on
/// k mod residue_period, so every class/residue pair is tested exactly.
OrthogonalityReport orthogonality_check(const PolyBox& set, const SpectrumCandidate& spectrum);

/// Σ_{λ∈Λ} |χ̂_E(ξ-λ)|² truncated to |λ| <= M, with an analytic tail.
///
/// |χ̂_E(η)|² = Σ_{j,k} s_j s_k cos(2πη(c_j-c_k)) / (4π²η²) over endpoints c
/// with signs s. Pairs with β(c_j-c_k) ∈ Z do not oscillate along λ ∈ r+βZ;
/// their tail is summed in closed form with the trigamma function. The
/// remaining pairs oscillate and their tail is bounded by Abel summation,
/// a_first / |sin(πβ(c_j-c_k))|.
struct ParsevalSum {
  double partial = 0.0;
  double tail_estimate = 0.0;
  /// Certified bound on |true sum - (partial + tail_estimate)|, including
  /// a floating-point rounding allowance.
  double remainder_bound = 0.0;
  /// Cruder bound Σ_{|λ|>M} (m/(π|ξ-λ|))², m = number of intervals.
  double crude_tail_bound = 0.0;
  /// Contribution of λ = 0 (when 0 ∈ Λ).
  double zero_term = 0.0;
  std::uint64_t terms = 0;

  [[nodiscard]] double value() const { return partial + tail_estimate; }
};

ParsevalSum truncated_parseval(const PolyBox& set, const SpectrumCandidate& spectrum, double xi,
                               std::int64_t truncation);

struct SampleResult {
  double point = 0.0;
  ParsevalSum sum;
  double deviation = 0.0;
};

struct CompletenessReport {
  bool passed = false;
  double target = 0.0;
  double tolerance = 0.0;
  std::int64_t truncation = 0;
  double worst_deviation = 0.0;
  double worst_remainder = 0.0;
  double worst_crude_tail = 0.0;
  std::vector<SampleResult> samples;
};

/// Checks Σ_λ |χ̂_E(ξ-λ)|² = |E|² at each sample, i.e. that |χ̂_E|² + Λ tiles.
/// Passes when |partial + tail - |E|²| <= tol everywhere. Throws
/// TailBoundExceeded if the certified remainder exceeds tol at some sample.
CompletenessReport completeness_check(const PolyBox& set, const SpectrumCandidate& spectrum,
                                      const std::vector<double>& samples, std::int64_t truncation,
                                      double tolerance);

/// Deterministic uniform samples in [lo, hi).
std::vector<double> uniform_samples(std::size_t count, double lo, double hi, std::uint64_t seed);

}  // namespace nearcube
