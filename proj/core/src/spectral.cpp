#include "nearcube/spectral.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/special_functions/trigamma.hpp>

#include "nearcube/error.hpp"
#include "nearcube/parallel.hpp"

namespace nearcube {

namespace {

constexpr double kPi = std::numbers::pi;

void require_line(const PolyBox& set) {
  if (set.dim() != 1) throw DimensionMismatch("spectral routines are one-dimensional");
}

Rational mod_period(const Rational& x, const Rational& period) {
  return x - period * Rational((x / period).floor(), mpz_class(1));
}

struct EndpointPair {
  Rational diff;
  int sign = 1;
  bool resonant = false;  // β·diff ∈ Z
  double inv_sin = 0.0;   // 1 / |sin(πβ·diff)| when not resonant
};

struct DoubleInterval {
  double lo = 0.0;
  double length = 0.0;
};

std::vector<DoubleInterval> intervals_of(const PolyBox& set) {
  std::vector<DoubleInterval> out;
  for (const auto& b : set.boxes()) out.push_back({b[0].lo.to_double(), b[0].length().to_double()});
  return out;
}

std::complex<double> transform(const std::vector<DoubleInterval>& parts, double xi) {
  std::complex<double> total{0.0, 0.0};
  for (const auto& [a, len] : parts) {
    const double z = kPi * xi * len;
    const double sinc = z == 0.0 ? 1.0 : std::sin(z) / z;
    total += std::polar(len * sinc, -kPi * xi * (2.0 * a + len));
  }
  return total;
}

}  // namespace

SpectrumCandidate::SpectrumCandidate(std::vector<Rational> reps, Rational period) : period_(std::move(period)) {
  if (period_.sign() <= 0) throw InvalidInput("spectrum period must be positive");
  bool has_zero = false;
  for (auto& r : reps) {
    const Rational reduced = mod_period(r, period_);
    for (const auto& kept : reps_) {
      if (mod_period(kept, period_) == reduced) throw InvalidInput("spectrum representatives repeat modulo the period");
    }
    has_zero = has_zero || reduced.is_zero();
    reps_.push_back(std::move(r));
  }
  if (reps_.empty()) throw InvalidInput("spectrum needs at least one representative");
  if (!has_zero) throw InvalidInput("spectrum must contain 0");
}

Rational SpectrumCandidate::density() const {
  return Rational(static_cast<long long>(reps_.size())) / period_;
}

std::complex<double> ft_indicator(const PolyBox& set, double xi) {
  require_line(set);
  return transform(intervals_of(set), xi);
}

ZeroCertificate ft_zero_certificate(const PolyBox& set, const Rational& xi) {
  require_line(set);
  if (xi.is_zero()) throw InvalidInput("ft_zero_exact needs a nonzero frequency; the value at 0 is the measure");
  ZeroCertificate cert;
  cert.frequency = xi;
  for (const auto& b : set.boxes()) {
    cert.numerator.add(1, -(xi * b[0].lo));
    cert.numerator.add(-1, -(xi * b[0].hi));
  }
  cert.order = cert.numerator.order();
  cert.vanishes = cert.numerator.vanishes();
  return cert;
}

bool ft_zero_exact(const PolyBox& set, const Rational& xi) { return ft_zero_certificate(set, xi).vanishes; }

OrthogonalityReport orthogonality_check(const PolyBox& set, const SpectrumCandidate& spectrum) {
  require_line(set);
  const Rational& beta = spectrum.period();

  mpz_class period = 1;
  for (const auto& b : set.boxes()) {
    for (const auto* e : {&b[0].lo, &b[0].hi}) {
      mpz_class den = (beta * *e).den();
      mpz_lcm(period.get_mpz_t(), period.get_mpz_t(), den.get_mpz_t());
    }
  }
  if (!period.fits_ulong_p() || period > 1000000) throw InvalidInput("residue period too large for exhaustive check");

  std::vector<Rational> classes;
  for (const auto& ri : spectrum.reps()) {
    for (const auto& rj : spectrum.reps()) classes.push_back(mod_period(ri - rj, beta));
  }
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

  OrthogonalityReport report;
  report.residue_period = period.get_ui();
  const Rational full_cycle = beta * Rational(period, mpz_class(1));
  for (const auto& c : classes) {
    for (std::uint64_t k = 0; k < report.residue_period; ++k) {
      Rational xi = c + beta * Rational(static_cast<long long>(k));
      // ξ = 0 is the excluded difference; its class is represented by ξ + β·period
      if (xi.is_zero()) xi = full_cycle;
      const auto cert = ft_zero_certificate(set, xi);
      report.residues.push_back({c, k, xi, cert.order, cert.vanishes});
      if (!cert.vanishes && !report.witness) report.witness = xi;
    }
  }
  report.orthogonal = !report.witness.has_value();
  return report;
}

ParsevalSum truncated_parseval(const PolyBox& set, const SpectrumCandidate& spectrum, double xi,
                               std::int64_t truncation) {
  require_line(set);
  if (truncation <= 0) throw InvalidInput("truncation must be positive");
  if (!(std::abs(xi) < static_cast<double>(truncation))) throw InvalidInput("sample point must lie inside the truncation");

  const Rational& beta = spectrum.period();
  const double beta_d = beta.to_double();
  const Rational m_bound(static_cast<long long>(truncation));

  std::vector<Rational> ends;
  std::vector<int> signs;
  for (const auto& b : set.boxes()) {
    ends.push_back(b[0].lo);
    signs.push_back(1);
    ends.push_back(b[0].hi);
    signs.push_back(-1);
  }
  std::vector<EndpointPair> pairs;
  for (std::size_t j = 0; j < ends.size(); ++j) {
    for (std::size_t k = 0; k < ends.size(); ++k) {
      if (j == k) continue;
      EndpointPair p{ends[j] - ends[k], signs[j] * signs[k], false, 0.0};
      p.resonant = (beta * p.diff).is_integer();
      if (!p.resonant) p.inv_sin = 1.0 / std::abs(std::sin(kPi * (beta * p.diff).to_double()));
      pairs.push_back(std::move(p));
    }
  }
  const double intervals = static_cast<double>(set.size());
  const auto parts = intervals_of(set);
  const double four_pi2 = 4.0 * kPi * kPi;

  ParsevalSum out;
  for (const auto& r : spectrum.reps()) {
    const mpz_class k_hi = ((m_bound - r) / beta).floor() + 1;   // first k with r+βk > M
    const mpz_class k_lo = ((-m_bound - r) / beta).ceil() - 1;   // last k with r+βk < -M
    const double r_d = r.to_double();

    if (!k_lo.fits_slong_p() || !k_hi.fits_slong_p()) throw InvalidInput("truncation too large");
    const long k_end = k_hi.get_si();
    for (long k = k_lo.get_si() + 1; k < k_end; ++k) {
      const double lambda = r_d + beta_d * static_cast<double>(k);
      const double value = std::norm(transform(parts, xi - lambda));
      out.partial += value;
      ++out.terms;
      if (lambda == 0.0) out.zero_term = value;
    }

    const double first_up = (r + beta * Rational(k_hi, mpz_class(1))).to_double() - xi;
    const double first_down = xi - (r + beta * Rational(k_lo, mpz_class(1))).to_double();
    const double tail_sq = (boost::math::trigamma(first_up / beta_d) + boost::math::trigamma(first_down / beta_d)) /
                           (beta_d * beta_d);

    double resonant = 2.0 * intervals;  // j == k terms
    double oscillating = 0.0;
    for (const auto& p : pairs) {
      if (p.resonant) {
        resonant += p.sign * std::cos(2.0 * kPi * (xi - r_d) * p.diff.to_double());
      } else {
        oscillating += p.inv_sin;
      }
    }
    out.tail_estimate += resonant * tail_sq / four_pi2;
    out.remainder_bound +=
        oscillating * (1.0 / (first_up * first_up) + 1.0 / (first_down * first_down)) / four_pi2;
    out.crude_tail_bound += intervals * intervals / (kPi * kPi) * tail_sq;
  }
  out.remainder_bound += 8.0 * DBL_EPSILON * (static_cast<double>(out.terms) + 1.0) * std::max(1.0, out.partial);
  return out;
}

CompletenessReport completeness_check(const PolyBox& set, const SpectrumCandidate& spectrum,
                                      const std::vector<double>& samples, std::int64_t truncation,
                                      double tolerance) {
  require_line(set);
  const Rational mass = measure(set);
  if (mass.is_zero()) throw InvalidInput("completeness check needs a set of positive measure");

  CompletenessReport report;
  report.target = (mass * mass).to_double();
  report.tolerance = tolerance;
  report.truncation = truncation;
  report.samples.resize(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) {
    auto& s = report.samples[i];
    s.point = samples[i];
    s.sum = truncated_parseval(set, spectrum, samples[i], truncation);
    s.deviation = std::abs(s.sum.value() - report.target);
  });

  for (const auto& s : report.samples) {
    report.worst_deviation = std::max(report.worst_deviation, s.deviation);
    report.worst_remainder = std::max(report.worst_remainder, s.sum.remainder_bound);
    report.worst_crude_tail = std::max(report.worst_crude_tail, s.sum.crude_tail_bound);
  }
  if (report.worst_remainder > tolerance) {
    throw TailBoundExceeded("truncation " + std::to_string(truncation) + " leaves a certified remainder of " +
                            std::to_string(report.worst_remainder) + " above tolerance " +
                            std::to_string(tolerance));
  }
  report.passed = report.worst_deviation <= tolerance;
  return report;
}

std::vector<double> uniform_samples(std::size_t count, double lo, double hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> out(count);
  for (auto& x : out) x = dist(rng);
  return out;
}

}  // namespace nearcube
