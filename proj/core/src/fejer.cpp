#include "nearcube/fejer.hpp"

#include <algorithm>
#include <cmath>

#include "nearcube/error.hpp"
#include "nearcube/parallel.hpp"

namespace nearcube {

namespace {

PolyBox support_interval(const FejerKernel& k) { return PolyBox::from_box(Box({{Rational(0), k.half_width()}})); }

}  // namespace

FejerKernel::FejerKernel(Rational delta) : delta_(std::move(delta)) {
  if (delta_.sign() <= 0) throw InvalidInput("Fejer parameter delta must be positive");
}

Rational FejerKernel::half_width() const { return Rational(1) / (Rational(1) + delta_); }

double FejerKernel::operator()(double x) const {
  return std::max(0.0, 1.0 - (1.0 + delta_.to_double()) * std::abs(x));
}

double FejerKernel::transform(double xi) const {
  return (1.0 + delta_.to_double()) * std::norm(ft_indicator(support_interval(*this), xi));
}

double fejer_eval(const Rational& delta, double x) { return FejerKernel(delta)(x); }
double fejer_ft(const Rational& delta, double xi) { return FejerKernel(delta).transform(xi); }

FejerPartitionReport fejer_partition_check(const Rational& delta, std::int64_t truncation,
                                           const std::vector<double>& samples, double tolerance) {
  const FejerKernel kernel(delta);
  const PolyBox interval = support_interval(kernel);
  const SpectrumCandidate integers({Rational(0)}, Rational(1));
  const double scale = 1.0 + delta.to_double();

  FejerPartitionReport report;
  report.tolerance = tolerance;
  report.truncation = truncation;
  report.samples.resize(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) {
    const auto sum = truncated_parseval(interval, integers, samples[i], truncation);
    auto& s = report.samples[i];
    s.point = samples[i];
    s.partial = scale * sum.partial;
    s.zero_term = scale * sum.zero_term;
    s.tail_estimate = scale * sum.tail_estimate;
    s.remainder_bound = scale * sum.remainder_bound;
    // K̂(η) <= (1+δ)/(πη)², which is the crude bound scaled
    s.crude_tail_bound = scale * sum.crude_tail_bound;
    s.deviation = std::abs(s.partial + s.tail_estimate - 1.0);
  });
  for (const auto& s : report.samples) {
    report.worst_deviation = std::max(report.worst_deviation, s.deviation);
    report.worst_remainder = std::max(report.worst_remainder, s.remainder_bound);
    report.worst_crude_tail = std::max(report.worst_crude_tail, s.crude_tail_bound);
  }
  if (report.worst_remainder > tolerance) {
    throw TailBoundExceeded("truncation " + std::to_string(truncation) + " leaves a certified remainder of " +
                            std::to_string(report.worst_remainder) + " above tolerance " +
                            std::to_string(tolerance));
  }
  report.passed = report.worst_deviation <= tolerance;
  return report;
}

}  // namespace nearcube
