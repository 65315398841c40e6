#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace nearcube {

/// Exact arbitrary-precision fraction, always in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT: implicit on purpose, integers are rationals
  Rational(long long num, long long den);
  explicit Rational(mpq_class value);
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "p/q", "p", or "-p/q" (optional surrounding whitespace).
  static Rational parse(std::string_view text);

  /// Serialized form "p/q"; integers are written with denominator 1.
  [[nodiscard]] std::string str() const;

  [[nodiscard]] mpz_class num() const { return value_.get_num(); }
  [[nodiscard]] mpz_class den() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& get() const { return value_; }

  [[nodiscard]] double to_double() const { return value_.get_d(); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  [[nodiscard]] mpz_class floor() const;
  [[nodiscard]] mpz_class ceil() const;
  /// Fractional part in [0, 1).
  [[nodiscard]] Rational frac() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& r);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);
/// Integer power, exponent >= 0.
Rational pow(const Rational& base, unsigned exponent);

using Vec = std::vector<Rational>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);
Vec zero_vec(std::size_t dim);
std::string to_string(const Vec& v);

}  // namespace nearcube

template <>
struct std::hash<nearcube::Rational> {
  std::size_t operator()(const nearcube::Rational& r) const noexcept;
};
