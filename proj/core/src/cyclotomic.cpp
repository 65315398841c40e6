#include "nearcube/cyclotomic.hpp"

#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numbers>

#include "nearcube/error.hpp"

namespace nearcube {

namespace {

constexpr unsigned long kMaxOrder = 200000;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact quotient a / b for monic b dividing a
IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  IntPoly rem = a;
  const std::size_t db = b.size() - 1;
  IntPoly q(rem.size() - db, 0);
  for (std::size_t i = rem.size(); i-- > db;) {
    const mpz_class c = rem[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  trim(q);
  return q;
}

}  // namespace

const IntPoly& cyclotomic(unsigned long n) {
  if (n == 0) throw InvalidInput("cyclotomic index must be positive");
  if (n > kMaxOrder) throw InvalidInput("cyclotomic order " + std::to_string(n) + " exceeds supported range");
  static std::mutex mutex;
  static std::map<unsigned long, std::unique_ptr<IntPoly>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned long d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(p, cyclotomic(d));
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::make_unique<IntPoly>(std::move(p)));
  return *it->second;
}

IntPoly poly_mod_monic(IntPoly p, const IntPoly& divisor) {
  trim(p);
  const std::size_t dd = divisor.size() - 1;
  for (std::size_t i = p.size(); i-- > dd;) {
    const mpz_class c = p[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) p[i - dd + j] -= c * divisor[j];
  }
  trim(p);
  return p;
}

void ExpSum::add(const mpz_class& coeff, const Rational& exponent) {
  const Rational q = exponent.frac();
  auto& slot = terms_[q];
  slot += coeff;
  if (slot == 0) terms_.erase(q);
}

unsigned long ExpSum::order() const {
  mpz_class n = 1;
  for (const auto& [q, c] : terms_) {
    mpz_class den = q.den();
    mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), den.get_mpz_t());
  }
  if (!n.fits_ulong_p()) throw InvalidInput("root-of-unity order too large");
  return n.get_ui();
}

bool ExpSum::vanishes() const {
  if (terms_.empty()) return true;
  const unsigned long n = order();
  IntPoly p(n, 0);
  for (const auto& [q, c] : terms_) {
    const mpz_class k = q.num() * (mpz_class(n) / q.den());
    p[k.get_ui()] += c;
  }
  return poly_mod_monic(std::move(p), cyclotomic(n)).empty();
}

std::complex<double> ExpSum::evaluate() const {
  std::complex<double> z{0.0, 0.0};
  for (const auto& [q, c] : terms_) {
    z += c.get_d() * std::polar(1.0, 2.0 * std::numbers::pi * q.to_double());
  }
  return z;
}

}  // namespace nearcube
