#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

#include "zernike/errors.hpp"

namespace zernike {

/// Arbitrary-precision rational number.
///
/// Always reduced to lowest terms, denominator > 0, zero is 0/1 (these are
/// the invariants of the underlying canonical mpq). Immutable value type,
/// safe to share between threads.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}                     // NOLINT: implicit by design
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parse "a/b" or "a"; throws domain_error on malformed input.
  static Rational parse(const std::string& s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_nonpositive_integer() const { return is_integer() && v_ <= 0; }
  bool is_nonnegative_integer() const { return is_integer() && v_ >= 0; }

  /// Integer value as long; domain_error if not an integer or out of range.
  long to_long() const;

  double to_double() const { return v_.get_d(); }
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.v_))); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class v_;
};

/// n! exactly; domain_error for n < 0.
Rational factorial(long n);

/// Pochhammer symbol (a)_k = a (a+1) ... (a+k-1); 1 for k = 0.
Rational pochhammer(const Rational& a, long k);

/// 1/Gamma(k) for integer rational k: 0 for k <= 0, else 1/(k-1)!.
/// This is the reciprocal-factorial convention used by the regularized
/// hypergeometric sums.
Rational inv_gamma_int(const Rational& k);

/// Exact square root if the argument is a perfect square of a rational.
std::optional<Rational> sqrt_if_square(const Rational& r);

/// Splits n >= 1 as n = d^2 * s with s square-free (best effort beyond the
/// trial-division bound: probable primes and perfect squares are recognized,
/// a residual hard composite is left in s). Returns {d, s}.
std::pair<mpz_class, mpz_class> extract_square_part(const mpz_class& n);

} // namespace zernike
