#pragma once

#include <complex>

#include "zernike/rational.hpp"

namespace zernike {

/// A number of the closed multiplicative form
///
///     i^phase * magnitude * sqrt(radicand) * pi^(pi_half/2)
///
/// with magnitude a positive rational, radicand a square-free positive
/// integer and phase in {0,1,2,3}. Zero is canonically (0, 0, 1, 0). Signs
/// (-1)^k live in the phase; the optional pi^(±1/2) unit carries the
/// normalization constants of the basis functions and cancels in every
/// coefficient ratio.
///
/// Multiplication is closed. Addition is partial: it is defined exactly when
/// both operands lie on the same ray pair (equal radicand and pi power,
/// phases equal mod 2) and throws incompatible_radicals otherwise.
class ExactValue {
public:
  /// Zero.
  ExactValue() : phase_(0), mag_(0), rad_(1), pi_half_(0) {}

  /// i^phase * magnitude * sqrt(radicand) * pi^(pi_half/2), normalized.
  /// radicand must be >= 0; a negative magnitude is folded into the phase.
  ExactValue(int phase, Rational magnitude, Rational radicand, int pi_half = 0);

  static ExactValue zero() { return ExactValue(); }
  static ExactValue one() { return ExactValue(0, 1, 1); }
  static ExactValue from_rational(const Rational& q) { return ExactValue(0, q, 1); }
  /// sign * sqrt(r), r >= 0.
  static ExactValue sqrt_of(const Rational& r, int sign = 1);

  int phase() const { return phase_; }
  const Rational& magnitude() const { return mag_; }
  Rational radicand() const { return Rational(rad_, mpz_class(1)); }
  int pi_half_power() const { return pi_half_; }

  bool is_zero() const { return mag_.is_zero(); }
  bool is_real() const { return is_zero() || phase_ % 2 == 0; }

  ExactValue conj() const;
  ExactValue operator-() const { return *this * ExactValue(2, 1, 1); }

  /// Multiply by i^k.
  ExactValue times_i_pow(long k) const;
  /// Multiply by (-1)^k.
  ExactValue times_minus_one_pow(long k) const { return times_i_pow(2 * k); }

  friend ExactValue operator*(const ExactValue& a, const ExactValue& b);
  friend ExactValue operator*(const ExactValue& a, const Rational& q);

  /// Exact sum; throws incompatible_radicals if the result leaves the algebra.
  friend ExactValue operator+(const ExactValue& a, const ExactValue& b);
  friend ExactValue operator-(const ExactValue& a, const ExactValue& b) { return a + (-b); }

  friend bool operator==(const ExactValue& a, const ExactValue& b);
  friend bool operator!=(const ExactValue& a, const ExactValue& b) { return !(a == b); }

  /// |value|^2 = magnitude^2 * radicand, exactly rational.
  /// Requires pi_half == 0 (coefficient values); throws otherwise.
  Rational abs2() const;

  /// Evaluate to a complex double (correctly rounded square root).
  std::complex<double> to_float() const;

private:
  int phase_;       // exponent of i, mod 4
  Rational mag_;    // > 0 unless zero
  mpz_class rad_;   // square-free positive integer
  int pi_half_;     // exponent of sqrt(pi)

  void normalize(Rational radicand);
};

inline ExactValue exact_mul(const ExactValue& a, const ExactValue& b) { return a * b; }
inline ExactValue exact_add(const ExactValue& a, const ExactValue& b) { return a + b; }
inline Rational exact_abs2(const ExactValue& a) { return a.abs2(); }
inline std::complex<double> to_float(const ExactValue& a) { return a.to_float(); }

/// Idempotent square-free normalization (construction already normalizes;
/// exposed as the identity-preserving operation on already-built values).
ExactValue sqrt_normalize(const ExactValue& v);

} // namespace zernike
