#include "zernike/exact_value.hpp"

#include <cmath>

namespace zernike {

namespace {
int mod4(long k) { return static_cast<int>(((k % 4) + 4) % 4); }
} // namespace

ExactValue::ExactValue(int phase, Rational magnitude, Rational radicand, int pi_half)
    : phase_(mod4(phase)), mag_(std::move(magnitude)), rad_(1), pi_half_(pi_half) {
  if (radicand.sign() < 0)
    throw domain_error("ExactValue: negative radicand " + radicand.str());
  if (mag_.sign() < 0) {
    phase_ = mod4(phase_ + 2);
    mag_ = -mag_;
  }
  normalize(radicand);
}

void ExactValue::normalize(Rational radicand) {
  if (mag_.is_zero() || radicand.is_zero()) {
    phase_ = 0;
    mag_ = 0;
    rad_ = 1;
    pi_half_ = 0;
    return;
  }
  // sqrt(p/q) = sqrt(p q)/q, then pull the square part out of p q
  mag_ /= Rational(radicand.den(), mpz_class(1));
  auto [d, s] = extract_square_part(radicand.num() * radicand.den());
  mag_ *= Rational(d, mpz_class(1));
  rad_ = s;
}

ExactValue ExactValue::sqrt_of(const Rational& r, int sign) {
  return ExactValue(sign < 0 ? 2 : 0, 1, r);
}

ExactValue ExactValue::conj() const {
  ExactValue r = *this;
  r.phase_ = mod4(-r.phase_);
  return r;
}

ExactValue ExactValue::times_i_pow(long k) const {
  if (is_zero()) return *this;
  ExactValue r = *this;
  r.phase_ = mod4(r.phase_ + k);
  return r;
}

ExactValue operator*(const ExactValue& a, const ExactValue& b) {
  if (a.is_zero() || b.is_zero()) return ExactValue::zero();
  return ExactValue(a.phase_ + b.phase_, a.mag_ * b.mag_,
                    Rational(a.rad_ * b.rad_, mpz_class(1)), a.pi_half_ + b.pi_half_);
}

ExactValue operator*(const ExactValue& a, const Rational& q) {
  return a * ExactValue::from_rational(q);
}

ExactValue operator+(const ExactValue& a, const ExactValue& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.rad_ != b.rad_ || a.pi_half_ != b.pi_half_ || a.phase_ % 2 != b.phase_ % 2)
    throw incompatible_radicals("ExactValue: sum leaves the i^k q sqrt(s) algebra");
  const int base = a.phase_ % 2;
  const Rational sa = a.phase_ == base ? a.mag_ : -a.mag_;
  const Rational sb = b.phase_ == base ? b.mag_ : -b.mag_;
  return ExactValue(base, sa + sb, Rational(a.rad_, mpz_class(1)), a.pi_half_);
}

bool operator==(const ExactValue& a, const ExactValue& b) {
  return a.phase_ == b.phase_ && a.mag_ == b.mag_ && a.rad_ == b.rad_ &&
         a.pi_half_ == b.pi_half_;
}

Rational ExactValue::abs2() const {
  if (pi_half_ != 0)
    throw domain_error("ExactValue::abs2: value carries a pi unit");
  return mag_ * mag_ * Rational(rad_, mpz_class(1));
}

std::complex<double> ExactValue::to_float() const {
  if (is_zero()) return {0.0, 0.0};
  double v = mag_.to_double() * std::sqrt(Rational(rad_, mpz_class(1)).to_double());
  if (pi_half_ != 0) v *= std::pow(M_PI, 0.5 * pi_half_);
  switch (phase_) {
    case 0: return {v, 0.0};
    case 1: return {0.0, v};
    case 2: return {-v, 0.0};
    default: return {0.0, -v};
  }
}

ExactValue sqrt_normalize(const ExactValue& v) {
  return ExactValue(v.phase(), v.magnitude(), v.radicand(), v.pi_half_power());
}

} // namespace zernike
