#include "zernike/rational.hpp"

#include <ostream>

namespace zernike {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s), mpz_class(1));
    return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw domain_error("Rational::parse: malformed rational '" + s + "'");
  }
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw domain_error("Rational::to_long: not a representable integer: " + str());
  return v_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(long n) {
  if (n < 0) throw domain_error("factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f, mpz_class(1));
}

Rational pochhammer(const Rational& a, long k) {
  if (k < 0) throw domain_error("pochhammer: negative length");
  Rational r = 1;
  Rational t = a;
  for (long i = 0; i < k; ++i) {
    r *= t;
    t += 1;
  }
  return r;
}

Rational inv_gamma_int(const Rational& k) {
  if (!k.is_integer()) throw domain_error("inv_gamma_int: non-integer argument " + k.str());
  if (k.sign() <= 0) return 0;
  return Rational(1) / factorial(k.to_long() - 1);
}

std::pair<mpz_class, mpz_class> extract_square_part(const mpz_class& n) {
  // trial division up to a bound covers every factorial-derived value at the
  // scales this library runs at (prime factors <= the factorial argument)
  constexpr unsigned long kTrialBound = 100000;
  mpz_class rest = n, d = 1, s = 1;
  for (unsigned long p = 2; p <= kTrialBound && rest > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    mpz_class pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, e / 2);
    d *= pe;
    if (e % 2) s *= p;
    if (p * p > rest) break;
  }
  while (rest > 1 && mpz_probab_prime_p(rest.get_mpz_t(), 30) == 0 &&
         mpz_perfect_square_p(rest.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
    d *= root;
    rest = 1;
    // a residual hard composite that is neither prime nor square stays in s
  }
  s *= rest;
  return {d, s};
}

std::optional<Rational> sqrt_if_square(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  if (r.is_zero()) return Rational(0);
  if (!mpz_perfect_square_p(r.num().get_mpz_t()) ||
      !mpz_perfect_square_p(r.den().get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), r.num().get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), r.den().get_mpz_t());
  return Rational(sn, sd);
}

} // namespace zernike
