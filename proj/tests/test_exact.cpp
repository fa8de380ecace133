#include <doctest.h>

#include <complex>
#include <random>

#include "zernike/exact_value.hpp"

using namespace zernike;

TEST_CASE("factorial") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(5) == Rational(120));
  // iterated multiplication oracle
  Rational acc = 1;
  for (long i = 1; i <= 20; ++i) acc *= i;
  CHECK(factorial(20) == acc);
  CHECK(factorial(20).str() == "2432902008176640000");
  CHECK_THROWS_AS(factorial(-1), domain_error);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(3, 2), 0) == Rational(1));
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(pochhammer(Rational(-2), 3) == Rational(0)); // hits a zero factor
}

TEST_CASE("pochhammer additivity (a)_{j+k} = (a)_j (a+j)_k") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 12), len(0, 20);
  for (int it = 0; it < 200; ++it) {
    const Rational a(num(rng), den(rng));
    const long j = len(rng), k = len(rng);
    CHECK(pochhammer(a, j + k) == pochhammer(a, j) * pochhammer(a + Rational(j), k));
  }
}

TEST_CASE("rational parsing and invariants") {
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(4, -6) == Rational(-2, 3));
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(-2, 3).den() > 0);
  CHECK_THROWS_AS(Rational(1, 0), domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), domain_error);
}

TEST_CASE("sqrt_normalize") {
  CHECK(ExactValue(1, 1, 8) == ExactValue(1, 2, 2));
  CHECK(ExactValue(1, 1, 1) == ExactValue(1, 1, 1));
  CHECK(ExactValue(3, Rational(5, 6), Rational(9, 4)) ==
        ExactValue(3, Rational(5, 4), 1));
  const ExactValue v(2, Rational(3, 7), Rational(50, 27));
  CHECK(sqrt_normalize(v) == v); // idempotent
  CHECK_THROWS_AS(ExactValue(0, 1, -2), domain_error);
}

TEST_CASE("exact multiplication and abs2") {
  CHECK(ExactValue(1, 1, 2) * ExactValue(1, 1, 2) == ExactValue(2, 2, 1));
  CHECK(ExactValue(3, Rational(1, 2), 3).abs2() == Rational(3, 4));
  CHECK(ExactValue(0, 1, 1).to_float() == std::complex<double>(1.0, 0.0));
  // zero is canonical and absorbing
  CHECK(ExactValue(2, 0, 17) == ExactValue::zero());
  CHECK((ExactValue(1, 3, 5) * ExactValue::zero()).is_zero());
}

TEST_CASE("abs2 is multiplicative (random)") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> ph(0, 3);
  std::uniform_int_distribution<long> num(1, 40), den(1, 20), rad(0, 60);
  for (int it = 0; it < 300; ++it) {
    const ExactValue a(ph(rng), Rational(num(rng), den(rng)), Rational(rad(rng)));
    const ExactValue b(ph(rng), Rational(num(rng), den(rng)), Rational(rad(rng)));
    CHECK((a * b).abs2() == a.abs2() * b.abs2());
  }
}

TEST_CASE("to_float is value-preserving under normalization") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> ph(0, 3);
  std::uniform_int_distribution<long> num(1, 1000), den(1, 1000), rn(1, 5000), rd(1, 50);
  for (int it = 0; it < 300; ++it) {
    const int p = ph(rng);
    const Rational mag(num(rng), den(rng)), rad(rn(rng), rd(rng));
    const std::complex<double> direct =
        std::complex<double>{p == 0 ? 1.0 : p == 2 ? -1.0 : 0.0,
                             p == 1 ? 1.0 : p == 3 ? -1.0 : 0.0} *
        mag.to_double() * std::sqrt(rad.to_double());
    const auto normalized = ExactValue(p, mag, rad).to_float();
    CHECK(std::abs(normalized - direct) <= 1e-15 * std::abs(direct));
  }
}

TEST_CASE("restricted exact addition") {
  const ExactValue a(0, Rational(1, 2), 3);
  const ExactValue b(2, Rational(1, 3), 3);
  CHECK(a + b == ExactValue(0, Rational(1, 6), 3));
  CHECK((a + (-a)).is_zero());
  CHECK(a + ExactValue::zero() == a);
  // sqrt(3) + sqrt(5) leaves the algebra
  CHECK_THROWS_AS(a + ExactValue(0, 1, 5), incompatible_radicals);
  // 1 + i leaves the algebra
  CHECK_THROWS_AS(ExactValue::one() + ExactValue(1, 1, 1), incompatible_radicals);
}

TEST_CASE("pi unit bookkeeping") {
  const ExactValue c(0, 2, 1, -1); // 2/sqrt(pi)
  CHECK(c.pi_half_power() == -1);
  CHECK((c * c).pi_half_power() == -2);
  CHECK(c.to_float().real() == doctest::Approx(2.0 / std::sqrt(M_PI)).epsilon(1e-15));
  CHECK_THROWS_AS(c.abs2(), domain_error);
}
