#include <doctest.h>

#include <cmath>
#include <random>

#include "zernike/hypergeom.hpp"

using namespace zernike;
using namespace zernike::hyp;

TEST_CASE("eval_pFq_unit basics") {
  // zero numerator parameter terminates at s=0
  CHECK(eval_pFq_unit({{Rational(0), Rational(5, 2), Rational(7)},
                       {Rational(3), Rational(1, 3)}}) == Rational(1));
  // two-term sum 1 + (-1)(1)(1)/(1*1*1)
  CHECK(eval_pFq_unit({{Rational(-1), Rational(1), Rational(1)},
                       {Rational(1), Rational(1)}}) == Rational(0));
  // a second zero numerator dominates any admissible denominators
  CHECK(eval_pFq_unit({{Rational(-1), Rational(3, 2), Rational(1, 2), Rational(0)},
                       {Rational(2), Rational(5, 2), Rational(4)}}) == Rational(1));
  CHECK_THROWS_AS(eval_pFq_unit({{Rational(1, 2)}, {Rational(1)}}), domain_error);
}

TEST_CASE("in-range denominator pole is rejected and named") {
  const HypergeometricSpec bad{{Rational(-3), Rational(1)}, {Rational(-2)}};
  CHECK_THROWS_WITH_AS(eval_pFq_unit(bad),
                       doctest::Contains("b[0] = -2 vanishes at term s = 3"),
                       domain_error);
  // pole strictly after termination is fine: (-n)_s stays nonzero for s <= 2
  CHECK_NOTHROW(eval_pFq_unit({{Rational(-2), Rational(1)}, {Rational(-3)}}));
}

TEST_CASE("regularized evaluation folds 1/Gamma") {
  // sum starts where d0 + s >= 1; validated case from the CG algebra
  const Rational v = eval_pFq_regularized({Rational(-2), Rational(-2), Rational(1)},
                                          {Rational(-2)}, Rational(-1));
  CHECK(v == Rational(2));
  // positive integer d0 reduces to pFq / (d0-1)!
  const HypergeometricSpec s{{Rational(-3), Rational(2), Rational(1, 2)},
                             {Rational(4), Rational(3)}};
  CHECK(eval_pFq_regularized(s.num, {Rational(4)}, Rational(3)) ==
        eval_pFq_unit(s) / factorial(2));
}

TEST_CASE("is_saalschutzian") {
  // the even-even 4F3 at q1 = q2 = p1 = 1 (N = 2)
  const HypergeometricSpec ee{{Rational(-1), Rational(4), Rational(2), Rational(2)},
                              {Rational(7, 2), Rational(7, 2), Rational(1)}};
  CHECK(is_saalschutzian(ee));
  // 3F2(-1,1,1; 1,1) is balanced: -1+1+1+1 = 1+1
  CHECK(is_saalschutzian(
      {{Rational(-1), Rational(1), Rational(1)}, {Rational(1), Rational(1)}}));
  CHECK_FALSE(is_saalschutzian(
      {{Rational(-1), Rational(1), Rational(1)}, {Rational(1), Rational(2)}}));
}

TEST_CASE("hahn polynomials") {
  CHECK(hahn_Q(0, Rational(3), Rational(2), Rational(5), 4) == Rational(1));
  for (int p = 0; p <= 4; ++p)
    CHECK(hahn_Q(p, Rational(0), Rational(-5), Rational(-5), 4) == Rational(1));
  // two-term expansion: 1 + (-1)(-1)(-4)/((-2)(-2))
  CHECK(hahn_Q(1, Rational(1), Rational(-3), Rational(-3), 2) == Rational(0));
  CHECK(hahn_Q(2, Rational(3), Rational(-5), Rational(-5), 4) == Rational(1, 8));
  CHECK_THROWS_AS(hahn_Q(3, Rational(0), Rational(1), Rational(1), 2), domain_error);
}

TEST_CASE("dual hahn matches hahn on the self-dual family") {
  // R_{(n+m)/2}(lambda(n2); -(n+1), -(n+1), n) = Q_{n2}((n+m)/2; ...)
  for (int n = 0; n <= 8; ++n) {
    const Rational a(-(n + 1));
    for (int m = -n; m <= n; m += 2)
      for (int n2 = 0; n2 <= n; ++n2)
        CHECK(dual_hahn_R((n + m) / 2, n2, a, a, n) ==
              hahn_Q(n2, Rational((n + m) / 2), a, a, n));
  }
  CHECK(dual_hahn_R(0, 3, Rational(-5), Rational(-5), 4) == Rational(1));
  CHECK(dual_hahn_R(1, 1, Rational(-3), Rational(-3), 2) ==
        hahn_Q(1, Rational(1), Rational(-3), Rational(-3), 2));
}

TEST_CASE("hahn orthogonality with the special weight/norm") {
  for (int N = 0; N <= 8; ++N) {
    const Rational a(-(N + 1));
    for (int m = 0; m <= N; ++m) {
      for (int n = m; n <= N; ++n) {
        Rational sum = 0;
        for (int j = 0; j <= N; ++j) {
          const auto wn = hahn_weight_norm(j, n, a, a, N);
          sum += wn.rho * hahn_Q(m, Rational(j), a, a, N) * hahn_Q(n, Rational(j), a, a, N);
        }
        CHECK(sum == (m == n ? hahn_weight_norm(0, n, a, a, N).d_squared : Rational(0)));
      }
    }
  }
}

TEST_CASE("hahn weight/norm values") {
  const Rational a3(-3);
  CHECK(hahn_weight_norm(0, 0, a3, a3, 2).rho == Rational(1));
  CHECK(hahn_weight_norm(1, 0, a3, a3, 2).rho == Rational(4));
  CHECK(hahn_weight_norm(0, 0, Rational(-2), Rational(-2), 1).d_squared == Rational(2));
  CHECK_THROWS_AS(hahn_weight_norm(0, 0, Rational(1), Rational(1), 2), domain_error);
  CHECK_THROWS_AS(hahn_weight_norm(3, 0, a3, a3, 2), domain_error);
}

TEST_CASE("racah polynomials and truncation") {
  const RacahParams P(Rational(3), Rational(-7, 2), Rational(-4), Rational(7, 2), 3);
  CHECK(P.truncates_via_gamma());
  CHECK(racah_R(0, 2, P) == Rational(1));
  CHECK(racah_R(2, 0, P) == Rational(1));
  // self-duality of the even-even family
  for (int N = 0; N <= 6; ++N) {
    const RacahParams F(Rational(N), -(Rational(N) + Rational(1, 2)), Rational(-(N + 1)),
                        Rational(N) + Rational(1, 2), N);
    for (int a = 0; a <= N; ++a)
      for (int b = 0; b <= N; ++b) CHECK(racah_R(a, b, F) == racah_R(b, a, F));
  }
  CHECK_THROWS_AS(RacahParams(Rational(1), Rational(1), Rational(1), Rational(1), 2),
                  domain_error);
}

namespace {

Rational random_param(std::mt19937& rng, int lo, int hi) {
  std::uniform_int_distribution<int> base(lo, hi), half(0, 1);
  return Rational(base(rng)) + Rational(half(rng), 2);
}

HypergeometricSpec random_balanced_4f3(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  const int n = deg(rng);
  HypergeometricSpec s;
  s.num = {Rational(-n), random_param(rng, -6, 8), random_param(rng, -6, 8),
           random_param(rng, -6, 8)};
  s.den = {random_param(rng, 1, 9), random_param(rng, 1, 9)};
  Rational w = 1;
  for (const auto& a : s.num) w += a;
  for (const auto& b : s.den) w -= b;
  s.den.push_back(w); // forces sum(num)+1 = sum(den)
  return s;
}

} // namespace

TEST_CASE("whipple and reversal preserve value and balance on random specs") {
  std::mt19937 rng(2024);
  int checked = 0;
  while (checked < 200) {
    const auto spec = random_balanced_4f3(rng, 6);
    Rational v;
    try {
      v = eval_pFq_unit(spec);
    } catch (const domain_error&) {
      continue; // pole inside range; draw another spec
    }
    ++checked;
    try {
      const auto t = transform_whipple(spec, {0, 1, 2, 3, 0, 1, 2});
      const Rational rhs = t.prefactor * eval_pFq_unit(t.spec);
      CHECK(is_saalschutzian(t.spec));
      CHECK(rhs == v);
    } catch (const domain_error&) {
      // inadmissible roles or a pole in the transformed series: skip
    }
    try {
      const auto t = transform_reversal(spec, 0);
      const Rational rhs = t.prefactor * eval_pFq_unit(t.spec);
      CHECK(is_saalschutzian(t.spec));
      CHECK(rhs == v);
    } catch (const domain_error&) {
    }
  }
}

TEST_CASE("transform_F32") {
  // degree-0 spec: both sides 1
  {
    const auto t = transform_F32(
        {{Rational(0), Rational(2), Rational(3)}, {Rational(5, 2), Rational(4)}});
    CHECK(t.prefactor * eval_pFq_unit(t.spec) == Rational(1));
  }
  // the coefficient 3F2 at (n,m,n1,n2) = (2,0,1,1): 3F2(-1,-1,2; 1,-2)
  {
    const HypergeometricSpec s{{Rational(-1), Rational(-1), Rational(2)},
                               {Rational(1), Rational(-2)}};
    const auto t = transform_F32(s);
    CHECK(t.prefactor * eval_pFq_unit(t.spec) == eval_pFq_unit(s));
    // lands on the Hahn-form parameter set
    CHECK(t.spec.den == std::vector<Rational>{Rational(-2), Rational(-2)});
  }
  // random terminating specs
  std::mt19937 rng(5);
  int checked = 0;
  while (checked < 200) {
    std::uniform_int_distribution<int> deg(1, 5);
    HypergeometricSpec s{{Rational(-deg(rng)), random_param(rng, -5, 8),
                          random_param(rng, -5, 8)},
                         {random_param(rng, 1, 9), random_param(rng, 1, 9)}};
    try {
      const Rational v = eval_pFq_unit(s);
      const auto t = transform_F32(s);
      const Rational rhs = t.prefactor * eval_pFq_unit(t.spec);
      CHECK(rhs == v);
      ++checked;
    } catch (const domain_error&) {
    }
  }
  // the (4,2,2,2) labels make the straight 3F2 degenerate (d = 0); the
  // regularized pairing carries the identity instead
  {
    const Rational lhs = eval_pFq_regularized(
        {Rational(-2), Rational(-3), Rational(3)}, {Rational(-4)}, Rational(0));
    // Gamma-form prefactor Gamma(d-a-b)/(Gamma(d-a) Gamma(d-b)) at d = 0
    const Rational rhs =
        factorial(4) / (factorial(1) * factorial(2)) *
        eval_pFq_unit({{Rational(-2), Rational(-3), Rational(-7)},
                       {Rational(-4), Rational(-4)}});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("exact evaluation agrees with naive float summation") {
  std::mt19937 rng(99);
  int checked = 0;
  while (checked < 100) {
    const auto spec = random_balanced_4f3(rng, 6);
    Rational v;
    try {
      v = eval_pFq_unit(spec);
    } catch (const domain_error&) {
      continue;
    }
    if (std::abs(v.to_double()) < 1e-6) continue;
    double total = 0.0, term = 1.0, scale = 1.0;
    const long S = spec.termination_degree();
    for (long s = 0; s <= S; ++s) {
      total += term;
      scale = std::max(scale, std::abs(term));
      if (s == S) break;
      double np = 1.0, dp = s + 1.0;
      for (const auto& a : spec.num) np *= a.to_double() + s;
      for (const auto& b : spec.den) dp *= b.to_double() + s;
      term *= np / dp;
    }
    // the float oracle itself loses digits under cancellation; only compare
    // where it is well conditioned
    if (scale > 100.0 * std::abs(v.to_double())) continue;
    ++checked;
    CHECK(std::abs(total - v.to_double()) <= 1e-12 * std::abs(v.to_double()));
  }
}
