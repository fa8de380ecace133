#include <doctest.h>

#include <map>

#include "zernike/coupling.hpp"

using namespace zernike;
using namespace zernike::coupling;

namespace {

// Independent oracle: exact projection lowering from the stretched state.
// Components live in the i^k q sqrt(s) algebra throughout, so the additions
// in the lowering step stay exact.
class CouplingOracle {
public:
  CouplingOracle(long two_a, long two_b, long two_c)
      : two_a_(two_a), two_b_(two_b), two_c_(two_c) {
    // stretched state |c,c>: solve the J+ annihilation recursion downward
    // from alpha = a, then normalize with positive top component
    std::map<long, ExactValue> x;
    x[two_a_] = ExactValue::one();
    for (long two_al = two_a_ - 2; two_al >= lo_alpha(two_c_); two_al -= 2) {
      const Rational al(two_al, 2), a(two_a_, 2), b(two_b_, 2), c(two_c_, 2);
      const Rational A = (a - al) * (a + al + 1);
      const Rational B = (b - c + al + 1) * (b + c - al);
      x[two_al] = -(x[two_al + 2] * ExactValue::sqrt_of(B / A));
    }
    Rational norm2 = 0;
    for (const auto& [al, v] : x) norm2 += v.abs2();
    for (auto& [al, v] : x) v = v * ExactValue::sqrt_of(Rational(1) / norm2);
    states_[two_c_] = std::move(x);
    // lower gamma one unit at a time
    for (long two_ga = two_c_ - 2; two_ga >= -two_c_; two_ga -= 2) {
      const auto& up = states_[two_ga + 2];
      std::map<long, ExactValue> down;
      const Rational c(two_c_, 2), ga(two_ga + 2, 2);
      const Rational C = (c + ga) * (c - ga + 1);
      for (long two_al = lo_alpha(two_ga); two_al <= hi_alpha(two_ga); two_al += 2) {
        const Rational a(two_a_, 2), b(two_b_, 2), al(two_al, 2);
        const Rational be = Rational(two_ga, 2) - al;
        ExactValue v = ExactValue::zero();
        if (auto it = up.find(two_al + 2); it != up.end())
          v = v + it->second * ExactValue::sqrt_of((a + al + 1) * (a - al));
        if (auto it = up.find(two_al); it != up.end())
          v = v + it->second * ExactValue::sqrt_of((b + be + 1) * (b - be));
        down[two_al] = v * ExactValue::sqrt_of(Rational(1) / C);
      }
      states_[two_ga] = std::move(down);
    }
  }

  ExactValue coefficient(long two_al, long two_ga) const {
    const auto st = states_.find(two_ga);
    if (st == states_.end()) return ExactValue::zero();
    const auto it = st->second.find(two_al);
    return it == st->second.end() ? ExactValue::zero() : it->second;
  }

private:
  long lo_alpha(long two_ga) const {
    return std::max(-two_a_, two_ga - two_b_);
  }
  long hi_alpha(long two_ga) const { return std::min(two_a_, two_ga + two_b_); }
  long two_a_, two_b_, two_c_;
  std::map<long, std::map<long, ExactValue>> states_;
};

} // namespace

TEST_CASE("clebsch_gordan pinned values") {
  CHECK(clebsch_gordan({0, 0}, {0, 0}, {0, 0}) == ExactValue::one());
  // C^{1,0}_{1/2,1/2;1/2,-1/2} = 1/sqrt(2)
  CHECK(clebsch_gordan({1, 1}, {1, -1}, {2, 0}) ==
        ExactValue(0, Rational(1, 2), 2));
  // projection rule
  CHECK(clebsch_gordan({2, 2}, {2, 2}, {4, 0}).is_zero());
  // triangle rule
  CHECK(clebsch_gordan({2, 0}, {2, 0}, {6, 0}).is_zero());
  // C^{3/2,1/2}_{1,0;1/2,1/2} = sqrt(2/3)
  CHECK(clebsch_gordan({2, 0}, {1, 1}, {3, 1}) ==
        ExactValue(0, Rational(1, 3), 6));
  CHECK_THROWS_AS(clebsch_gordan(SpinLabel(1, 2), SpinLabel(1, 1), SpinLabel(2, 0)),
                  domain_error);
}

TEST_CASE("clebsch_gordan equals the projection-lowering oracle for a,b,c <= 3") {
  for (long two_a = 0; two_a <= 6; ++two_a) {
    for (long two_b = 0; two_b <= 6; ++two_b) {
      for (long two_c = std::abs(two_a - two_b); two_c <= two_a + two_b; two_c += 2) {
        const CouplingOracle oracle(two_a, two_b, two_c);
        for (long two_ga = -two_c; two_ga <= two_c; two_ga += 2) {
          for (long two_al = -two_a; two_al <= two_a; two_al += 2) {
            const long two_be = two_ga - two_al;
            if (std::abs(two_be) > two_b) continue;
            CHECK(clebsch_gordan({two_a, two_al}, {two_b, two_be}, {two_c, two_ga}) ==
                  oracle.coefficient(two_al, two_ga));
          }
        }
      }
    }
  }
}

TEST_CASE("special_cg") {
  CHECK(special_cg(0, 0, 0) == ExactValue::one());
  // 1/2 x 1/2 -> 0 table value
  CHECK(special_cg(1, 1, 0) == ExactValue(2, Rational(1, 2), 2)); // -1/sqrt(2)
  // sign flip under m -> -m equals (-1)^{n2}
  for (int n = 0; n <= 10; ++n)
    for (int m = -n; m <= n; m += 2)
      for (int n1 = 0; n1 <= n; ++n1)
        CHECK(special_cg(n, -m, n1) ==
              special_cg(n, m, n1).times_minus_one_pow(n - n1));
  CHECK_THROWS_AS(special_cg(2, 1, 0), domain_error);
  CHECK_THROWS_AS(special_cg(2, 0, 3), domain_error);
}

TEST_CASE("special_cg orthogonality underwrites the inverse expansion") {
  for (int n = 0; n <= 10; ++n) {
    for (int m = -n; m <= n; m += 2) {
      for (int mp = -n; mp <= n; mp += 2) {
        ExactValue sum = ExactValue::zero();
        for (int n1 = 0; n1 <= n; ++n1)
          sum = sum + special_cg(n, m, n1) * special_cg(n, mp, n1);
        if (m == mp)
          CHECK(sum == ExactValue::one());
        else
          CHECK(sum.is_zero());
      }
    }
  }
}

TEST_CASE("sixj parameter map") {
  const auto s = sixj_parameter_map(0, 0, 0, 0);
  CHECK(s.l1 == Rational(-1));
  CHECK(s.l2 == Rational(-1, 2));
  CHECK(s.l12 == Rational(-1, 2));
  CHECK(s.l3 == Rational(-1, 2));
  CHECK(s.l == Rational(-1, 2));
  CHECK(s.l23 == Rational(-1));
  CHECK_THROWS_AS(sixj_parameter_map(1, 0, 0, 0), domain_error);

  for (long N = 0; N <= 6; ++N) {
    for (long q1 = 0; q1 <= N; ++q1) {
      for (long p1 = 0; p1 <= N; ++p1) {
        const auto lab = sixj_parameter_map(q1, N - q1, p1, N - p1);
        // every label is an integer or half-integer
        for (const Rational& v : {lab.l1, lab.l2, lab.l12, lab.l3, lab.l, lab.l23})
          CHECK((v + v).is_integer());
      }
    }
  }
}
