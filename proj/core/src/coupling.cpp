#include "zernike/coupling.hpp"

#include <cstdlib>

namespace zernike::coupling {

SpinLabel::SpinLabel(long tj, long tm) : two_j(tj), two_m(tm) {
  if (tj < 0 || std::abs(tm) > tj || (tj + tm) % 2 != 0)
    throw domain_error("SpinLabel: invalid (2j=" + std::to_string(tj) +
                       ", 2m=" + std::to_string(tm) + ")");
}

ExactValue clebsch_gordan(const SpinLabel& la, const SpinLabel& lb, const SpinLabel& lc) {
  const Rational a = la.j(), al = la.m();
  const Rational b = lb.j(), be = lb.m();
  const Rational c = lc.j(), ga = lc.m();
  if (ga != al + be) return ExactValue::zero();
  if (c < abs(a - b) || c > a + b || !(a + b - c).is_integer()) return ExactValue::zero();

  // square of the prefactor; every argument is a nonnegative integer here
  const Rational rad2 =
      (Rational(2) * c + 1) * factorial((b + c - a).to_long()) *
      factorial((b - be).to_long()) * factorial((c + ga).to_long()) *
      factorial((c - ga).to_long()) /
      (factorial((a + b - c).to_long()) * factorial((a - b + c).to_long()) *
       factorial((a + b + c + 1).to_long()) * factorial((a + al).to_long()) *
       factorial((a - al).to_long()) * factorial((b + be).to_long()));

  // (2a)! * regularized 3F2(-a-b+c, -a+al, b-a+c+1; -2a, c-a-be+1 | 1); the
  // 1/(c-a-be)! of the closed form is folded into the series, which makes the
  // formula valid also when c-a-be is a negative integer
  const Rational series = hyp::eval_pFq_regularized(
      {c - a - b, al - a, b - a + c + 1}, {Rational(-2) * a}, c - a - be + 1);
  const Rational fac = factorial((Rational(2) * a).to_long()) * series;

  return ExactValue::sqrt_of(rad2) * fac;
}

ExactValue special_cg(int n, int m, int n1) {
  if (n < 0 || std::abs(m) > n || (n - std::abs(m)) % 2 != 0)
    throw domain_error("special_cg: invalid polar label");
  if (n1 < 0 || n1 > n) throw domain_error("special_cg: n1 out of range 0..n");
  return clebsch_gordan(SpinLabel(n, -m), SpinLabel(n, m), SpinLabel(2 * n1, 0));
}

SixjLabels sixj_parameter_map(long q1, long q2, long p1, long p2) {
  if (q1 < 0 || q2 < 0 || p1 < 0 || p2 < 0 || q1 + q2 != p1 + p2)
    throw domain_error("sixj_parameter_map: requires q1+q2 = p1+p2 = N >= 0");
  const long N = q1 + q2;
  SixjLabels s;
  s.l1 = Rational(-N, 2) - 1;
  s.l2 = Rational(p1 - q1 - 1, 2);
  s.l12 = Rational(q2 - p1 - 1, 2);
  s.l3 = Rational(N - 1, 2);
  s.l = Rational(q1 - p1 - 1, 2);
  s.l23 = Rational(-1 - q1) - Rational(p1 + q2, 2);
  return s;
}

hyp::HypergeometricSpec sixj_f43_spec(const SixjLabels& s) {
  return {{s.l1 - s.l2 - s.l12, s.l3 - s.l2 - s.l23, -s.l1 - s.l2 - s.l12 - 1,
           -s.l2 - s.l3 - s.l23 - 1},
          {Rational(-2) * s.l2, s.l - s.l2 - s.l12 - s.l23,
           -s.l2 - s.l12 - s.l - s.l23 - 1}};
}

} // namespace zernike::coupling
