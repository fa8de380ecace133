#include "zernike/hypergeom.hpp"

#include <algorithm>
#include <numeric>

namespace zernike::hyp {

namespace {

Rational sum_of(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

} // namespace

long HypergeometricSpec::termination_degree() const {
  long best = -1;
  for (const auto& a : num) {
    if (!a.is_nonpositive_integer()) continue;
    const long t = -a.to_long();
    if (best < 0 || t < best) best = t;
  }
  if (best < 0)
    throw domain_error("HypergeometricSpec: no nonpositive-integer numerator parameter");
  return best;
}

Rational eval_pFq_unit(const HypergeometricSpec& spec) {
  const long S = spec.termination_degree();
  Rational total = 0;
  Rational term = 1;
  for (long s = 0; s <= S; ++s) {
    total += term;
    if (s == S) break;
    Rational numprod = 1;
    for (const auto& a : spec.num) numprod *= (a + Rational(s));
    Rational denprod = Rational(s + 1);
    for (std::size_t j = 0; j < spec.den.size(); ++j) {
      const Rational b = spec.den[j] + Rational(s);
      if (b.is_zero())
        throw domain_error("eval_pFq_unit: denominator parameter b[" + std::to_string(j) +
                           "] = " + spec.den[j].str() + " vanishes at term s = " +
                           std::to_string(s + 1));
      denprod *= b;
    }
    term = term * numprod / denprod;
  }
  return total;
}

Rational eval_pFq_regularized(const std::vector<Rational>& num,
                              const std::vector<Rational>& den_other,
                              const Rational& d0) {
  if (!d0.is_integer())
    throw domain_error("eval_pFq_regularized: folded parameter must be an integer, got " +
                       d0.str());
  HypergeometricSpec probe{num, den_other};
  const long S = probe.termination_degree();
  Rational total = 0;
  Rational partial = 1; // prod (a)_s / (prod (b)_s * s!), without the folded gamma
  for (long s = 0; s <= S; ++s) {
    total += partial * inv_gamma_int(d0 + Rational(s));
    if (s == S) break;
    Rational numprod = 1;
    for (const auto& a : num) numprod *= (a + Rational(s));
    Rational denprod = Rational(s + 1);
    for (std::size_t j = 0; j < den_other.size(); ++j) {
      const Rational b = den_other[j] + Rational(s);
      if (b.is_zero())
        throw domain_error("eval_pFq_regularized: denominator parameter b[" +
                           std::to_string(j) + "] = " + den_other[j].str() +
                           " vanishes at term s = " + std::to_string(s + 1));
      denprod *= b;
    }
    partial = partial * numprod / denprod;
  }
  return total;
}

bool is_saalschutzian(const HypergeometricSpec& spec) {
  return sum_of(spec.num) + 1 == sum_of(spec.den);
}

Rational hahn_Q(long p, const Rational& x, const Rational& alpha, const Rational& beta,
                long N) {
  if (p < 0 || p > N)
    throw domain_error("hahn_Q: degree out of range 0..N");
  return eval_pFq_unit({{Rational(-p), -x, Rational(p) + alpha + beta + 1},
                        {Rational(-N), alpha + 1}});
}

Rational dual_hahn_R(long p, long x, const Rational& gamma, const Rational& delta, long N) {
  if (p < 0 || p > N || x < 0 || x > N)
    throw domain_error("dual_hahn_R: labels out of range 0..N");
  return eval_pFq_unit({{Rational(-p), Rational(-x), Rational(x) + gamma + delta + 1},
                        {gamma + 1, Rational(-N)}});
}

RacahParams::RacahParams(Rational a, Rational b, Rational g, Rational d, long n)
    : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(g)), delta(std::move(d)),
      N(n) {
  if (N < 0) throw domain_error("RacahParams: negative N");
  if (!truncates_via_alpha() && !truncates_via_beta_delta() && !truncates_via_gamma())
    throw domain_error("RacahParams: no truncation condition holds for N = " +
                       std::to_string(N));
}

Rational racah_R(long n, long x, const RacahParams& p) {
  if (n < 0 || n > p.N || x < 0 || x > p.N)
    throw domain_error("racah_R: degree or lattice index out of range 0..N");
  return eval_pFq_unit(
      {{Rational(-n), Rational(n) + p.alpha + p.beta + 1, Rational(-x),
        Rational(x) + p.gamma + p.delta + 1},
       {p.alpha + 1, p.beta + p.delta + 1, p.gamma + 1}});
}

TransformResult transform_F32(const HypergeometricSpec& spec) {
  if (spec.num.size() != 3 || spec.den.size() != 2)
    throw domain_error("transform_F32: expects a 3F2");
  const Rational &a = spec.num[0], &b = spec.num[1], &c = spec.num[2];
  const Rational &d = spec.den[0], &e = spec.den[1];
  if (!a.is_nonpositive_integer())
    throw domain_error("transform_F32: num[0] must be a nonpositive integer");
  const long n = -a.to_long();
  const Rational dn = pochhammer(d, n);
  if (dn.is_zero())
    throw domain_error("transform_F32: (d)_n vanishes, d = " + d.str());
  TransformResult r;
  r.prefactor = pochhammer(d - b, n) / dn;
  r.spec = HypergeometricSpec{{a, b, e - c}, {a + b - d + 1, e}};
  return r;
}

TransformResult transform_whipple(const HypergeometricSpec& spec, const WhippleRoles& roles) {
  if (spec.num.size() != 4 || spec.den.size() != 3)
    throw domain_error("transform_whipple: expects a 4F3");
  if (!is_saalschutzian(spec))
    throw domain_error("transform_whipple: series is not balanced");
  const Rational mn = spec.num.at(roles.n_index);
  if (!mn.is_nonpositive_integer())
    throw domain_error("transform_whipple: selected parameter is not a nonpositive integer");
  const long n = -mn.to_long();
  if (spec.termination_degree() < n)
    throw domain_error("transform_whipple: series terminates before the selected degree");
  const Rational x = spec.num.at(roles.x_index), y = spec.num.at(roles.y_index),
                 z = spec.num.at(roles.z_index);
  const Rational u = spec.den.at(roles.u_index), v = spec.den.at(roles.v_index),
                 w = spec.den.at(roles.w_index);
  const Rational un = pochhammer(u, n), vn = pochhammer(v, n);
  if (un.is_zero() || vn.is_zero())
    throw domain_error("transform_whipple: denominator Pochhammer vanishes");
  TransformResult r;
  r.prefactor = pochhammer(v - z, n) * pochhammer(u - z, n) / (vn * un);
  r.spec = HypergeometricSpec{{Rational(-n), w - x, w - y, z},
                              {Rational(1) - u + z - Rational(n),
                               Rational(1) - v + z - Rational(n), w}};
  return r;
}

TransformResult transform_reversal(const HypergeometricSpec& spec, int n_index) {
  if (spec.num.size() != 4 || spec.den.size() != 3)
    throw domain_error("transform_reversal: expects a 4F3");
  const Rational mn = spec.num.at(n_index);
  if (!mn.is_nonpositive_integer())
    throw domain_error("transform_reversal: selected parameter is not a nonpositive integer");
  const long n = -mn.to_long();
  if (spec.termination_degree() < n)
    throw domain_error("transform_reversal: series terminates before the selected degree");
  Rational pre = (n % 2 == 0) ? 1 : -1;
  std::vector<Rational> xs;
  for (int i = 0; i < 4; ++i)
    if (i != n_index) xs.push_back(spec.num[i]);
  for (const auto& x : xs) pre *= pochhammer(x, n);
  for (const auto& b : spec.den) {
    const Rational bn = pochhammer(b, n);
    if (bn.is_zero())
      throw domain_error("transform_reversal: denominator Pochhammer vanishes");
    pre /= bn;
  }
  TransformResult r;
  r.prefactor = pre;
  r.spec.num = {Rational(-n)};
  for (const auto& b : spec.den) r.spec.num.push_back(Rational(1) - b - Rational(n));
  for (const auto& x : xs) r.spec.den.push_back(Rational(1) - x - Rational(n));
  return r;
}

HahnWeightNorm hahn_weight_norm(long j, long n, const Rational& alpha, const Rational& beta,
                                long N) {
  if (j < 0 || j > N || n < 0 || n > N)
    throw domain_error("hahn_weight_norm: labels out of range 0..N");
  if (alpha != Rational(-(N + 1)) || beta != Rational(-(N + 1)))
    throw domain_error("hahn_weight_norm: only the alpha = beta = -(N+1) family is defined");
  HahnWeightNorm r;
  const Rational binom = factorial(N) / (factorial(j) * factorial(N - j));
  r.rho = binom * binom;
  r.d_squared =
      factorial(n) * factorial(2 * N + 1 - n) /
      (Rational(2 * N - 2 * n + 1) * factorial(N) * factorial(N));
  return r;
}

} // namespace zernike::hyp
