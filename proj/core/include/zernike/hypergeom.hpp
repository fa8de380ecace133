#pragma once

#include <vector>

#include "zernike/rational.hpp"

namespace zernike::hyp {

/// A terminating hypergeometric series pFq(a1..ap; b1..bq | 1).
///
/// At least one numerator parameter must be a nonpositive integer. A
/// denominator parameter that is a nonpositive integer is tolerated only if
/// the series terminates strictly before the pole; this is enforced term by
/// term during summation.
struct HypergeometricSpec {
  std::vector<Rational> num;
  std::vector<Rational> den;

  /// Smallest |a| over nonpositive-integer numerator parameters.
  /// domain_error if the series does not terminate.
  long termination_degree() const;
};

/// Exact sum of the terminating series at unit argument.
/// domain_error naming the offending parameter and term index if a
/// denominator parameter vanishes inside the summation range.
Rational eval_pFq_unit(const HypergeometricSpec& spec);

/// Regularized sum  sum_s prod_i (a_i)_s / (prod_j (b_j)_s * s! * Gamma(d0+s))
/// with one integer denominator parameter d0 folded into the reciprocal
/// gamma, which vanishes for d0+s <= 0. This realizes the
/// 1/(negative integer)! = 0 convention carried by the closed-form
/// coefficient prefactors, where 1/Gamma(d0) has been absorbed from the
/// prefactor into the series.
Rational eval_pFq_regularized(const std::vector<Rational>& num,
                              const std::vector<Rational>& den_other,
                              const Rational& d0);

/// True iff sum(numerators) + 1 == sum(denominators) (balanced/Saalschutzian).
bool is_saalschutzian(const HypergeometricSpec& spec);

/// Hahn polynomial Q_p(x; alpha, beta, N), 3F2(-p, -x, p+alpha+beta+1; -N, alpha+1 | 1).
Rational hahn_Q(long p, const Rational& x, const Rational& alpha, const Rational& beta, long N);

/// Dual Hahn polynomial R_p(lambda(x); gamma, delta, N) on lambda(x) = x(x+gamma+delta+1):
/// 3F2(-p, -x, x+gamma+delta+1; gamma+1, -N | 1).
Rational dual_hahn_R(long p, long x, const Rational& gamma, const Rational& delta, long N);

/// Racah parameter set. One of the truncation conditions alpha+1 = -N,
/// beta+delta = -N, gamma+1 = -N must hold (at N = 0 they may coincide;
/// every family used here truncates through gamma+1 = -N).
struct RacahParams {
  Rational alpha, beta, gamma, delta;
  long N = 0;

  RacahParams(Rational a, Rational b, Rational g, Rational d, long n);
  bool truncates_via_alpha() const { return alpha + 1 == Rational(-N); }
  bool truncates_via_beta_delta() const { return beta + delta == Rational(-N); }
  bool truncates_via_gamma() const { return gamma + 1 == Rational(-N); }
};

/// Racah polynomial R_n(lambda(x); alpha, beta, gamma, delta) on the lattice
/// lambda(x) = x(x+gamma+delta+1), as the canonical 4F3.
Rational racah_R(long n, long x, const RacahParams& p);

/// Result of a series transformation: prefactor * eval(spec) reproduces the
/// original series value.
struct TransformResult {
  Rational prefactor;
  HypergeometricSpec spec;
};

/// Sheppard transformation of a terminating 3F2(a,b,c; d,e | 1) with roles
/// taken positionally: a = num[0] (must be a nonpositive integer), b = num[1],
/// c = num[2], d = den[0], e = den[1]. Returns
///   prefactor = (d-b)_n / (d)_n,  spec' = 3F2(a, b, e-c; a+b-d+1, e)
/// with n = -a. domain_error if (d)_n = 0.
TransformResult transform_F32(const HypergeometricSpec& spec);

/// Role assignment for the Whipple transformation: indices into num for
/// (x, y, z) and into den for (u, v, w); n_index selects the terminating
/// numerator parameter -n.
struct WhippleRoles {
  int n_index, x_index, y_index, z_index;
  int u_index, v_index, w_index;
};

/// Whipple's transformation of a balanced terminating 4F3:
///   4F3(-n,x,y,z; u,v,w) = [(v-z)_n (u-z)_n / ((v)_n (u)_n)]
///                          * 4F3(-n, w-x, w-y, z; 1-u+z-n, 1-v+z-n, w).
/// Preserves the balanced property. domain_error on a vanishing denominator
/// Pochhammer or a non-balanced input.
TransformResult transform_whipple(const HypergeometricSpec& spec, const WhippleRoles& roles);

/// Reversal of the order of summation of a terminating 4F3, with the
/// terminating parameter -n selected by n_index:
///   4F3(-n,x,y,z; u,v,w) = (-1)^n [(x)_n (y)_n (z)_n / ((u)_n (v)_n (w)_n)]
///                          * 4F3(-n, 1-u-n, 1-v-n, 1-w-n; 1-x-n, 1-y-n, 1-z-n).
/// domain_error if a denominator Pochhammer vanishes or if another numerator
/// parameter truncates the series before -n.
TransformResult transform_reversal(const HypergeometricSpec& spec, int n_index);

/// Weight and squared norm of the special Hahn family with
/// alpha = beta = -(N+1):  rho(j) = (N! / (j!(N-j)!))^2 and
/// d_n^2 = n! (2N+1-n)! / ((2N-2n+1) N!^2).
struct HahnWeightNorm {
  Rational rho;
  Rational d_squared;
};
HahnWeightNorm hahn_weight_norm(long j, long n, const Rational& alpha,
                                const Rational& beta, long N);

} // namespace zernike::hyp
