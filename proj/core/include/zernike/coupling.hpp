#pragma once

#include "zernike/exact_value.hpp"
#include "zernike/hypergeom.hpp"

namespace zernike::coupling {

/// su(2) label stored as twice the spin / projection so half-integers stay
/// integral. Requires |two_m| <= two_j and two_j + two_m even.
struct SpinLabel {
  long two_j = 0;
  long two_m = 0;

  SpinLabel() = default;
  SpinLabel(long tj, long tm);
  Rational j() const { return Rational(two_j, 2); }
  Rational m() const { return Rational(two_m, 2); }
};

/// Clebsch-Gordan coefficient C^{c,gamma}_{a,alpha; b,beta} coupling
/// |a,alpha>|b,beta> to |c,gamma>, in Condon-Shortley convention. Exact zero
/// when gamma != alpha + beta or the triangle condition fails. The value is
/// real, sign * sqrt(rational): the 3F2 sum is rational and the prefactor
/// radicand rational.
ExactValue clebsch_gordan(const SpinLabel& a, const SpinLabel& b, const SpinLabel& c);

/// The special family C^{n1,0}_{n/2,-m/2; n/2,m/2} entering the interbasis
/// coefficients; (n, m) a valid polar label, 0 <= n1 <= n.
ExactValue special_cg(int n, int m, int n1);

/// The six 6j labels identified with the even-even 4F3 parameters: each entry
/// is an integer or half-integer.
struct SixjLabels {
  Rational l1, l2, l12, l3, l, l23;
};

/// Solves the parameter identification between the even-even interbasis 4F3
/// and the balanced 4F3 of the Wigner 6j symbol; q1+q2 = p1+p2 = N.
SixjLabels sixj_parameter_map(long q1, long q2, long p1, long p2);

/// The balanced 4F3 parameter set of the 6j symbol with the given labels.
hyp::HypergeometricSpec sixj_f43_spec(const SixjLabels& s);

} // namespace zernike::coupling
