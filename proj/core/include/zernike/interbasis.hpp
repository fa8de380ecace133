#pragma once

#include <string>
#include <vector>

#include "zernike/bases.hpp"
#include "zernike/coupling.hpp"

namespace zernike::interbasis {

enum class Pair { I_II, I_III, II_III };

/// Closed-form evaluation routes. I-II and I-III admit
/// {Hyper3F2, ClebschGordan, Hahn}; II-III admits {CGSum, Hyper4F3, Racah}.
enum class Route { Hyper3F2, ClebschGordan, Hahn, CGSum, Hyper4F3, Racah };

bool route_admissible(Pair pair, Route route);
Route default_route(Pair pair);
std::string to_string(Pair pair);
std::string to_string(Route route);

/// I-II interbasis coefficient W^{n,m}_{n1,n2}: the weight of Upsilon^I_{n,m}
/// in the expansion of Upsilon^II_{n1,n-n1}. Phase structure
/// i^{n1} (-1)^{(m+|m|)/2} times a real value; all routes agree exactly.
ExactValue w_I_II(int n, int m, int n1, Route route = Route::ClebschGordan);

/// II-I inverse coefficient (-i)^{n1} (-1)^{(m+|m|)/2} C^{n1,0}; the matrix
/// inverse (adjoint) of w_I_II.
ExactValue wtilde_II_I(int n, int m, int n1);

/// I-III coefficient What^{n,m}_{l1,l2} = (-1)^{l1} (-i)^m W^{n,m}_{l1,l2}.
ExactValue what_I_III(int n, int m, int l1, Route route = Route::ClebschGordan);

/// II-III coefficient U^{n1,n2}_{l1,l2} (the weight of Upsilon^II_{n1,n2} in
/// Upsilon^III_{l1,l2}); real, exactly zero when l1,n2 or l2,n1 differ in
/// parity. Requires l1+l2 = n1+n2.
ExactValue u_II_III(int l1, int l2, int n1, int n2, Route route = Route::CGSum);

/// Both printed Racah-polynomial arrangements of the same entry (weight at
/// one index against norm at the other, and the role-swapped partner); used
/// to verify the weight/norm consistency identities.
std::pair<ExactValue, ExactValue> u_racah_both_forms(int l1, int l2, int n1, int n2);

/// The integral J^{mu,lambda}_{n,m} = int_{-1}^1 (1-x^2)^mu C_n^lambda(x)
/// P_m(x) dx in closed form; rational (zero for odd n+m).
ExactValue appendixA_J(int mu, const Rational& lambda, int n, int m);

/// Interbasis matrix of one multiplet: rows and columns run over
/// enumerate_multiplet order. For I-II and I-III rows are the Cartesian
/// labels of system II/III and columns the polar labels of system I; for
/// II-III rows are system III labels and columns system II labels, so in all
/// cases  row-basis function = sum_col entry * col-basis function.
struct CoefficientMatrix {
  int n = 0;
  Pair pair = Pair::I_II;
  Route route = Route::ClebschGordan;
  std::vector<bases::MultipletLabel> row_labels, col_labels;
  std::vector<ExactValue> entries; // row-major (n+1) x (n+1)

  const ExactValue& at(int row, int col) const { return entries[row * (n + 1) + col]; }
};

/// Fills all (n+1)^2 entries and checks the matrix invariants (exact unit row
/// norms, exact row orthogonality, realness and parity zeros for II-III).
/// Throws integrity_error naming the offending rows on violation.
CoefficientMatrix assemble_matrix(int n, Pair pair, Route route, int threads = 1);

} // namespace zernike::interbasis
