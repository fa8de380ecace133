#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "zernike/bases.hpp"
#include "zernike/interbasis.hpp"

namespace zernike::oracle {

using DiskFn = std::function<std::complex<double>(const bases::DiskPoint&)>;
using HemisphereFn = std::function<std::complex<double>(const bases::HemispherePoint&)>;

/// Disk quadrature: Gauss-Legendre in u = r^2 crossed with an equispaced
/// (trapezoidal) angular rule, exact for polynomial integrands of total
/// degree n once radial_nodes >= n+2 and angular_nodes >= 2n+3.
struct QuadratureSpec {
  int radial_nodes = 24;
  int angular_nodes = 49;

  static QuadratureSpec for_degree(int degree) {
    return {degree + 2, 2 * degree + 3};
  }
};

struct QuadResult {
  std::complex<double> value;
  /// Set when the rule is below the exactness floor for the declared degree.
  bool exactness_warning = false;
};

/// (f, g)_D = int_D conj(f) g d^2r. declared_degree < 0 skips the exactness
/// check.
QuadResult inner_product_disk(const DiskFn& f, const DiskFn& g, const QuadratureSpec& spec,
                              int declared_degree = -1);

/// (f, g)_H+ = int conj(f) g / xi3 d^2r over the upper hemisphere, via
/// Gauss-Jacobi nodes in u = r^2 with weight (1-u)^(-1/2); exact when
/// conj(f) g / xi3 is polynomial on the disk (the case for pairs of
/// hemisphere eigenfunctions).
QuadResult inner_product_hemisphere(const HemisphereFn& f, const HemisphereFn& g,
                                    const QuadratureSpec& spec, int declared_degree = -1);

/// Quadrature estimate of one interbasis coefficient: the projection
/// (basis_col, basis_row)_D with the column basis of the pair conjugated,
/// so the result approximates the closed-form entry of assemble_matrix.
std::complex<double> coeff_by_quadrature(interbasis::Pair pair,
                                         const bases::MultipletLabel& row,
                                         const bases::MultipletLabel& col,
                                         const QuadratureSpec& spec);

/// The rim-limit integral representation of W^{n,m}_{n1,n2}: a 1-D angular
/// integral evaluated with an equispaced periodic rule of the given order.
std::complex<double> boundary_projection_W(int n, int m, int n1, int angular_nodes = 0);

/// Max-norm residual of the Zernike eigenvalue equation under centred finite
/// differences on a resolution^2 grid over [-1,1]^2, interior points only
/// (a collar of width 3h at the rim is excluded):
///   max |Z psi + n(n+2) psi| / max |psi|.
/// resolution must be >= 64.
double zernike_eigen_residual(const bases::BasisId& basis, int resolution);

/// Max deviation over pseudo-random interior sample points between the target
/// basis function and its coefficient-weighted expansion over the other basis
/// of the pair. target must be a row label of the pair's matrix.
double reconstruct_expansion(interbasis::Pair pair, const bases::MultipletLabel& target,
                             interbasis::Route route, int sample_points,
                             unsigned seed = 12345);

/// Deviation of the inverse expansion Upsilon^I_{n,m} =
/// sum_{n1} wtilde * Upsilon^II over sample points.
double reconstruct_inverse_expansion(int n, int m, int sample_points,
                                     unsigned seed = 12345);

/// Rectangular sample of one basis function over [-1,1]^2; cells outside the
/// closed disk are masked out and carry value 0 as a sentinel.
struct GridSample {
  int resolution = 0;
  std::vector<std::complex<double>> values; // row-major, rows from y=+1 down
  std::vector<std::uint8_t> mask;           // 1 inside the disk

  const std::complex<double>& at(int row, int col) const {
    return values[static_cast<std::size_t>(row) * resolution + col];
  }
  bool inside(int row, int col) const {
    return mask[static_cast<std::size_t>(row) * resolution + col] != 0;
  }
  /// max |value| over unmasked cells.
  double max_abs() const;
};

GridSample sample_grid(const bases::BasisId& basis, int resolution, int threads = 1);

/// Gauss-Legendre nodes/weights on [0,1].
void gauss_legendre_unit(int k, std::vector<double>& nodes, std::vector<double>& weights);

} // namespace zernike::oracle
