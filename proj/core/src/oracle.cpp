#include "zernike/oracle.hpp"

#include <cmath>
#include <random>

#include "zernike/parallel.hpp"

namespace zernike::oracle {

using bases::BasisId;
using bases::DiskPoint;
using bases::HemispherePoint;
using bases::MultipletLabel;
using interbasis::Pair;
using interbasis::Route;

namespace {

// pairwise (tree) reduction: deterministic and cancellation-friendly
std::complex<double> pairwise_sum(std::vector<std::complex<double>>& v) {
  if (v.empty()) return {0.0, 0.0};
  std::size_t n = v.size();
  while (n > 1) {
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i + half < n; ++i) v[i] += v[i + half];
    n = half;
  }
  return v[0];
}

} // namespace

void gauss_legendre_unit(int k, std::vector<double>& nodes, std::vector<double>& weights) {
  if (k < 1) throw domain_error("gauss_legendre_unit: need at least one node");
  nodes.resize(k);
  weights.resize(k);
  // Newton on P_k over [-1,1], then affine map to [0,1]
  for (int i = 0; i < k; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (k + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      if (k == 1) p1 = x;
      for (int j = 1; j < k; ++j) {
        const double p2 = ((2 * j + 1) * x * p1 - j * p0) / (j + 1);
        p0 = p1;
        p1 = p2;
      }
      const double dp = k * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int j = 1; j < k; ++j) {
      const double p2 = ((2 * j + 1) * x * p1 - j * p0) / (j + 1);
      p0 = p1;
      p1 = p2;
    }
    const double dp = k * (x * p1 - p0) / (x * x - 1.0);
    nodes[k - 1 - i] = 0.5 * (x + 1.0);
    weights[k - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
}

namespace {

bool below_floor(const QuadratureSpec& spec, int degree) {
  return degree >= 0 &&
         (spec.radial_nodes < degree + 2 || spec.angular_nodes < 2 * degree + 3);
}

// int_D conj(f) g w(u) du dphi / 2 on the u = r^2, phi product grid
template <class F>
std::complex<double> disk_sum(const QuadratureSpec& spec, const F& cell) {
  std::vector<double> u, wu;
  gauss_legendre_unit(spec.radial_nodes, u, wu);
  const int na = spec.angular_nodes;
  const double dphi = 2.0 * M_PI / na;
  std::vector<std::complex<double>> terms;
  terms.reserve(static_cast<std::size_t>(spec.radial_nodes) * na);
  for (int i = 0; i < spec.radial_nodes; ++i) {
    const double r = std::sqrt(u[i]);
    for (int a = 0; a < na; ++a) {
      const double phi = -M_PI + dphi * a;
      terms.push_back(0.5 * wu[i] * dphi * cell(u[i], r, phi));
    }
  }
  return pairwise_sum(terms);
}

} // namespace

QuadResult inner_product_disk(const DiskFn& f, const DiskFn& g, const QuadratureSpec& spec,
                              int declared_degree) {
  QuadResult out;
  out.exactness_warning = below_floor(spec, declared_degree);
  out.value = disk_sum(spec, [&](double, double r, double phi) {
    const DiskPoint p = DiskPoint::from_polar(r, phi);
    return std::conj(f(p)) * g(p);
  });
  return out;
}

QuadResult inner_product_hemisphere(const HemisphereFn& f, const HemisphereFn& g,
                                    const QuadratureSpec& spec, int declared_degree) {
  // Gauss-Jacobi with weight (1-u)^(-1/2) realized through the substitution
  // u = 1 - t^2 (t = xi3), under which (1/2) du dphi / xi3 becomes dt dphi:
  // plain Gauss-Legendre in t, exact since conj(f) g is t * polynomial(1-t^2)
  // for eigenfunction pairs.
  QuadResult out;
  out.exactness_warning = below_floor(spec, declared_degree);
  std::vector<double> t, wt;
  gauss_legendre_unit(spec.radial_nodes, t, wt);
  const int na = spec.angular_nodes;
  const double dphi = 2.0 * M_PI / na;
  std::vector<std::complex<double>> terms;
  terms.reserve(static_cast<std::size_t>(spec.radial_nodes) * na);
  for (int i = 0; i < spec.radial_nodes; ++i) {
    const double xi3 = t[i];
    const double r = std::sqrt(std::max(0.0, 1.0 - t[i] * t[i]));
    for (int a = 0; a < na; ++a) {
      const double phi = -M_PI + dphi * a;
      const HemispherePoint p{r * std::cos(phi), r * std::sin(phi), xi3};
      terms.push_back(dphi * wt[i] * std::conj(f(p)) * g(p));
    }
  }
  out.value = pairwise_sum(terms);
  return out;
}

namespace {

DiskFn disk_basis_fn(bases::System system, const MultipletLabel& label) {
  BasisId id{system, label, bases::Domain::disk};
  id.validate();
  return [id](const DiskPoint& p) { return bases::psi(id, p); };
}

std::pair<bases::System, bases::System> pair_systems(Pair pair) {
  switch (pair) {
    case Pair::I_II: return {bases::System::II, bases::System::I};
    case Pair::I_III: return {bases::System::III, bases::System::I};
    default: return {bases::System::III, bases::System::II};
  }
}

} // namespace

std::complex<double> coeff_by_quadrature(Pair pair, const MultipletLabel& row,
                                         const MultipletLabel& col,
                                         const QuadratureSpec& spec) {
  if (row.n != col.n)
    throw domain_error("coeff_by_quadrature: labels must share the multiplet");
  const auto [row_sys, col_sys] = pair_systems(pair);
  return inner_product_disk(disk_basis_fn(col_sys, col), disk_basis_fn(row_sys, row), spec,
                            2 * row.n)
      .value;
}

std::complex<double> boundary_projection_W(int n, int m, int n1, int angular_nodes) {
  const MultipletLabel polar = MultipletLabel::polar(n, m); // validates
  if (n1 < 0 || n1 > n) throw domain_error("boundary_projection_W: n1 out of range");
  const int n2 = n - n1;
  if (angular_nodes <= 0) angular_nodes = 2 * n + 2 * std::abs(m) + 8;
  const double dphi = 2.0 * M_PI / angular_nodes;
  std::vector<std::complex<double>> terms;
  terms.reserve(angular_nodes);
  for (int a = 0; a < angular_nodes; ++a) {
    const double phi = -M_PI + dphi * a;
    const double geg = bases::gegenbauer_C<double>(n2, n1 + 1, std::cos(phi));
    const std::complex<double> e(std::cos(m * phi), -std::sin(m * phi));
    terms.push_back(dphi * std::pow(std::sin(phi), n1) * geg * e);
  }
  const std::complex<double> integral = pairwise_sum(terms);
  const double C = bases::norm_constant(n1, n2).to_float().real();
  const double sign = polar.n_r() % 2 == 0 ? 1.0 : -1.0;
  return sign * C / (2.0 * std::sqrt(M_PI * (n + 1))) * integral;
}

double zernike_eigen_residual(const BasisId& basis, int resolution) {
  basis.validate();
  if (resolution < 64)
    throw domain_error("zernike_eigen_residual: resolution must be >= 64");
  const int R = resolution;
  const double h = 2.0 / (R - 1);
  BasisId disk_basis = basis;
  disk_basis.domain = bases::Domain::disk;

  std::vector<std::complex<double>> F(static_cast<std::size_t>(R) * R, 0.0);
  for (int i = 0; i < R; ++i) {
    const double x = -1.0 + h * i;
    for (int j = 0; j < R; ++j) {
      const double y = -1.0 + h * j;
      F[static_cast<std::size_t>(i) * R + j] = bases::psi(disk_basis, {x, y});
    }
  }
  auto at = [&](const std::vector<std::complex<double>>& A, int i, int j) {
    return A[static_cast<std::size_t>(i) * R + j];
  };
  // first radial-derivative field D = x d/dx + y d/dy by centred differences
  std::vector<std::complex<double>> D(static_cast<std::size_t>(R) * R, 0.0);
  for (int i = 1; i + 1 < R; ++i) {
    const double x = -1.0 + h * i;
    for (int j = 1; j + 1 < R; ++j) {
      const double y = -1.0 + h * j;
      D[static_cast<std::size_t>(i) * R + j] =
          x * (at(F, i + 1, j) - at(F, i - 1, j)) / (2 * h) +
          y * (at(F, i, j + 1) - at(F, i, j - 1)) / (2 * h);
    }
  }
  const double En = basis.label.n * (basis.label.n + 2);
  double max_resid = 0.0, max_f = 0.0;
  for (int i = 2; i + 2 < R; ++i) {
    const double x = -1.0 + h * i;
    for (int j = 2; j + 2 < R; ++j) {
      const double y = -1.0 + h * j;
      if (std::hypot(x, y) > 1.0 - 3.0 * h) continue;
      const std::complex<double> lap =
          (at(F, i + 1, j) + at(F, i - 1, j) + at(F, i, j + 1) + at(F, i, j - 1) -
           4.0 * at(F, i, j)) / (h * h);
      const std::complex<double> d2 =
          x * (at(D, i + 1, j) - at(D, i - 1, j)) / (2 * h) +
          y * (at(D, i, j + 1) - at(D, i, j - 1)) / (2 * h);
      const std::complex<double> z = lap - d2 - 2.0 * at(D, i, j);
      max_resid = std::max(max_resid, std::abs(z + En * at(F, i, j)));
      max_f = std::max(max_f, std::abs(at(F, i, j)));
    }
  }
  return max_resid / max_f;
}

namespace {

std::vector<DiskPoint> random_interior_points(int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  std::vector<DiskPoint> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i)
    pts.push_back(DiskPoint::from_polar(std::sqrt(unit(rng)), angle(rng)));
  return pts;
}

} // namespace

double reconstruct_expansion(Pair pair, const MultipletLabel& target, Route route,
                             int sample_points, unsigned seed) {
  const auto M = interbasis::assemble_matrix(target.n, pair, route);
  int row = -1;
  for (std::size_t r = 0; r < M.row_labels.size(); ++r)
    if (M.row_labels[r] == target) row = static_cast<int>(r);
  if (row < 0) throw domain_error("reconstruct_expansion: target is not a row label");
  const auto [row_sys, col_sys] = pair_systems(pair);
  double worst = 0.0;
  for (const auto& p : random_interior_points(sample_points, seed)) {
    const std::complex<double> lhs =
        bases::psi({row_sys, target, bases::Domain::disk}, p);
    std::complex<double> rhs = 0.0;
    for (int c = 0; c <= M.n; ++c)
      rhs += M.at(row, c).to_float() *
             bases::psi({col_sys, M.col_labels[c], bases::Domain::disk}, p);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double reconstruct_inverse_expansion(int n, int m, int sample_points, unsigned seed) {
  const MultipletLabel target = MultipletLabel::polar(n, m);
  double worst = 0.0;
  std::vector<ExactValue> coeff;
  for (int n1 = 0; n1 <= n; ++n1) coeff.push_back(interbasis::wtilde_II_I(n, m, n1));
  for (const auto& p : random_interior_points(sample_points, seed)) {
    const std::complex<double> lhs =
        bases::psi({bases::System::I, target, bases::Domain::disk}, p);
    std::complex<double> rhs = 0.0;
    for (int n1 = 0; n1 <= n; ++n1)
      rhs += coeff[n1].to_float() *
             bases::psi({bases::System::II, MultipletLabel::cartesian(n1, n - n1),
                         bases::Domain::disk},
                        p);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double GridSample::max_abs() const {
  double m = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (mask[i]) m = std::max(m, std::abs(values[i]));
  return m;
}

GridSample sample_grid(const BasisId& basis, int resolution, int threads) {
  basis.validate();
  if (resolution < 2) throw domain_error("sample_grid: resolution too small");
  BasisId disk_basis = basis;
  disk_basis.domain = bases::Domain::disk;
  GridSample g;
  g.resolution = resolution;
  g.values.assign(static_cast<std::size_t>(resolution) * resolution, 0.0);
  g.mask.assign(static_cast<std::size_t>(resolution) * resolution, 0);
  const double h = 2.0 / (resolution - 1);
  parallel_for(resolution, threads, [&](std::size_t row) {
    const double y = 1.0 - h * static_cast<double>(row); // rows from y = +1 down
    for (int col = 0; col < resolution; ++col) {
      const double x = -1.0 + h * col;
      if (x * x + y * y > 1.0) continue;
      const std::size_t idx = row * resolution + col;
      g.values[idx] = bases::psi(disk_basis, {x, y});
      g.mask[idx] = 1;
    }
  });
  return g;
}

} // namespace zernike::oracle
