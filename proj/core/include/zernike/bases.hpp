#pragma once

#include <complex>
#include <vector>

#include "zernike/exact_value.hpp"

namespace zernike::bases {

// ---------------------------------------------------------------------------
// Classical orthogonal polynomials, forward three-term recurrence in the
// degree. Templated so the unit tests can re-run the same recurrence over
// exact rationals.
// ---------------------------------------------------------------------------

template <class T>
T jacobi_P(int n, const T& alpha, const T& beta, const T& x) {
  if (n < 0) throw domain_error("jacobi_P: negative degree");
  if (n == 0) return T(1);
  T p0(1);
  T p1 = (alpha - beta + (alpha + beta + T(2)) * x) / T(2);
  for (int k = 2; k <= n; ++k) {
    const T tk(k);
    const T c1 = T(2) * tk * (tk + alpha + beta) * (T(2) * tk + alpha + beta - T(2));
    const T c2 = (T(2) * tk + alpha + beta - T(1)) *
                 ((T(2) * tk + alpha + beta) * (T(2) * tk + alpha + beta - T(2)) * x +
                  alpha * alpha - beta * beta);
    const T c3 =
        T(2) * (tk + alpha - T(1)) * (tk + beta - T(1)) * (T(2) * tk + alpha + beta);
    const T p2 = (c2 * p1 - c3 * p0) / c1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

template <class T>
T gegenbauer_C(int n, const T& lambda, const T& x) {
  if (n < 0) throw domain_error("gegenbauer_C: negative degree");
  if (n == 0) return T(1);
  T c0(1);
  T c1 = T(2) * lambda * x;
  for (int k = 2; k <= n; ++k) {
    const T c2 = (T(2) * (T(k) + lambda - T(1)) * x * c1 -
                  (T(k) + T(2) * lambda - T(2)) * c0) / T(k);
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

template <class T>
T legendre_P(int n, const T& x) {
  if (n < 0) throw domain_error("legendre_P: negative degree");
  if (n == 0) return T(1);
  T p0(1), p1 = x;
  for (int k = 1; k < n; ++k) {
    const T p2 = ((T(2 * k + 1)) * x * p1 - T(k) * p0) / T(k + 1);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

/// s^(n/2) P_n(y / sqrt(s)) evaluated as a polynomial in (y, s); this is the
/// form in which the Legendre factor of systems II and III enters on the disk
/// (s = 1-x^2 resp. 1-y^2), finite up to the rim.
template <class T>
T legendre_homogeneous(int n, const T& y, const T& s) {
  if (n < 0) throw domain_error("legendre_homogeneous: negative degree");
  if (n == 0) return T(1);
  T l0(1), l1 = y;
  for (int k = 1; k < n; ++k) {
    const T l2 = (T(2 * k + 1) * y * l1 - T(k) * s * l0) / T(k + 1);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

// ---------------------------------------------------------------------------
// Quantum-number labels
// ---------------------------------------------------------------------------

enum class LabelKind { polar, cartesian };

/// Label of one state in the principal-number-n multiplet: polar (n, m) with
/// m in {-n, -n+2, ..., n}, or Cartesian (k1, k2) with k1 + k2 = n.
struct MultipletLabel {
  LabelKind kind;
  int n;
  int m;  // polar
  int k1, k2;  // cartesian

  static MultipletLabel polar(int n, int m);
  static MultipletLabel cartesian(int k1, int k2);
  /// Radial quantum number (n - |m|)/2; polar labels only.
  int n_r() const;

  friend bool operator==(const MultipletLabel&, const MultipletLabel&) = default;
};

/// All labels of the n-multiplet in deterministic order: polar m = -n(2)n,
/// cartesian k1 = 0..n.
std::vector<MultipletLabel> enumerate_multiplet(int n, LabelKind kind);

enum class System { I, II, III };
enum class Domain { disk, hemisphere };

struct BasisId {
  System system;
  MultipletLabel label;
  Domain domain = Domain::disk;

  /// System I takes polar labels, II and III Cartesian; throws otherwise.
  void validate() const;
};

// ---------------------------------------------------------------------------
// Coordinates
// ---------------------------------------------------------------------------

struct DiskPoint {
  double x = 0, y = 0;
  double r() const { return std::hypot(x, y); }
  double phi() const { return std::atan2(y, x); }
  static DiskPoint from_polar(double r, double phi) {
    return {r * std::cos(phi), r * std::sin(phi)};
  }
};

/// Point of the upper unit hemisphere, xi3 = sqrt(1 - xi1^2 - xi2^2) >= 0.
struct HemispherePoint {
  double xi1 = 0, xi2 = 0, xi3 = 1;
};

struct Angles {
  double theta = 0, phi = 0;
};

HemispherePoint lift_to_hemisphere(const DiskPoint& p);
DiskPoint project_to_disk(const HemispherePoint& p);

/// Spherical angles of p in the chart of the given system; ranges
///   I:   theta in [0, pi/2],  phi in [-pi, pi]
///   II:  theta in [0, pi],    phi in [0, pi]
///   III: theta in [0, pi],    phi in [-pi/2, pi/2].
Angles to_angles(const HemispherePoint& p, System system);

/// Inverse chart map; domain_error if the angles leave the system's range.
HemispherePoint from_angles(const Angles& a, System system);

// ---------------------------------------------------------------------------
// The three eigenbases
// ---------------------------------------------------------------------------

/// Normalization constant C_{k1,k2} of systems II and III. The value carries
/// the unit pi^(-1/2) symbolically (pi_half_power() == -1), so ratios of
/// coefficients stay exactly rational.
ExactValue norm_constant(int k1, int k2);

/// Disk eigenfunction of the Zernike operator. System I is complex,
/// II and III are real-valued. basis.domain must be disk.
std::complex<double> psi(const BasisId& basis, const DiskPoint& p);

/// Hemisphere eigenfunction; equals sqrt(xi3) * psi at the projected disk
/// point. basis.domain must be hemisphere.
std::complex<double> upsilon(const BasisId& basis, const HemispherePoint& p);

} // namespace zernike::bases
