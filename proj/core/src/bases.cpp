#include "zernike/bases.hpp"

#include <cmath>

namespace zernike::bases {

MultipletLabel MultipletLabel::polar(int n, int m) {
  if (n < 0 || std::abs(m) > n || (n - std::abs(m)) % 2 != 0)
    throw domain_error("MultipletLabel: invalid polar label (n=" + std::to_string(n) +
                       ", m=" + std::to_string(m) + ")");
  return {LabelKind::polar, n, m, 0, 0};
}

MultipletLabel MultipletLabel::cartesian(int k1, int k2) {
  if (k1 < 0 || k2 < 0)
    throw domain_error("MultipletLabel: invalid cartesian label (k1=" +
                       std::to_string(k1) + ", k2=" + std::to_string(k2) + ")");
  return {LabelKind::cartesian, k1 + k2, 0, k1, k2};
}

int MultipletLabel::n_r() const {
  if (kind != LabelKind::polar)
    throw domain_error("MultipletLabel::n_r: cartesian label has no radial number");
  return (n - std::abs(m)) / 2;
}

std::vector<MultipletLabel> enumerate_multiplet(int n, LabelKind kind) {
  if (n < 0) throw domain_error("enumerate_multiplet: negative n");
  std::vector<MultipletLabel> out;
  out.reserve(n + 1);
  if (kind == LabelKind::polar) {
    for (int m = -n; m <= n; m += 2) out.push_back(MultipletLabel::polar(n, m));
  } else {
    for (int k1 = 0; k1 <= n; ++k1) out.push_back(MultipletLabel::cartesian(k1, n - k1));
  }
  return out;
}

void BasisId::validate() const {
  if (system == System::I && label.kind != LabelKind::polar)
    throw domain_error("BasisId: system I takes polar labels");
  if (system != System::I && label.kind != LabelKind::cartesian)
    throw domain_error("BasisId: systems II and III take cartesian labels");
}

HemispherePoint lift_to_hemisphere(const DiskPoint& p) {
  const double r2 = p.x * p.x + p.y * p.y;
  if (r2 > 1.0 + 1e-12)
    throw domain_error("lift_to_hemisphere: point outside the closed disk");
  return {p.x, p.y, std::sqrt(std::max(0.0, 1.0 - r2))};
}

DiskPoint project_to_disk(const HemispherePoint& p) { return {p.xi1, p.xi2}; }

Angles to_angles(const HemispherePoint& p, System system) {
  switch (system) {
    case System::I:
      return {std::acos(std::clamp(p.xi3, -1.0, 1.0)), std::atan2(p.xi2, p.xi1)};
    case System::II:
      return {std::acos(std::clamp(p.xi1, -1.0, 1.0)), std::atan2(p.xi3, p.xi2)};
    default:
      return {std::acos(std::clamp(p.xi2, -1.0, 1.0)), std::atan2(p.xi1, p.xi3)};
  }
}

HemispherePoint from_angles(const Angles& a, System system) {
  const double st = std::sin(a.theta), ct = std::cos(a.theta);
  const double sp = std::sin(a.phi), cp = std::cos(a.phi);
  constexpr double eps = 1e-12;
  switch (system) {
    case System::I:
      if (a.theta < -eps || a.theta > M_PI / 2 + eps || a.phi < -M_PI - eps ||
          a.phi > M_PI + eps)
        throw domain_error("from_angles: system I angles out of range");
      return {st * cp, st * sp, ct};
    case System::II:
      if (a.theta < -eps || a.theta > M_PI + eps || a.phi < -eps || a.phi > M_PI + eps)
        throw domain_error("from_angles: system II angles out of range");
      return {ct, st * cp, st * sp};
    default:
      if (a.theta < -eps || a.theta > M_PI + eps || a.phi < -M_PI / 2 - eps ||
          a.phi > M_PI / 2 + eps)
        throw domain_error("from_angles: system III angles out of range");
      return {st * sp, ct, st * cp};
  }
}

ExactValue norm_constant(int k1, int k2) {
  if (k1 < 0 || k2 < 0) throw domain_error("norm_constant: negative label");
  // C_{k1,k2} = 2^k1 k1! sqrt((2k1+1)(k1+k2+1) k2! / (pi (2k1+k2+1)!))
  Rational mag = factorial(k1);
  for (int i = 0; i < k1; ++i) mag *= 2;
  const Rational rad = Rational(2 * k1 + 1) * Rational(k1 + k2 + 1) * factorial(k2) /
                       factorial(2 * k1 + k2 + 1);
  return ExactValue(0, mag, rad, -1);
}

namespace {

// r^{|m|} e^{i m phi} without trigonometry: (x + i sgn(m) y)^{|m|}
std::complex<double> angular_factor(int m, double x, double y) {
  const std::complex<double> base(x, m >= 0 ? y : -y);
  std::complex<double> v(1.0, 0.0);
  for (int i = 0; i < std::abs(m); ++i) v *= base;
  return v;
}

double psi_II_real(int n1, int n2, double x, double y) {
  return gegenbauer_C<double>(n2, n1 + 1, x) *
         legendre_homogeneous<double>(n1, y, 1.0 - x * x);
}

} // namespace

std::complex<double> psi(const BasisId& basis, const DiskPoint& p) {
  basis.validate();
  if (basis.domain != Domain::disk)
    throw domain_error("psi: basis is not a disk function");
  const auto& lab = basis.label;
  switch (basis.system) {
    case System::I: {
      // sqrt((n+1)/pi) r^{|m|} P_{n_r}^{(|m|,0)}(1-2r^2) e^{im phi}, the disk
      // image of the hemisphere form (Jacobi argument cos 2theta = 1-2r^2)
      const int am = std::abs(lab.m);
      const double r2 = p.x * p.x + p.y * p.y;
      const double radial = jacobi_P<double>(lab.n_r(), am, 0.0, 1.0 - 2.0 * r2);
      return std::sqrt((lab.n + 1) / M_PI) * radial * angular_factor(lab.m, p.x, p.y);
    }
    case System::II:
      return norm_constant(lab.k1, lab.k2).to_float() *
             psi_II_real(lab.k1, lab.k2, p.x, p.y);
    default:
      return norm_constant(lab.k1, lab.k2).to_float() *
             psi_II_real(lab.k1, lab.k2, p.y, p.x);
  }
}

std::complex<double> upsilon(const BasisId& basis, const HemispherePoint& p) {
  basis.validate();
  if (basis.domain != Domain::hemisphere)
    throw domain_error("upsilon: basis is not a hemisphere function");
  if (p.xi3 < 0) throw domain_error("upsilon: xi3 < 0 is below the equator");
  BasisId disk_basis = basis;
  disk_basis.domain = Domain::disk;
  return std::sqrt(p.xi3) * psi(disk_basis, project_to_disk(p));
}

} // namespace zernike::bases
