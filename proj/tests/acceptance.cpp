// Acceptance suite: one line per criterion, exit nonzero on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "zernike/oracle.hpp"
#include "zernike/verify.hpp"

using namespace zernike;
using bases::MultipletLabel;
using interbasis::Pair;
using interbasis::Route;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
  if (!pass) ++failures;
  std::printf("criterion %2d [%s] %s\n", criterion, pass ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

bool suite_passes(const std::vector<verify::CheckResult>& rs, double& worst) {
  bool ok = true;
  worst = 0.0;
  for (const auto& r : rs) {
    ok = ok && r.pass;
    worst = std::max(worst, r.measured);
  }
  return ok;
}

constexpr int kThreads = 4;

} // namespace

int main() {
  // 1. basis orthonormality, n <= 8, 1e-9, <= 30 s
  {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    const bool pass = suite_passes(verify::run_suite("orthonormality", 8, 1e-9, kThreads),
                                   worst);
    const double dt = seconds_since(t0);
    report(1, pass && dt <= 30.0,
           "orthonormality delta_ab within 1e-9 for n <= 8 (worst " + fmt(worst) +
               ", " + fmt(dt) + " s of 30)");
  }

  // 2. eigenvalue law E_n = n(n+2): residual <= 1e-3 at 512^2 with O(h^2) decay, <= 60 s
  {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    const bool pass = suite_passes(verify::run_suite("eigenvalue", 3, 1e-3, kThreads),
                                   worst);
    const double dt = seconds_since(t0);
    report(2, pass && dt <= 60.0,
           "finite-difference residual <= 1e-3 at 512^2, O(h^2) decay (" + fmt(dt) +
               " s of 60)");
  }

  // 3. I-II route equivalence exact for n <= 10, each within 1e-9 of quadrature, <= 20 s
  {
    const auto t0 = std::chrono::steady_clock::now();
    long mismatches = 0;
    double worst_quad = 0.0;
    for (int n = 0; n <= 10; ++n) {
      const auto spec = oracle::QuadratureSpec::for_degree(2 * n);
      for (int m = -n; m <= n; m += 2) {
        for (int n1 = 0; n1 <= n; ++n1) {
          const auto cg = interbasis::w_I_II(n, m, n1, Route::ClebschGordan);
          if (cg != interbasis::w_I_II(n, m, n1, Route::Hyper3F2)) ++mismatches;
          if (cg != interbasis::w_I_II(n, m, n1, Route::Hahn)) ++mismatches;
          const auto q = oracle::coeff_by_quadrature(
              Pair::I_II, MultipletLabel::cartesian(n1, n - n1),
              MultipletLabel::polar(n, m), spec);
          worst_quad = std::max(worst_quad, std::abs(q - cg.to_float()));
        }
      }
    }
    const double dt = seconds_since(t0);
    report(3, mismatches == 0 && worst_quad <= 1e-9 && dt <= 20.0,
           "W routes 3F2 = CG = Hahn exactly for n <= 10, quadrature within 1e-9 (worst " +
               fmt(worst_quad) + ", " + fmt(dt) + " s of 20)");
  }

  // 4. I-III phase relation exact and quadrature agreement, n <= 8
  {
    long mismatches = 0;
    double worst_quad = 0.0;
    for (int n = 0; n <= 8; ++n) {
      const auto spec = oracle::QuadratureSpec::for_degree(2 * n);
      for (int m = -n; m <= n; m += 2) {
        for (int l1 = 0; l1 <= n; ++l1) {
          const auto wh = interbasis::what_I_III(n, m, l1);
          if (wh != interbasis::w_I_II(n, m, l1).times_i_pow(2L * l1 - m)) ++mismatches;
          if (wh.abs2() != interbasis::w_I_II(n, m, l1).abs2()) ++mismatches;
          const auto q = oracle::coeff_by_quadrature(
              Pair::I_III, MultipletLabel::cartesian(l1, n - l1),
              MultipletLabel::polar(n, m), spec);
          worst_quad = std::max(worst_quad, std::abs(q - wh.to_float()));
        }
      }
    }
    report(4, mismatches == 0 && worst_quad <= 1e-9,
           "What = (-1)^l1 (-i)^m W exactly for n <= 8, quadrature within 1e-9 (worst " +
               fmt(worst_quad) + ")");
  }

  // 5. II-III route equivalence exact for n <= 8, <= 60 s
  {
    const auto t0 = std::chrono::steady_clock::now();
    long mismatches = 0;
    for (int n = 0; n <= 8; ++n) {
      for (int l1 = 0; l1 <= n; ++l1) {
        for (int n1 = 0; n1 <= n; ++n1) {
          const auto ref = interbasis::u_II_III(l1, n - l1, n1, n - n1, Route::CGSum);
          if (ref != interbasis::u_II_III(l1, n - l1, n1, n - n1, Route::Hyper4F3))
            ++mismatches;
          if (ref != interbasis::u_II_III(l1, n - l1, n1, n - n1, Route::Racah))
            ++mismatches;
          const auto both = interbasis::u_racah_both_forms(l1, n - l1, n1, n - n1);
          if (both.first != both.second) ++mismatches;
        }
      }
    }
    const double dt = seconds_since(t0);
    report(5, mismatches == 0 && dt <= 60.0,
           "U CG-sum = 4F3 = Racah (both arrangements) exactly for n <= 8 (" + fmt(dt) +
               " s of 60)");
  }

  // 6. parity selection rules: forbidden entries exactly zero in every route, n <= 10
  {
    long nonzero = 0;
    for (int n = 0; n <= 10; ++n) {
      for (int l1 = 0; l1 <= n; ++l1) {
        for (int n1 = 0; n1 <= n; ++n1) {
          const int l2 = n - l1, n2 = n - n1;
          if ((l1 - n2) % 2 == 0 && (l2 - n1) % 2 == 0) continue;
          for (Route r : {Route::CGSum, Route::Hyper4F3, Route::Racah})
            if (!interbasis::u_II_III(l1, l2, n1, n2, r).is_zero()) ++nonzero;
        }
      }
    }
    report(6, nonzero == 0, "parity-forbidden II-III entries exactly zero in every route"
                            " for n <= 10");
  }

  // 7. unitarity: exact row norms, float cross products <= 1e-12, inverse expansion
  {
    long bad = 0;
    double worst_cross = 0.0;
    for (int n = 0; n <= 10; ++n) {
      for (Pair pair : {Pair::I_II, Pair::I_III, Pair::II_III}) {
        try {
          const auto M =
              interbasis::assemble_matrix(n, pair, interbasis::default_route(pair), kThreads);
          for (int r = 0; r <= n; ++r) {
            Rational norm = 0;
            for (int c = 0; c <= n; ++c) norm += M.at(r, c).abs2();
            if (norm != Rational(1)) ++bad;
            for (int r2 = r + 1; r2 <= n; ++r2) {
              std::complex<double> dot = 0.0;
              for (int c = 0; c <= n; ++c)
                dot += M.at(r, c).to_float() * std::conj(M.at(r2, c).to_float());
              worst_cross = std::max(worst_cross, std::abs(dot));
            }
          }
        } catch (const integrity_error&) {
          ++bad;
        }
      }
    }
    double worst_rec = 0.0;
    for (int n = 0; n <= 8; ++n)
      for (int m = -n; m <= n; m += 2)
        worst_rec = std::max(worst_rec, oracle::reconstruct_inverse_expansion(n, m, 100));
    report(7, bad == 0 && worst_cross <= 1e-12 && worst_rec <= 1e-10,
           "exact unit row norms for n <= 10, cross products <= 1e-12 (worst " +
               fmt(worst_cross) + "), inverse expansion within 1e-10 (worst " +
               fmt(worst_rec) + ")");
  }

  // 8. Hahn orthogonality exact for N <= 8 and the dual-Hahn identification
  {
    double ignored = 0.0;
    const bool pass =
        suite_passes(verify::run_suite("hahn-orthogonality", 8, 0.0, kThreads), ignored);
    report(8, pass, "Hahn orthogonality with rho/d exact for N <= 8, dual-Hahn"
                    " identification exact for n <= 8");
  }

  // 9. Appendix A closed forms within 1e-10 of Gauss quadrature
  {
    double worst = 0.0;
    const bool pass = suite_passes(verify::run_suite("appendixA", 8, 1e-10, kThreads),
                                   worst);
    report(9, pass, "Appendix A closed forms vs quadrature, mu <= 4, lambda in"
                    " {1,3/2,2,5/2}, degrees <= 8 (worst " + fmt(worst) + ")");
  }

  // 10. Appendix B chain for N <= 5 plus Racah self-duality for N <= 6
  {
    double ignored = 0.0;
    const bool chain =
        suite_passes(verify::run_suite("appendixB", 5, 0.0, kThreads), ignored);
    const bool dual =
        suite_passes(verify::run_suite("racah-duality", 6, 0.0, kThreads), ignored);
    report(10, chain && dual,
           "three-step transformation chain and canonicalization identities for N <= 5;"
           " Racah self-duality exact for N <= 6");
  }

  // 11. 6j parameter map: half-integer labels and 4F3 parameter-set equality, N <= 6
  {
    long bad = 0;
    for (long N = 0; N <= 6; ++N) {
      for (long q1 = 0; q1 <= N; ++q1) {
        const long q2 = N - q1;
        for (long p1 = 0; p1 <= N; ++p1) {
          const auto lab = coupling::sixj_parameter_map(q1, q2, p1, N - p1);
          for (const Rational& v : {lab.l1, lab.l2, lab.l12, lab.l3, lab.l, lab.l23})
            if (!(v + v).is_integer()) ++bad;
          auto spec = coupling::sixj_f43_spec(lab);
          std::vector<Rational> want_num = {Rational(-q2), Rational(2 * q1 + q2 + 1),
                                            Rational(q1 + 1), Rational(q1 + 1)};
          std::vector<Rational> want_den = {Rational(q1 - p1 + 1),
                                            Rational(2 * q1) + Rational(3, 2),
                                            Rational(q1 + p1) + Rational(3, 2)};
          auto sorted = [](std::vector<Rational> v) {
            std::sort(v.begin(), v.end());
            return v;
          };
          if (sorted(spec.num) != sorted(want_num)) ++bad;
          if (sorted(spec.den) != sorted(want_den)) ++bad;
        }
      }
    }
    report(11, bad == 0, "6j labels integer-or-half-integer and the reconstructed 4F3"
                         " equals the even-even parameter set for N <= 6");
  }

  std::printf("%s: %d of 11 criteria passed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              11 - failures);
  return failures == 0 ? 0 : 1;
}
