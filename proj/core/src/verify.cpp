#include "zernike/verify.hpp"

#include <cmath>
#include <mutex>
#include <random>

#include "zernike/oracle.hpp"
#include "zernike/parallel.hpp"

namespace zernike::verify {

using bases::BasisId;
using bases::DiskPoint;
using bases::Domain;
using bases::LabelKind;
using bases::MultipletLabel;
using bases::System;
using interbasis::Pair;
using interbasis::Route;
using oracle::QuadratureSpec;

namespace {

std::vector<MultipletLabel> system_labels(System s, int n_max) {
  std::vector<MultipletLabel> out;
  for (int n = 0; n <= n_max; ++n) {
    const auto kind = s == System::I ? LabelKind::polar : LabelKind::cartesian;
    for (const auto& l : bases::enumerate_multiplet(n, kind)) out.push_back(l);
  }
  return out;
}

CheckResult float_check(std::string name, double measured, double tol) {
  return {std::move(name), measured <= tol, measured, tol};
}

CheckResult exact_check(std::string name, long failures) {
  return {std::move(name), failures == 0, static_cast<double>(failures), 0.0};
}

// ---------------------------------------------------------------------- //

std::vector<CheckResult> suite_orthonormality(int n_max, double tol, int threads) {
  if (tol <= 0) tol = 1e-9;
  std::vector<CheckResult> out;
  for (System s : {System::I, System::II, System::III}) {
    const auto labels = system_labels(s, n_max);
    const std::size_t L = labels.size();
    std::vector<double> worst_per(L, 0.0);
    parallel_for(L, threads, [&](std::size_t i) {
      const BasisId a{s, labels[i], Domain::disk};
      for (std::size_t j = i; j < L; ++j) {
        const BasisId b{s, labels[j], Domain::disk};
        const auto spec = QuadratureSpec::for_degree(labels[i].n + labels[j].n);
        const auto v = oracle::inner_product_disk(
            [&](const DiskPoint& p) { return bases::psi(a, p); },
            [&](const DiskPoint& p) { return bases::psi(b, p); }, spec);
        const double want = i == j ? 1.0 : 0.0;
        worst_per[i] = std::max(worst_per[i], std::abs(v.value - want));
      }
    });
    double worst = 0.0;
    for (double w : worst_per) worst = std::max(worst, w);
    const char* names[] = {"orthonormality system I", "orthonormality system II",
                           "orthonormality system III"};
    out.push_back(float_check(names[static_cast<int>(s)], worst, tol));
  }
  return out;
}

std::vector<CheckResult> suite_unitarity(int n_max, double tol, int threads) {
  if (tol <= 0) tol = 1e-12;
  std::vector<CheckResult> out;
  long integrity_failures = 0;
  double worst_cross = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    for (Pair pair : {Pair::I_II, Pair::I_III, Pair::II_III}) {
      try {
        // assemble_matrix enforces exact unit row norms and exact row
        // orthogonality; a float cross-product pass double-checks on top
        const auto M = interbasis::assemble_matrix(n, pair,
                                                   interbasis::default_route(pair), threads);
        for (int r = 0; r <= n; ++r) {
          for (int r2 = r + 1; r2 <= n; ++r2) {
            std::complex<double> dot = 0.0;
            for (int c = 0; c <= n; ++c)
              dot += M.at(r, c).to_float() * std::conj(M.at(r2, c).to_float());
            worst_cross = std::max(worst_cross, std::abs(dot));
          }
        }
      } catch (const integrity_error&) {
        ++integrity_failures;
      }
    }
  }
  out.push_back(exact_check("unitarity: exact row norms and orthogonality (n <= " +
                                std::to_string(n_max) + ")",
                            integrity_failures));
  out.push_back(float_check("unitarity: float cross-row products", worst_cross, tol));

  // exact inverse: Wtilde W = identity
  long inv_failures = 0;
  for (int n = 0; n <= n_max; ++n) {
    const auto polar = bases::enumerate_multiplet(n, LabelKind::polar);
    for (const auto& row : polar) {
      for (const auto& col : polar) {
        ExactValue dot = ExactValue::zero();
        for (int n1 = 0; n1 <= n; ++n1)
          dot = dot + interbasis::wtilde_II_I(n, row.m, n1) *
                          interbasis::w_I_II(n, col.m, n1);
        const bool is_diag = row.m == col.m;
        if (is_diag ? dot != ExactValue::one() : !dot.is_zero()) ++inv_failures;
      }
    }
  }
  out.push_back(exact_check("unitarity: exact inverse Wtilde*W = 1", inv_failures));

  double worst_rec = 0.0;
  for (int n = 0; n <= std::min(n_max, 8); ++n)
    for (int m = -n; m <= n; m += 2)
      worst_rec = std::max(worst_rec, oracle::reconstruct_inverse_expansion(n, m, 100));
  out.push_back(float_check("unitarity: inverse expansion of Upsilon^I", worst_rec, 1e-10));
  return out;
}

std::vector<CheckResult> suite_routes(int n_max, double tol, int threads) {
  if (tol <= 0) tol = 1e-9;
  std::vector<CheckResult> out;
  long w_fail = 0, u_fail = 0;
  {
    std::mutex mu;
    parallel_for(n_max + 1, threads, [&](std::size_t n_) {
      const int n = static_cast<int>(n_);
      long wf = 0, uf = 0;
      for (int m = -n; m <= n; m += 2) {
        for (int n1 = 0; n1 <= n; ++n1) {
          const auto a = interbasis::w_I_II(n, m, n1, Route::ClebschGordan);
          if (a != interbasis::w_I_II(n, m, n1, Route::Hyper3F2)) ++wf;
          if (a != interbasis::w_I_II(n, m, n1, Route::Hahn)) ++wf;
        }
      }
      for (int l1 = 0; l1 <= n; ++l1) {
        for (int n1 = 0; n1 <= n; ++n1) {
          const auto a = interbasis::u_II_III(l1, n - l1, n1, n - n1, Route::CGSum);
          if (a != interbasis::u_II_III(l1, n - l1, n1, n - n1, Route::Hyper4F3)) ++uf;
          if (a != interbasis::u_II_III(l1, n - l1, n1, n - n1, Route::Racah)) ++uf;
        }
      }
      std::lock_guard<std::mutex> lk(mu);
      w_fail += wf;
      u_fail += uf;
    });
  }
  out.push_back(exact_check("routes: W 3F2 = CG = Hahn (n <= " + std::to_string(n_max) + ")",
                            w_fail));
  out.push_back(exact_check("routes: U CGsum = 4F3 = Racah", u_fail));

  // quadrature agreement for every entry of every pair
  double worst = 0.0;
  {
    std::vector<double> worst_per(n_max + 1, 0.0);
    parallel_for(n_max + 1, threads, [&](std::size_t n_) {
      const int n = static_cast<int>(n_);
      double w = 0.0;
      const auto spec = QuadratureSpec::for_degree(2 * n);
      for (Pair pair : {Pair::I_II, Pair::I_III, Pair::II_III}) {
        const auto M = interbasis::assemble_matrix(n, pair, interbasis::default_route(pair));
        for (int r = 0; r <= n; ++r)
          for (int c = 0; c <= n; ++c) {
            const auto q = oracle::coeff_by_quadrature(pair, M.row_labels[r],
                                                       M.col_labels[c], spec);
            w = std::max(w, std::abs(q - M.at(r, c).to_float()));
          }
      }
      worst_per[n_] = w;
    });
    for (double w : worst_per) worst = std::max(worst, w);
  }
  out.push_back(float_check("routes: closed forms vs quadrature", worst, tol));
  return out;
}

std::vector<CheckResult> suite_parity(int n_max, double tol, int /*threads*/) {
  if (tol <= 0) tol = 1e-12;
  std::vector<CheckResult> out;
  long forbidden_nonzero = 0;
  for (int n = 0; n <= n_max; ++n) {
    for (int l1 = 0; l1 <= n; ++l1) {
      for (int n1 = 0; n1 <= n; ++n1) {
        const int l2 = n - l1, n2 = n - n1;
        if ((l1 - n2) % 2 == 0 && (l2 - n1) % 2 == 0) continue;
        for (Route r : {Route::CGSum, Route::Hyper4F3, Route::Racah})
          if (!interbasis::u_II_III(l1, l2, n1, n2, r).is_zero()) ++forbidden_nonzero;
      }
    }
  }
  out.push_back(exact_check("parity: forbidden II-III entries exactly zero in all routes",
                            forbidden_nonzero));

  std::mt19937 rng(2027);
  std::uniform_real_distribution<double> unit(0.0, 1.0), ang(-M_PI, M_PI);
  double worst = 0.0;
  for (int n = 0; n <= std::min(n_max, 8); ++n) {
    for (int k1 = 0; k1 <= n; ++k1) {
      const BasisId b2{System::II, MultipletLabel::cartesian(k1, n - k1), Domain::disk};
      const BasisId b3{System::III, MultipletLabel::cartesian(k1, n - k1), Domain::disk};
      for (int s = 0; s < 50; ++s) {
        const auto p = DiskPoint::from_polar(std::sqrt(unit(rng)), ang(rng));
        const DiskPoint mx{-p.x, p.y}, my{p.x, -p.y};
        const double s1 = k1 % 2 == 0 ? 1.0 : -1.0;          // (-1)^{k1}
        const double s2 = (n - k1) % 2 == 0 ? 1.0 : -1.0;    // (-1)^{k2}
        worst = std::max(worst, std::abs(bases::psi(b2, my) - s1 * bases::psi(b2, p)));
        worst = std::max(worst, std::abs(bases::psi(b2, mx) - s2 * bases::psi(b2, p)));
        worst = std::max(worst, std::abs(bases::psi(b3, mx) - s1 * bases::psi(b3, p)));
        worst = std::max(worst, std::abs(bases::psi(b3, my) - s2 * bases::psi(b3, p)));
      }
    }
  }
  out.push_back(float_check("parity: pointwise reflection relations", worst, tol));
  return out;
}

std::vector<CheckResult> suite_expansions(int n_max, double tol, int threads) {
  if (tol <= 0) tol = 1e-10;
  std::vector<CheckResult> out;
  for (Pair pair : {Pair::I_II, Pair::I_III, Pair::II_III}) {
    std::vector<double> worst_per(n_max + 1, 0.0);
    parallel_for(n_max + 1, threads, [&](std::size_t n_) {
      const int n = static_cast<int>(n_);
      double w = 0.0;
      for (int k1 = 0; k1 <= n; ++k1)
        w = std::max(w, oracle::reconstruct_expansion(
                            pair, MultipletLabel::cartesian(k1, n - k1),
                            interbasis::default_route(pair), 50));
      worst_per[n_] = w;
    });
    double worst = 0.0;
    for (double w : worst_per) worst = std::max(worst, w);
    out.push_back(
        float_check("expansions: pair " + interbasis::to_string(pair), worst, tol));
  }
  double worst_inv = 0.0;
  for (int n = 0; n <= n_max; ++n)
    for (int m = -n; m <= n; m += 2)
      worst_inv = std::max(worst_inv, oracle::reconstruct_inverse_expansion(n, m, 50));
  out.push_back(float_check("expansions: inverse II -> I", worst_inv, tol));
  return out;
}

std::vector<CheckResult> suite_eigenvalue(int n_max, double tol, int threads) {
  if (tol <= 0) tol = 1e-3;
  std::vector<CheckResult> out;
  const int nb = std::min(n_max, 3);
  std::vector<BasisId> all;
  for (int n = 0; n <= nb; ++n) {
    for (const auto& l : bases::enumerate_multiplet(n, LabelKind::polar))
      all.push_back({System::I, l, Domain::disk});
    for (const auto& l : bases::enumerate_multiplet(n, LabelKind::cartesian)) {
      all.push_back({System::II, l, Domain::disk});
      all.push_back({System::III, l, Domain::disk});
    }
  }
  std::vector<double> r128(all.size()), r256(all.size()), r512(all.size());
  parallel_for(all.size(), threads, [&](std::size_t i) {
    r128[i] = oracle::zernike_eigen_residual(all[i], 128);
    r256[i] = oracle::zernike_eigen_residual(all[i], 256);
    r512[i] = oracle::zernike_eigen_residual(all[i], 512);
  });
  double worst512 = 0.0, worst_ratio = 1e9;
  for (std::size_t i = 0; i < all.size(); ++i) {
    worst512 = std::max(worst512, r512[i]);
    // centred differences are exact on polynomials of degree <= 2, so only
    // bases with genuine truncation error enter the decay check
    if (r128[i] < 1e-9) continue;
    worst_ratio = std::min({worst_ratio, r128[i] / r256[i], r256[i] / r512[i]});
  }
  out.push_back(float_check("eigenvalue: residual at 512^2 (n <= " + std::to_string(nb) + ")",
                            worst512, tol));
  // halving h must shrink the residual by ~4; require at least 3
  out.push_back({"eigenvalue: O(h^2) decay across {128,256,512}", worst_ratio >= 3.0,
                 worst_ratio, 3.0});
  return out;
}

std::vector<CheckResult> suite_appendixA(int n_max, double tol, int /*threads*/) {
  if (tol <= 0) tol = 1e-10;
  const int deg_max = std::max(n_max, 1);
  double worst = 0.0;
  std::vector<double> x, w;
  oracle::gauss_legendre_unit(40, x, w);
  for (int mu = 0; mu <= 4; ++mu) {
    for (const Rational& lam :
         {Rational(1), Rational(3, 2), Rational(2), Rational(5, 2)}) {
      const double lamd = lam.to_double();
      for (int nn = 0; nn <= deg_max; ++nn) {
        for (int mm = 0; mm <= deg_max; ++mm) {
          const auto exact = interbasis::appendixA_J(mu, lam, nn, mm);
          double quad = 0.0;
          for (std::size_t i = 0; i < x.size(); ++i) {
            const double xi = 2.0 * x[i] - 1.0; // map [0,1] -> [-1,1]
            quad += 2.0 * w[i] * std::pow(1.0 - xi * xi, mu) *
                    bases::gegenbauer_C<double>(nn, lamd, xi) *
                    bases::legendre_P<double>(mm, xi);
          }
          worst = std::max(worst, std::abs(exact.to_float().real() - quad));
        }
      }
    }
  }
  return {float_check("appendixA: closed form vs Gauss quadrature (degrees <= " +
                          std::to_string(deg_max) + ")",
                      worst, tol)};
}

// regularized canonicalization identities behind the Racah forms
long appendixB_identity_failures(int N_max) {
  long failures = 0;
  const Rational half(1, 2);
  auto pow2 = [](long e) {
    Rational r = 1;
    for (long i = 0; i < e; ++i) r *= 2;
    return r;
  };
  for (int N = 0; N <= N_max; ++N) {
    for (int q1 = 0; q1 <= N; ++q1) {
      const int q2 = N - q1;
      for (int p1 = 0; p1 <= N; ++p1) {
        const int p2 = N - p1;
        // even-even
        {
          const Rational lhs = hyp::eval_pFq_regularized(
              {Rational(-q2), Rational(q1 + N + 1), Rational(q1 + 1), Rational(q1 + 1)},
              {Rational(2 * q1) + Rational(3, 2), Rational(q1 + p1) + Rational(3, 2)},
              Rational(q1 - p1 + 1));
          Rational pre = pow2(2 * q1 + 4 * p1 + 1) * pochhammer(Rational(p1) + half, q1 + 1) *
                         factorial(p1) * factorial(2 * q2) * factorial(2 * p2) *
                         factorial(q1 + N) * factorial(p1 + N) * factorial(p1 + N) *
                         factorial(4 * q1 + 1) /
                         (factorial(q2) * factorial(p2) * factorial(p2) *
                          factorial(2 * q1) * factorial(2 * q1) *
                          factorial(2 * q1 + 2 * N + 1) * factorial(2 * p1 + 2 * N + 1));
          if (p1 % 2) pre = -pre;
          const Rational rhs = pre * hyp::eval_pFq_unit(
              {{Rational(-p1), Rational(p1) + half, Rational(q1) + half, Rational(-q1)},
               {Rational(N + 1), Rational(1), Rational(-N)}});
          if (lhs != rhs) ++failures;
        }
        // odd families (49') and (50')
        {
          const Rational lhs = hyp::eval_pFq_regularized(
              {Rational(-q2), Rational(q1 + N + 2), Rational(q1 + 1), Rational(q1 + 1)},
              {Rational(2 * q1) + Rational(5, 2), Rational(q1 + p1) + Rational(3, 2)},
              Rational(q1 - p1 + 1));
          Rational pre = pow2(2 * q1 + 4 * p1 + 2) * pochhammer(Rational(p1) + half, q1 + 1) *
                         factorial(p1) * factorial(2 * q2) * factorial(2 * p2 + 1) *
                         factorial(q1 + N + 1) * factorial(p1 + N + 1) *
                         factorial(p1 + N + 1) * factorial(4 * q1 + 3) /
                         (Rational(N + 1) * factorial(q2) * factorial(p2) * factorial(p2) *
                          factorial(2 * q1 + 1) * factorial(2 * q1 + 1) *
                          factorial(2 * q1 + 2 * N + 3) * factorial(2 * p1 + 2 * N + 2));
          if (p1 % 2) pre = -pre;
          const Rational rhs = pre * hyp::eval_pFq_unit(
              {{Rational(-p1), Rational(p1) + half, Rational(q1) + Rational(3, 2),
                Rational(-q1)},
               {Rational(N + 2), Rational(1), Rational(-N)}});
          if (lhs != rhs) ++failures;
        }
        {
          const Rational lhs = hyp::eval_pFq_regularized(
              {Rational(-q2), Rational(q1 + N + 3), Rational(q1 + 1), Rational(q1 + 1)},
              {Rational(2 * q1) + Rational(5, 2), Rational(q1 + p1) + Rational(5, 2)},
              Rational(q1 - p1 + 1));
          Rational pre = pow2(2 * q1 + 4 * p1 + 2) *
                         pochhammer(Rational(p1) + Rational(3, 2), q1 + 1) * factorial(p1) *
                         factorial(2 * q2 + 1) * factorial(2 * p2 + 1) *
                         factorial(q1 + N + 1) * factorial(p1 + N + 1) *
                         factorial(p1 + N + 2) * factorial(4 * q1 + 3) /
                         (Rational(N + 1) * Rational(N + 2) * factorial(q2) *
                          factorial(p2) * factorial(p2) * factorial(2 * q1 + 1) *
                          factorial(2 * q1 + 1) * factorial(2 * q1 + 2 * N + 3) *
                          factorial(2 * p1 + 2 * N + 3));
          if (p1 % 2) pre = -pre;
          const Rational rhs = pre * hyp::eval_pFq_unit(
              {{Rational(-p1), Rational(p1) + Rational(3, 2), Rational(q1) + Rational(3, 2),
                Rational(-q1)},
               {Rational(N + 3), Rational(1), Rational(-N)}});
          if (lhs != rhs) ++failures;
        }
      }
    }
  }
  return failures;
}

// stepwise Whipple-reversal-Whipple chain on its nondegenerate domain
long appendixB_chain_failures(int N_max, long& combos) {
  long failures = 0;
  combos = 0;
  const Rational half(1, 2);
  for (int N = 0; N <= N_max; ++N) {
    for (int q1 = 0; q1 <= N; ++q1) {
      const int q2 = N - q1;
      for (int p1 = 0; p1 <= std::min(q1, q2); ++p1) {
        const int p2 = N - p1;
        ++combos;
        const hyp::HypergeometricSpec src{
            {Rational(-q2), Rational(q1 + N + 1), Rational(q1 + 1), Rational(q1 + 1)},
            {Rational(2 * q1) + Rational(3, 2), Rational(q1 + p1) + Rational(3, 2),
             Rational(q1 - p1 + 1)}};
        const Rational v0 = hyp::eval_pFq_unit(src);
        const auto s1 = hyp::transform_whipple(src, {0, 2, 1, 3, 0, 1, 2});
        const Rational v1 = hyp::eval_pFq_unit(s1.spec);
        if (v0 != s1.prefactor * v1) { ++failures; continue; }
        // s1.spec = 4F3(-q2, -p1, -(p1+N), q1+1; 1/2-N, 1/2-p1-q2, q1-p1+1)
        int rev_index = -1;
        for (int i = 0; i < 4; ++i)
          if (s1.spec.num[i] == Rational(-p1)) { rev_index = i; break; }
        const auto s2 = hyp::transform_reversal(s1.spec, rev_index);
        const Rational v2 = hyp::eval_pFq_unit(s2.spec);
        if (v1 != s2.prefactor * v2) { ++failures; continue; }
        // locate roles for the final Whipple step; values may repeat, so each
        // index is consumed at most once
        const auto& nn = s2.spec.num;
        const auto& dd = s2.spec.den;
        hyp::WhippleRoles roles{};
        {
          bool used[4] = {false, false, false, false};
          auto take = [&](const Rational& v) {
            for (int i = 0; i < 4; ++i)
              if (!used[i] && nn[i] == v) { used[i] = true; return i; }
            return -1;
          };
          roles.n_index = take(Rational(-p1));
          roles.z_index = take(Rational(-q1));
          roles.x_index = take(Rational(q2) + half);
          roles.y_index = take(Rational(p2) + half);
          bool usedd[3] = {false, false, false};
          auto taked = [&](const Rational& v) {
            for (int i = 0; i < 3; ++i)
              if (!usedd[i] && dd[i] == v) { usedd[i] = true; return i; }
            return -1;
          };
          roles.u_index = taked(Rational(-(q1 + p1)));
          roles.v_index = taked(Rational(q2 - p1 + 1));
          roles.w_index = taked(Rational(N + 1));
          if (roles.n_index < 0 || roles.z_index < 0 || roles.x_index < 0 ||
              roles.y_index < 0 || roles.u_index < 0 || roles.v_index < 0 ||
              roles.w_index < 0) { ++failures; continue; }
        }
        const auto s3 = hyp::transform_whipple(s2.spec, roles);
        const Rational v3 = hyp::eval_pFq_unit(s3.spec);
        if (v2 != s3.prefactor * v3) { ++failures; continue; }
        const Rational canon = hyp::eval_pFq_unit(
            {{Rational(-p1), Rational(p1) + half, Rational(q1) + half, Rational(-q1)},
             {Rational(N + 1), Rational(1), Rational(-N)}});
        if (v3 != canon) ++failures;
      }
    }
  }
  return failures;
}

std::vector<CheckResult> suite_appendixB(int n_max, double /*tol*/, int /*threads*/) {
  const int N_max = std::min(n_max, 5);
  std::vector<CheckResult> out;
  out.push_back(exact_check("appendixB: regularized canonicalization identities (N <= " +
                                std::to_string(N_max) + ")",
                            appendixB_identity_failures(N_max)));
  long combos = 0;
  const long chain_fail = appendixB_chain_failures(N_max, combos);
  out.push_back(exact_check("appendixB: 3-step chain on " + std::to_string(combos) +
                                " nondegenerate combos",
                            chain_fail));
  return out;
}

std::vector<CheckResult> suite_hahn(int n_max, double /*tol*/, int /*threads*/) {
  long ortho_failures = 0;
  for (int N = 0; N <= n_max; ++N) {
    const Rational a(-(N + 1));
    for (int mm = 0; mm <= N; ++mm) {
      for (int nn = mm; nn <= N; ++nn) {
        Rational sum = 0;
        for (int j = 0; j <= N; ++j) {
          const auto wn = hyp::hahn_weight_norm(j, nn, a, a, N);
          sum += wn.rho * hyp::hahn_Q(mm, Rational(j), a, a, N) *
                 hyp::hahn_Q(nn, Rational(j), a, a, N);
        }
        const Rational want =
            mm == nn ? hyp::hahn_weight_norm(0, nn, a, a, N).d_squared : Rational(0);
        if (sum != want) ++ortho_failures;
      }
    }
  }
  long dual_failures = 0;
  for (int n = 0; n <= n_max; ++n) {
    const Rational a(-(n + 1));
    for (int m = -n; m <= n; m += 2) {
      const int j = (n + m) / 2;
      for (int n2 = 0; n2 <= n; ++n2) {
        if (hyp::dual_hahn_R(j, n2, a, a, n) != hyp::hahn_Q(n2, Rational(j), a, a, n))
          ++dual_failures;
      }
    }
  }
  return {exact_check("hahn-orthogonality: sum rho Q Q = delta d^2 (N <= " +
                          std::to_string(n_max) + ")",
                      ortho_failures),
          exact_check("hahn-orthogonality: dual Hahn identification", dual_failures)};
}

std::vector<CheckResult> suite_racah(int n_max, double /*tol*/, int /*threads*/) {
  const int N_max = std::min(n_max, 6);
  long dual_failures = 0;
  const Rational half(1, 2);
  for (int N = 0; N <= N_max; ++N) {
    hyp::RacahParams P(Rational(N), -(Rational(N) + half), Rational(-(N + 1)),
                       Rational(N) + half, N);
    for (int a = 0; a <= N; ++a)
      for (int b = 0; b <= N; ++b)
        if (hyp::racah_R(a, b, P) != hyp::racah_R(b, a, P)) ++dual_failures;
  }
  long pair_failures = 0;
  for (int n = 0; n <= n_max; ++n) {
    for (int l1 = 0; l1 <= n; ++l1)
      for (int n1 = 0; n1 <= n; ++n1) {
        const auto both = interbasis::u_racah_both_forms(l1, n - l1, n1, n - n1);
        if (both.first != both.second) ++pair_failures;
      }
  }
  return {exact_check("racah-duality: self-dual family R_q(lam(p)) = R_p(lam(q)) (N <= " +
                          std::to_string(N_max) + ")",
                      dual_failures),
          exact_check("racah-duality: weight/norm arrangements agree", pair_failures)};
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "orthonormality", "unitarity",  "routes",    "parity",
      "expansions",     "eigenvalue", "appendixA", "appendixB",
      "hahn-orthogonality", "racah-duality"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, int n_max, double tolerance,
                                   int threads) {
  if (n_max < 0) throw domain_error("run_suite: negative n_max");
  if (suite == "orthonormality") return suite_orthonormality(n_max, tolerance, threads);
  if (suite == "unitarity") return suite_unitarity(n_max, tolerance, threads);
  if (suite == "routes") return suite_routes(n_max, tolerance, threads);
  if (suite == "parity") return suite_parity(n_max, tolerance, threads);
  if (suite == "expansions") return suite_expansions(n_max, tolerance, threads);
  if (suite == "eigenvalue") return suite_eigenvalue(n_max, tolerance, threads);
  if (suite == "appendixA") return suite_appendixA(n_max, tolerance, threads);
  if (suite == "appendixB") return suite_appendixB(n_max, tolerance, threads);
  if (suite == "hahn-orthogonality") return suite_hahn(n_max, tolerance, threads);
  if (suite == "racah-duality") return suite_racah(n_max, tolerance, threads);
  throw domain_error("run_suite: unknown suite '" + suite + "'");
}

} // namespace zernike::verify
