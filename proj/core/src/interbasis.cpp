#include "zernike/interbasis.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>

#include "zernike/parallel.hpp"

namespace zernike::interbasis {

using bases::LabelKind;
using bases::MultipletLabel;
using coupling::special_cg;
using hyp::eval_pFq_regularized;
using hyp::eval_pFq_unit;

bool route_admissible(Pair pair, Route route) {
  const bool w_route = route == Route::Hyper3F2 || route == Route::ClebschGordan ||
                       route == Route::Hahn;
  if (pair == Pair::II_III) return !w_route;
  return w_route;
}

Route default_route(Pair pair) {
  return pair == Pair::II_III ? Route::CGSum : Route::ClebschGordan;
}

std::string to_string(Pair pair) {
  switch (pair) {
    case Pair::I_II: return "I-II";
    case Pair::I_III: return "I-III";
    default: return "II-III";
  }
}

std::string to_string(Route route) {
  switch (route) {
    case Route::Hyper3F2: return "3f2";
    case Route::ClebschGordan: return "cg";
    case Route::Hahn: return "hahn";
    case Route::CGSum: return "cgsum";
    case Route::Hyper4F3: return "4f3";
    default: return "racah";
  }
}

namespace {

void check_polar(int n, int m) {
  if (n < 0 || std::abs(m) > n || (n - std::abs(m)) % 2 != 0)
    throw domain_error("interbasis: invalid polar label (n=" + std::to_string(n) +
                       ", m=" + std::to_string(m) + ")");
}

// i^{n1} (-1)^{(m+|m|)/2} = i^{n1 + m + |m|}
long w_phase(int m, int n1) { return n1 + m + std::abs(m); }

ExactValue w_via_3f2(int n, int m, int n1) {
  const int n2 = n - n1;
  const int j = (n + m) / 2;
  const long g = n1 - j;
  // terminating 3F2 with the reciprocal factorial 1/g! folded into the sum
  const Rational series = eval_pFq_regularized(
      {Rational(-n2), Rational(n1 + 1), Rational(-j)}, {Rational(-n)}, Rational(g + 1));
  const Rational mag = factorial(n) * factorial(n1) / factorial(j) * series;
  const Rational rad =
      Rational(2 * n1 + 1) / (factorial(n2) * factorial(n + n1 + 1));
  return ExactValue(0, mag, rad).times_i_pow(w_phase(m, n1));
}

ExactValue w_via_hahn(int n, int m, int n1) {
  const int n2 = n - n1;
  const long j = (n + m) / 2;
  const auto wn = hyp::hahn_weight_norm(j, n2, Rational(-(n + 1)), Rational(-(n + 1)), n);
  const Rational q =
      hyp::hahn_Q(n2, Rational(j), Rational(-(n + 1)), Rational(-(n + 1)), n);
  // sqrt(rho(j))/d_{n2} * Q; rho is a perfect square, the norm radical joins
  // the radicand
  const auto root = sqrt_if_square(wn.rho);
  return (ExactValue::sqrt_of(Rational(1) / wn.d_squared) * (*root * q))
      .times_i_pow(w_phase(m, n1));
}

// ----- II-III closed forms ------------------------------------------------

bool parity_forbidden(int l1, int l2, int n1, int n2) {
  return (l1 - n2) % 2 != 0 || (l2 - n1) % 2 != 0;
}

ExactValue u_via_cgsum(int l1, int l2, int n1, int n2) {
  const int n = l1 + l2;
  ExactValue acc = ExactValue::zero();
  for (int k = 0; k <= n; ++k) {
    const coupling::SpinLabel up(n, n - 2 * k), down(n, -(n - 2 * k));
    const ExactValue c1 = clebsch_gordan(up, down, coupling::SpinLabel(2 * l1, 0));
    const ExactValue c2 = clebsch_gordan(up, down, coupling::SpinLabel(2 * n1, 0));
    acc = acc + (c1 * c2).times_minus_one_pow(l1 + k);
  }
  return acc.times_i_pow(l1 + n2);
}

ExactValue u_via_4f3(int l1, int l2, int n1, int n2) {
  const int n = l1 + l2;
  const Rational half(1, 2);
  auto pow2 = [](long e) {
    Rational r = 1;
    for (long i = 0; i < e; ++i) r *= 2;
    return r;
  };
  int q1, q2, p1, p2;
  Rational series, mag, rad;
  int sign_pow;
  if (l1 % 2 == 0 && n % 2 == 0) {
    // even-even
    q1 = l1 / 2; q2 = l2 / 2; p1 = n1 / 2; p2 = n2 / 2;
    series = eval_pFq_regularized(
        {Rational(-q2), Rational(2 * q1 + q2 + 1), Rational(q1 + 1), Rational(q1 + 1)},
        {Rational(2 * q1) + Rational(3, 2), Rational(q1 + p1) + Rational(3, 2)},
        Rational(q1 - p1 + 1));
    mag = factorial(p2) / factorial(p1) * factorial(2 * q1) * factorial(2 * q1) /
          factorial(4 * q1 + 1) / factorial(2 * p1 + p2) /
          pochhammer(Rational(p1) + half, q1 + 1) / pow2(2 * p1) * series;
    rad = (Rational(2 * p1) + half) * (Rational(2 * q1) + half) *
          factorial(4 * p1 + 2 * p2 + 1) * factorial(4 * q1 + 2 * q2 + 1) /
          (factorial(2 * p2) * factorial(2 * q2));
    sign_pow = q2;
  } else if (l1 % 2 == 0) {
    // l1 even, n odd: l2 = 2q2+1, n1 = 2p1+1, n2 = 2p2
    q1 = l1 / 2; q2 = (l2 - 1) / 2; p1 = (n1 - 1) / 2; p2 = n2 / 2;
    series = eval_pFq_regularized(
        {Rational(-q2), Rational(2 * q1 + q2 + 2), Rational(q1 + 1), Rational(q1 + 1)},
        {Rational(2 * q1) + Rational(3, 2), Rational(q1 + p1) + Rational(5, 2)},
        Rational(q1 - p1 + 1));
    mag = factorial(p2) / factorial(p1) * factorial(2 * q1) * factorial(2 * q1) /
          (factorial(2 * p1 + p2 + 1) * factorial(4 * q1 + 1)) /
          pochhammer(Rational(p1) + Rational(3, 2), q1 + 1) / pow2(2 * p1 + 1) * series;
    rad = (Rational(2 * p1) + Rational(3, 2)) * (Rational(2 * q1) + half) /
          (factorial(2 * p2) * factorial(2 * q2 + 1)) *
          factorial(4 * p1 + 2 * p2 + 3) * factorial(4 * q1 + 2 * q2 + 2);
    sign_pow = q2;
  } else if (n % 2 == 1) {
    // l1 odd, n odd: l2 = 2q2, n1 = 2p1, n2 = 2p2+1
    q1 = (l1 - 1) / 2; q2 = l2 / 2; p1 = n1 / 2; p2 = (n2 - 1) / 2;
    series = eval_pFq_regularized(
        {Rational(-q2), Rational(q2 + 2 * q1 + 2), Rational(q1 + 1), Rational(q1 + 1)},
        {Rational(2 * q1) + Rational(5, 2), Rational(q1 + p1) + Rational(3, 2)},
        Rational(q1 - p1 + 1));
    mag = factorial(p2) * factorial(2 * q1 + 1) * factorial(2 * q1 + 1) /
          (factorial(p1) * factorial(2 * p1 + p2 + 1)) / factorial(4 * q1 + 3) /
          pochhammer(Rational(p1) + half, q1 + 1) / pow2(2 * p1) * series;
    rad = (Rational(2 * p1) + half) * (Rational(2 * q1) + Rational(3, 2)) /
          (factorial(2 * p2 + 1) * factorial(2 * q2)) *
          factorial(4 * p1 + 2 * p2 + 2) * factorial(4 * q1 + 2 * q2 + 3);
    sign_pow = q2;
  } else {
    // all odd
    q1 = (l1 - 1) / 2; q2 = (l2 - 1) / 2; p1 = (n1 - 1) / 2; p2 = (n2 - 1) / 2;
    series = eval_pFq_regularized(
        {Rational(-q2), Rational(q2 + 2 * q1 + 3), Rational(q1 + 1), Rational(q1 + 1)},
        {Rational(2 * q1) + Rational(5, 2), Rational(q1 + p1) + Rational(5, 2)},
        Rational(q1 - p1 + 1));
    mag = factorial(p2) * factorial(2 * q1 + 1) * factorial(2 * q1 + 1) /
          (factorial(p1) * factorial(2 * p1 + p2 + 2)) / factorial(4 * q1 + 3) /
          pochhammer(Rational(p1) + Rational(3, 2), q1 + 1) / pow2(2 * p1 + 1) * series;
    rad = (Rational(2 * p1) + Rational(3, 2)) * (Rational(2 * q1) + Rational(3, 2)) /
          (factorial(2 * p2 + 1) * factorial(2 * q2 + 1)) *
          factorial(4 * p1 + 2 * p2 + 4) * factorial(4 * q1 + 2 * q2 + 4);
    sign_pow = q2;
  }
  return (ExactValue(0, mag, rad)).times_minus_one_pow(sign_pow);
}

struct RacahFamily {
  hyp::RacahParams params;       // first printed arrangement
  hyp::RacahParams params_dual;  // second arrangement (shifted for the mu lattice)
  // weight(x) and norm(x) for the first form; weight2/norm2 for the second
  Rational rho1, d1_sq;
  Rational rho2, d2_sq;
};

// value = sign * sqrt(rho)/d * R, with d = sqrt(d_sq)
ExactValue racah_value(const Rational& rho, const Rational& d_sq, const Rational& R,
                       int sign_pow) {
  return (ExactValue::sqrt_of(rho / d_sq) * R).times_minus_one_pow(sign_pow);
}

std::pair<ExactValue, ExactValue> u_via_racah(int l1, int l2, int n1) {
  const int n = l1 + l2;
  const Rational half(1, 2);
  auto pow4 = [](long e) {
    Rational r = 1;
    for (long i = 0; i < e; ++i) r *= 4;
    return r;
  };
  auto pow2 = [](long e) {
    Rational r = 1;
    for (long i = 0; i < e; ++i) r *= 2;
    return r;
  };
  if (l1 % 2 == 0 && n % 2 == 0) {
    // even-even: alpha = N, beta = -delta = -(N+1/2), gamma = -(N+1),
    // lattice lambda(x) = x(x+1/2); self-dual family
    const long q1 = l1 / 2, q2 = l2 / 2, p1 = n1 / 2;
    const long N = q1 + q2;
    hyp::RacahParams P(Rational(N), -(Rational(N) + half), Rational(-(N + 1)),
                       Rational(N) + half, N);
    auto rho = [&](long x) {
      const long xc = N - x;
      return pow4(2 * x) * Rational(2 * N + 1) * Rational(4 * x + 1) *
             factorial(2 * xc) * factorial(x + N) * factorial(x + N) /
             (factorial(2 * x + 2 * N + 1) * factorial(xc) * factorial(xc));
    };
    auto d_sq = [&](long x) {
      const long xc = N - x;
      return factorial(xc) * factorial(xc) /
             (pow4(2 * x) * factorial(x + N) * factorial(x + N)) *
             Rational(2 * N + 1) * factorial(2 * x + 2 * N + 1) /
             (Rational(4 * x + 1) * factorial(2 * xc));
    };
    const ExactValue v1 =
        racah_value(rho(p1), d_sq(q1), hyp::racah_R(q1, p1, P), p1 + q2);
    const ExactValue v2 =
        racah_value(rho(q1), d_sq(p1), hyp::racah_R(p1, q1, P), p1 + q2);
    return {v1, v2};
  }
  if (l1 % 2 == 0 || n % 2 == 1) {
    // the two odd-n families share alpha = -gamma = N+1, beta = -delta = -(N+1/2);
    // first form on lambda(x) = x(x+1/2), second on mu(x) = x(x+3/2) with
    // (alpha, beta-1, gamma, delta+1)
    long q1, q2, p1;
    bool swap_roles;
    if (l1 % 2 == 0) { // l2 odd, n1 odd (RR1/RR2): degree p1 on lattice q1 first
      q1 = l1 / 2; q2 = (l2 - 1) / 2; p1 = (n1 - 1) / 2;
      swap_roles = true;
    } else {           // l1 odd, n2 odd ((co)/(58')): degree q1 on lattice p1 first
      q1 = (l1 - 1) / 2; q2 = l2 / 2; p1 = n1 / 2;
      swap_roles = false;
    }
    const long N = q1 + q2;
    hyp::RacahParams P(Rational(N + 1), -(Rational(N) + half), Rational(-(N + 1)),
                       Rational(N) + half, N);
    hyp::RacahParams Pmu(Rational(N + 1), -(Rational(N) + Rational(3, 2)),
                         Rational(-(N + 1)), Rational(N) + Rational(3, 2), N);
    auto rho1 = [&](long x) {
      const long xc = N - x;
      return pow2(4 * x + 1) * Rational(4 * x + 1) * factorial(2 * xc + 1) *
             factorial(x + N + 1) * factorial(x + N + 1) /
             (Rational(N + 1) * factorial(2 * x + 2 * N + 2) * factorial(xc) *
              factorial(xc));
    };
    auto d1_sq = [&](long x) {
      const long xc = N - x;
      return factorial(xc) * factorial(xc) /
             (pow4(2 * x) * factorial(x + N + 1) * factorial(x + N + 1)) *
             Rational(N + 1) * factorial(2 * x + 2 * N + 3) /
             (Rational(2) * Rational(4 * x + 3) * factorial(2 * xc));
    };
    auto rho2 = [&](long x) {
      const long xc = N - x;
      return pow2(4 * x + 1) * Rational(2 * N + 1) * Rational(2 * N + 3) *
             Rational(4 * x + 3) * factorial(2 * xc) * factorial(x + N + 1) *
             factorial(x + N + 1) /
             (Rational(3) * Rational(N + 1) * factorial(2 * x + 2 * N + 3) *
              factorial(xc) * factorial(xc));
    };
    auto d2_sq = [&](long x) {
      const long xc = N - x;
      return factorial(xc) * factorial(xc) /
             (pow4(2 * x) * factorial(x + N + 1) * factorial(x + N + 1)) *
             Rational(N + 1) * Rational(2 * N + 1) * Rational(2 * N + 3) *
             factorial(2 * x + 2 * N + 2) /
             (Rational(6) * Rational(4 * x + 1) * factorial(2 * xc + 1));
    };
    if (swap_roles) {
      // RR1: sqrt(rho1(q1))/d1(p1) R_{p1}(lambda(q1)); RR2: sqrt(rho2(p1))/d2(q1) R_{q1}(mu(p1))
      const ExactValue v1 =
          racah_value(rho1(q1), d1_sq(p1), hyp::racah_R(p1, q1, P), p1 + q2);
      const ExactValue v2 =
          racah_value(rho2(p1), d2_sq(q1), hyp::racah_R(q1, p1, Pmu), p1 + q2);
      return {v1, v2};
    }
    // (co): sqrt(rho1(p1))/d1(q1) R_{q1}(lambda(p1)); (58'): sqrt(rho2(q1))/d2(p1) R_{p1}(mu(q1))
    const ExactValue v1 =
        racah_value(rho1(p1), d1_sq(q1), hyp::racah_R(q1, p1, P), p1 + q2);
    const ExactValue v2 =
        racah_value(rho2(q1), d2_sq(p1), hyp::racah_R(p1, q1, Pmu), p1 + q2);
    return {v1, v2};
  }
  // all odd: alpha = N+2, beta = -delta = -(N+3/2), gamma = -(N+1), mu lattice
  const long q1 = (l1 - 1) / 2, q2 = (l2 - 1) / 2, p1 = (n1 - 1) / 2;
  const long N = q1 + q2;
  hyp::RacahParams P(Rational(N + 2), -(Rational(N) + Rational(3, 2)),
                     Rational(-(N + 1)), Rational(N) + Rational(3, 2), N);
  auto rho = [&](long x) {
    const long xc = N - x;
    return pow4(2 * x + 1) * Rational(2 * N + 3) * Rational(4 * x + 3) *
           factorial(2 * xc + 1) * factorial(x + N + 2) * factorial(x + N + 2) /
           (Rational(3) * Rational(N + 1) * Rational(N + 2) *
            factorial(2 * x + 2 * N + 4) * factorial(xc) * factorial(xc));
  };
  auto d_sq = [&](long x) {
    const long xc = N - x;
    return factorial(xc) * factorial(xc) /
           (pow4(2 * x + 1) * factorial(x + N + 2) * factorial(x + N + 2)) *
           Rational(N + 1) * Rational(N + 2) * Rational(2 * N + 3) *
           factorial(2 * x + 2 * N + 4) /
           (Rational(3) * Rational(4 * x + 3) * factorial(2 * xc + 1));
  };
  const ExactValue v1 = racah_value(rho(p1), d_sq(q1), hyp::racah_R(q1, p1, P), p1 + q2);
  const ExactValue v2 = racah_value(rho(q1), d_sq(p1), hyp::racah_R(p1, q1, P), p1 + q2);
  return {v1, v2};
}

void check_u_labels(int l1, int l2, int n1, int n2) {
  if (l1 < 0 || l2 < 0 || n1 < 0 || n2 < 0)
    throw domain_error("u_II_III: negative label");
  if (l1 + l2 != n1 + n2)
    throw domain_error("u_II_III: labels violate l1+l2 = n1+n2");
}

} // namespace

ExactValue w_I_II(int n, int m, int n1, Route route) {
  check_polar(n, m);
  if (n1 < 0 || n1 > n) throw domain_error("w_I_II: n1 out of range 0..n");
  switch (route) {
    case Route::Hyper3F2: return w_via_3f2(n, m, n1);
    case Route::ClebschGordan:
      return special_cg(n, m, n1).times_i_pow(w_phase(m, n1));
    case Route::Hahn: return w_via_hahn(n, m, n1);
    default:
      throw domain_error("w_I_II: route " + to_string(route) + " not admissible");
  }
}

ExactValue wtilde_II_I(int n, int m, int n1) {
  check_polar(n, m);
  if (n1 < 0 || n1 > n) throw domain_error("wtilde_II_I: n1 out of range 0..n");
  // (-i)^{n1} (-1)^{(m+|m|)/2}
  return special_cg(n, m, n1).times_i_pow(-n1 + m + std::abs(m));
}

ExactValue what_I_III(int n, int m, int l1, Route route) {
  // (-1)^{l1} (-i)^m W^{n,m}_{l1,l2}
  return w_I_II(n, m, l1, route).times_i_pow(2L * l1 - m);
}

ExactValue u_II_III(int l1, int l2, int n1, int n2, Route route) {
  check_u_labels(l1, l2, n1, n2);
  switch (route) {
    case Route::CGSum: return u_via_cgsum(l1, l2, n1, n2);
    case Route::Hyper4F3:
      if (parity_forbidden(l1, l2, n1, n2)) return ExactValue::zero();
      return u_via_4f3(l1, l2, n1, n2);
    case Route::Racah:
      if (parity_forbidden(l1, l2, n1, n2)) return ExactValue::zero();
      return u_via_racah(l1, l2, n1).first;
    default:
      throw domain_error("u_II_III: route " + to_string(route) + " not admissible");
  }
}

std::pair<ExactValue, ExactValue> u_racah_both_forms(int l1, int l2, int n1, int n2) {
  check_u_labels(l1, l2, n1, n2);
  if (parity_forbidden(l1, l2, n1, n2))
    return {ExactValue::zero(), ExactValue::zero()};
  return u_via_racah(l1, l2, n1);
}

ExactValue appendixA_J(int mu, const Rational& lambda, int n, int m) {
  if (mu < 0 || n < 0 || m < 0) throw domain_error("appendixA_J: negative parameter");
  if (lambda.sign() <= 0) throw domain_error("appendixA_J: lambda must be positive");
  if ((n + m) % 2 != 0) return ExactValue::zero();
  const Rational half(1, 2);
  Rational pre, series;
  if (n % 2 == 0) {
    const int q = n / 2, p = m / 2;
    pre = pochhammer(Rational(2) * lambda, 2 * q) / factorial(2 * q) *
          pochhammer(half, p) / factorial(p) * factorial(mu) * factorial(mu) /
          pochhammer(half, mu + p + 1);
    series = eval_pFq_regularized(
        {Rational(-q), Rational(q) + lambda, Rational(mu + 1), Rational(mu + 1)},
        {lambda + half, Rational(mu + p) + Rational(3, 2)}, Rational(mu - p + 1));
    return ExactValue::from_rational(pre * series).times_minus_one_pow(p);
  }
  const int q = (n - 1) / 2, p = (m - 1) / 2;
  pre = pochhammer(Rational(2) * lambda, 2 * q + 1) / factorial(2 * q + 1) *
        pochhammer(Rational(3, 2), p) / factorial(p) * factorial(mu) * factorial(mu) /
        pochhammer(Rational(3, 2), mu + p + 1);
  series = eval_pFq_regularized(
      {Rational(-q), Rational(q) + lambda + 1, Rational(mu + 1), Rational(mu + 1)},
      {lambda + half, Rational(mu + p) + Rational(5, 2)}, Rational(mu - p + 1));
  return ExactValue::from_rational(pre * series).times_minus_one_pow(p);
}

namespace {

ExactValue matrix_entry(Pair pair, Route route, const MultipletLabel& row,
                        const MultipletLabel& col) {
  switch (pair) {
    case Pair::I_II: return w_I_II(col.n, col.m, row.k1, route);
    case Pair::I_III: return what_I_III(col.n, col.m, row.k1, route);
    default: return u_II_III(row.k1, row.k2, col.k1, col.k2, route);
  }
}

} // namespace

CoefficientMatrix assemble_matrix(int n, Pair pair, Route route, int threads) {
  if (n < 0) throw domain_error("assemble_matrix: negative n");
  if (!route_admissible(pair, route))
    throw domain_error("assemble_matrix: route " + to_string(route) +
                       " not admissible for pair " + to_string(pair));
  CoefficientMatrix M;
  M.n = n;
  M.pair = pair;
  M.route = route;
  M.row_labels = enumerate_multiplet(n, LabelKind::cartesian);
  M.col_labels = enumerate_multiplet(
      n, pair == Pair::II_III ? LabelKind::cartesian : LabelKind::polar);
  const int d = n + 1;
  M.entries.assign(static_cast<std::size_t>(d) * d, ExactValue::zero());
  std::exception_ptr err;
  std::atomic<bool> failed{false};
  parallel_for(static_cast<std::size_t>(d) * d, threads, [&](std::size_t i) {
    if (failed.load(std::memory_order_relaxed)) return;
    try {
      M.entries[i] = matrix_entry(pair, route, M.row_labels[i / d], M.col_labels[i % d]);
    } catch (...) {
      if (!failed.exchange(true)) err = std::current_exception();
    }
  });
  if (err) std::rethrow_exception(err);

  // invariants: exact unit row norms, exact pairwise row orthogonality,
  // realness and the parity zero pattern for II-III
  for (int r = 0; r < d; ++r) {
    Rational norm = 0;
    for (int c = 0; c < d; ++c) norm += M.at(r, c).abs2();
    if (norm != Rational(1))
      throw integrity_error("assemble_matrix: row " + std::to_string(r) +
                            " has norm^2 = " + norm.str());
  }
  for (int r = 0; r < d; ++r) {
    for (int r2 = r + 1; r2 < d; ++r2) {
      ExactValue dot = ExactValue::zero();
      for (int c = 0; c < d; ++c) dot = dot + M.at(r, c) * M.at(r2, c).conj();
      if (!dot.is_zero())
        throw integrity_error("assemble_matrix: rows " + std::to_string(r) + "," +
                              std::to_string(r2) + " are not orthogonal");
    }
  }
  if (pair == Pair::II_III) {
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        const auto& lab_r = M.row_labels[r];
        const auto& lab_c = M.col_labels[c];
        const bool forbidden = parity_forbidden(lab_r.k1, lab_r.k2, lab_c.k1, lab_c.k2);
        if (forbidden && !M.at(r, c).is_zero())
          throw integrity_error("assemble_matrix: parity-forbidden entry (" +
                                std::to_string(r) + "," + std::to_string(c) +
                                ") is nonzero");
        if (!M.at(r, c).is_real())
          throw integrity_error("assemble_matrix: II-III entry (" + std::to_string(r) +
                                "," + std::to_string(c) + ") is not real");
      }
    }
  }
  return M;
}

} // namespace zernike::interbasis
