#pragma once

// Data of the original (q-)Racah family: sinusoidal coordinate, energies,
// potentials, polynomials, recurrence coefficients, ground-state weight,
// norms and the virtual-state objects obtained through the twist.

#include <string>
#include <vector>

#include "dmiop/params.hpp"
#include "dmiop/polynomial.hpp"
#include "dmiop/rational.hpp"
#include "dmiop/report.hpp"

namespace dmiop {

using GridVec = std::vector<Rational>;

namespace detail {

inline void require_grid(long x, const ParamSet& p, const char* what) {
  if (x < 0 || x > p.N)
    fail(ErrorCode::IndexOutOfRange, std::string(what) + ": index " + std::to_string(x) + " outside [0," +
                                         std::to_string(p.N) + "]");
}

/// True when the a-slot is the truncating value -N (R) or q^{-N} (qR).
inline bool a_truncates(const ParamSet& p) {
  return p.is_q() ? p.a == ipow(p.q, -p.N) : p.a == Rational(-p.N);
}

}  // namespace detail

/// eta(x) = x(x+d) (R) or (q^{-x}-1)(1-d q^x) (qR); any integer x.
inline Rational eta(long x, const ParamSet& p) {
  if (!p.is_q()) return Rational(Rational(x) * (x + p.d));
  return Rational((ipow(p.q, -x) - 1) * (1 - p.d * ipow(p.q, x)));
}

/// E_n = n(n+d~) (R) or (q^{-n}-1)(1-d~ q^n) (qR).
inline Rational energy(long n, const ParamSet& p) {
  const Rational dt = p.dtilde();
  if (!p.is_q()) return Rational(Rational(n) * (n + dt));
  return Rational((ipow(p.q, -n) - 1) * (1 - dt * ipow(p.q, n)));
}

enum class Potential { B, D, Bprime, Dprime };

/// B(x), D(x) and the primed variants B'(x) = B(x; t(lambda)), D'(x) = D(x; t(lambda)).
inline Rational potential(long x, const ParamSet& p, Potential which) {
  detail::require_grid(x, p, "potential");
  const Rational& a = p.a;
  const Rational& b = p.b;
  const Rational& c = p.c;
  const Rational& d = p.d;
  const bool lower = which == Potential::D || which == Potential::Dprime;
  if (lower && x == 0) return Rational(0);
  if (!p.is_q()) {
    const Rational X(x);
    switch (which) {
      case Potential::B:
        return -checked_div((X + a) * (X + b) * (X + c) * (X + d), (2 * X + d) * (2 * X + 1 + d), "B(x) denominator");
      case Potential::D:
        return -checked_div((X + d - a) * (X + d - b) * (X + d - c) * X, (2 * X - 1 + d) * (2 * X + d),
                            "D(x) denominator");
      case Potential::Bprime:
        return -checked_div((X + d - a + 1) * (X + d - b + 1) * (X + c) * (X + d), (2 * X + d) * (2 * X + 1 + d),
                            "B'(x) denominator");
      case Potential::Dprime:
        return -checked_div((X + a - 1) * (X + b - 1) * (X + d - c) * X, (2 * X - 1 + d) * (2 * X + d),
                            "D'(x) denominator");
    }
  }
  const Rational& q = p.q;
  const Rational qx = ipow(q, x);
  const Rational q2x = ipow(q, 2 * x);
  switch (which) {
    case Potential::B:
      return -checked_div((1 - a * qx) * (1 - b * qx) * (1 - c * qx) * (1 - d * qx),
                          (1 - d * q2x) * (1 - d * q2x * q), "B(x) denominator");
    case Potential::D:
      return -p.dtilde() * checked_div((1 - d * qx / a) * (1 - d * qx / b) * (1 - d * qx / c) * (1 - qx),
                                       (1 - d * q2x / q) * (1 - d * q2x), "D(x) denominator");
    case Potential::Bprime:
      return -checked_div((1 - d * qx * q / a) * (1 - d * qx * q / b) * (1 - c * qx) * (1 - d * qx),
                          (1 - d * q2x) * (1 - d * q2x * q), "B'(x) denominator");
    case Potential::Dprime:
      return Rational(-(c * d * q / (a * b))) *
             checked_div((1 - a * qx / q) * (1 - b * qx / q) * (1 - d * qx / c) * (1 - qx),
                         (1 - d * q2x / q) * (1 - d * q2x), "D'(x) denominator");
  }
  return Rational(0);
}

/// Terminating 4F3 / 4phi3 value P^check_n(x), accumulated through the
/// exact term ratio.  x may be any integer (off-grid values are needed by
/// the Casoratian constructions).
inline Rational racah_value(long n, long x, const ParamSet& p) {
  if (n < 0) fail(ErrorCode::IndexOutOfRange, "racah_value: negative degree");
  if (n > p.N && detail::a_truncates(p)) fail(ErrorCode::IndexOutOfRange, "racah_value: degree exceeds N");
  const Rational dt = p.dtilde();
  Rational term = 1;
  Rational sum = 1;
  if (!p.is_q()) {
    const Rational X(x);
    for (long k = 0; k < n; ++k) {
      const Rational num = (Rational(k - n)) * (k + n + dt) * (Rational(k) - X) * (k + X + p.d);
      if (num == 0) break;
      term *= checked_div(num, (k + p.a) * (k + p.b) * (k + p.c) * Rational(k + 1), "4F3 term ratio");
      sum += term;
    }
    return sum;
  }
  const Rational& q = p.q;
  const Rational qmn = ipow(q, -n);
  const Rational dtqn = dt * ipow(q, n);
  const Rational qmx = ipow(q, -x);
  const Rational dqx = p.d * ipow(q, x);
  Rational qk = 1;
  for (long k = 0; k < n; ++k) {
    const Rational num = (1 - qmn * qk) * (1 - dtqn * qk) * (1 - qmx * qk) * (1 - dqx * qk);
    if (num == 0) break;
    const Rational den = (1 - p.a * qk) * (1 - p.b * qk) * (1 - p.c * qk) * (1 - qk * q);
    term *= checked_div(Rational(num * q), den, "4phi3 term ratio");
    sum += term;
    qk *= q;
  }
  return sum;
}

struct RecCoeffs {
  Rational A, B, C;
};

/// Three-term recurrence coefficients; B_n = -A_n - C_n.
inline RecCoeffs rec_coeffs(long n, const ParamSet& p) {
  detail::require_grid(n, p, "rec_coeffs");
  const Rational dt = p.dtilde();
  RecCoeffs r;
  if (!p.is_q()) {
    const Rational n_(n);
    r.A = checked_div((n_ + p.a) * (n_ + p.b) * (n_ + p.c) * (n_ + dt), (2 * n_ + dt) * (2 * n_ + 1 + dt), "A_n");
    r.C = n == 0 ? Rational(0)
                 : checked_div((n_ + dt - p.a) * (n_ + dt - p.b) * (n_ + dt - p.c) * n_,
                               (2 * n_ - 1 + dt) * (2 * n_ + dt), "C_n");
  } else {
    const Rational qn = p.qpow(n);
    const Rational q2n = p.qpow(2 * n);
    r.A = checked_div((1 - p.a * qn) * (1 - p.b * qn) * (1 - p.c * qn) * (1 - dt * qn),
                      (1 - dt * q2n) * (1 - dt * q2n * p.q), "A_n");
    r.C = n == 0 ? Rational(0)
                 : Rational(p.d * checked_div((1 - dt * qn / p.a) * (1 - dt * qn / p.b) * (1 - dt * qn / p.c) * (1 - qn),
                                              (1 - dt * q2n / p.q) * (1 - dt * q2n), "C_n"));
  }
  r.B = -r.A - r.C;
  return r;
}

/// P_n(eta) built from the three-term recurrence with P_0 = 1, P_{-1} = 0.
inline PolyEta racah_poly(long n, const ParamSet& p) {
  detail::require_grid(n, p, "racah_poly");
  PolyEta prev;  // P_{-1}
  PolyEta cur = PolyEta::constant(1);
  const PolyEta eta_var = PolyEta::monomial(1);
  for (long m = 0; m < n; ++m) {
    const RecCoeffs rc = rec_coeffs(m, p);
    if (rc.A == 0) fail(ErrorCode::ZeroDenominator, "A_m vanishes inside the recurrence");
    PolyEta next = (eta_var - PolyEta::constant(rc.B)) * cur - prev * rc.C;
    next *= Rational(1 / rc.A);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Leading coefficient c_n of P_n(eta).
inline Rational leading_cn(long n, const ParamSet& p) {
  const Rational dt = p.dtilde();
  if (!p.is_q())
    return checked_div(pochhammer(dt + n, n), pochhammer(p.a, n) * pochhammer(p.b, n) * pochhammer(p.c, n), "c_n");
  return checked_div(qpochhammer(dt * p.qpow(n), p.q, n),
                     qpochhammer(p.a, p.q, n) * qpochhammer(p.b, p.q, n) * qpochhammer(p.c, p.q, n), "c_n");
}

/// phi_0(x)^2 on the grid; must be positive.
inline Rational phi0_sq(long x, const ParamSet& p) {
  detail::require_grid(x, p, "phi0_sq");
  const Rational &a = p.a, &b = p.b, &c = p.c, &d = p.d;
  Rational v;
  if (!p.is_q()) {
    v = checked_div(pochhammer(a, x) * pochhammer(b, x) * pochhammer(c, x) * pochhammer(d, x),
                    pochhammer(d - a + 1, x) * pochhammer(d - b + 1, x) * pochhammer(d - c + 1, x) * pochhammer(1, x),
                    "phi0^2") *
        checked_div(2 * Rational(x) + d, d, "phi0^2");
  } else {
    const Rational& q = p.q;
    const Rational num = qpochhammer(a, q, x) * qpochhammer(b, q, x) * qpochhammer(c, q, x) * qpochhammer(d, q, x);
    const Rational den = qpochhammer(d * q / a, q, x) * qpochhammer(d * q / b, q, x) * qpochhammer(d * q / c, q, x) *
                         qpochhammer(q, q, x) * ipow(p.dtilde(), x);
    v = checked_div(num, den, "phi0^2") * checked_div(1 - d * ipow(q, 2 * x), 1 - d, "phi0^2");
  }
  if (v <= 0) fail(ErrorCode::NonPositiveWeight, "phi0(" + std::to_string(x) + ")^2 = " + to_string(v));
  return v;
}

/// Normalisation constant d_n^2 of the original family; must be positive.
inline Rational dn_sq(long n, const ParamSet& p) {
  detail::require_grid(n, p, "dn_sq");
  const Rational &a = p.a, &b = p.b, &c = p.c, &d = p.d;
  const Rational dt = p.dtilde();
  const long N = p.N;
  const int parity = N % 2 == 0 ? 1 : -1;
  Rational v;
  if (!p.is_q()) {
    const Rational head =
        checked_div(pochhammer(a, n) * pochhammer(b, n) * pochhammer(c, n) * pochhammer(dt, n),
                    pochhammer(dt - a + 1, n) * pochhammer(dt - b + 1, n) * pochhammer(dt - c + 1, n) * pochhammer(1, n),
                    "d_n^2") *
        checked_div(2 * Rational(n) + dt, dt, "d_n^2");
    const Rational tail =
        checked_div(parity * pochhammer(d - a + 1, N) * pochhammer(d - b + 1, N) * pochhammer(d - c + 1, N),
                    pochhammer(dt + 1, N) * pochhammer(d + 1, 2 * N), "d_n^2");
    v = head * tail;
  } else {
    const Rational& q = p.q;
    const Rational head =
        checked_div(qpochhammer(a, q, n) * qpochhammer(b, q, n) * qpochhammer(c, q, n) * qpochhammer(dt, q, n),
                    qpochhammer(dt * q / a, q, n) * qpochhammer(dt * q / b, q, n) * qpochhammer(dt * q / c, q, n) *
                        qpochhammer(q, q, n) * ipow(d, n),
                    "d_n^2") *
        checked_div(1 - dt * ipow(q, 2 * n), 1 - dt, "d_n^2");
    const Rational tail = checked_div(Rational(parity * qpochhammer(d * q / a, q, N) * qpochhammer(d * q / b, q, N) *
                                               qpochhammer(d * q / c, q, N) * ipow(dt, N) * ipow(q, N * (N + 1) / 2)),
                                      qpochhammer(dt * q, q, N) * qpochhammer(d * q, q, 2 * N), "d_n^2");
    v = head * tail;
  }
  if (v <= 0) fail(ErrorCode::NonPositiveWeight, "d_" + std::to_string(n) + "^2 = " + to_string(v));
  return v;
}

/// Virtual-state polynomial value xi_v(x) = P_v(x; t(lambda)).
inline Rational xi_v(long v, long x, const ParamSet& p) {
  if (v < 1) fail(ErrorCode::IndexOutOfRange, "virtual state index must be >= 1");
  return racah_value(v, x, twist(p));
}

/// alpha(lambda): 1 (R) or a b d^{-1} q^{-1} (qR).
inline Rational alpha_const(const ParamSet& p) {
  if (!p.is_q()) return Rational(1);
  return Rational(p.a * p.b / (p.d * p.q));
}

/// Virtual state energy E~_v.
inline Rational etilde_v(long v, const ParamSet& p) {
  const Rational dt = p.dtilde();
  if (!p.is_q()) return Rational(-(p.c + v) * (dt - p.c - v));
  return Rational(-(1 - p.c * p.qpow(v)) * (1 - dt * p.qpow(-v) / p.c));
}

/// Leading coefficient c~_v of xi_v(eta).
inline Rational leading_ctilde(long v, const ParamSet& p) {
  const Rational &a = p.a, &b = p.b, &c = p.c, &d = p.d;
  if (!p.is_q())
    return checked_div(pochhammer(c + d - a - b + v + 1, v),
                       pochhammer(d - a + 1, v) * pochhammer(d - b + 1, v) * pochhammer(c, v), "c~_v");
  const Rational& q = p.q;
  return checked_div(qpochhammer(c * d * p.qpow(v + 1) / (a * b), q, v),
                     qpochhammer(d * q / a, q, v) * qpochhammer(d * q / b, q, v) * qpochhammer(c, q, v), "c~_v");
}

/// Base-family orthogonality: sum_x phi0^2 d_n^2 P_n P_m = delta_{nm}.
inline CheckReport verify_base_ortho(const ParamSet& p) {
  CheckReport rep{"base orthogonality"};
  std::vector<GridVec> vals(p.N + 1, GridVec(p.N + 1));
  GridVec w(p.N + 1);
  for (long x = 0; x <= p.N; ++x) w[x] = phi0_sq(x, p);
  for (long n = 0; n <= p.N; ++n)
    for (long x = 0; x <= p.N; ++x) vals[n][x] = racah_value(n, x, p);
  for (long n = 0; n <= p.N; ++n) {
    const Rational dn = dn_sq(n, p);
    for (long m = n; m <= p.N; ++m) {
      Rational sum = 0;
      for (long x = 0; x <= p.N; ++x) sum += w[x] * vals[n][x] * vals[m][x];
      rep.expect_equal(at(n, m), Rational(dn * sum), Rational(n == m ? 1 : 0));
    }
  }
  return rep;
}

/// P_n(x; a,b,c,d) = P_x(n; a,b,c,d~) on the whole grid.
inline CheckReport verify_base_duality(const ParamSet& p) {
  CheckReport rep{"base duality"};
  ParamSet dual = p;
  dual.d = p.dtilde();
  for (long n = 0; n <= p.N; ++n)
    for (long x = 0; x <= p.N; ++x) rep.expect_equal(at(n, x), racah_value(n, x, p), racah_value(x, n, dual));
  return rep;
}

/// Sum route against recurrence route, leading coefficients and the
/// recurrence as a polynomial identity.
inline CheckReport verify_base_routes(const ParamSet& p) {
  CheckReport rep{"base routes"};
  std::vector<PolyEta> polys;
  for (long n = 0; n <= p.N; ++n) polys.push_back(racah_poly(n, p));
  for (long n = 0; n <= p.N; ++n) {
    rep.expect_true("deg" + at(n), polys[n].degree() == std::optional<std::size_t>(n));
    rep.expect_equal("lead" + at(n), polys[n].leading(), leading_cn(n, p));
    for (long x = 0; x <= p.N; ++x)
      rep.expect_equal("value" + at(n, x), polys[n](eta(x, p)), racah_value(n, x, p));
  }
  const PolyEta var = PolyEta::monomial(1);
  for (long n = 0; n + 1 <= p.N; ++n) {
    const RecCoeffs rc = rec_coeffs(n, p);
    PolyEta rhs = polys[n + 1] * rc.A + polys[n] * rc.B;
    if (n > 0) rhs += polys[n - 1] * rc.C;
    const PolyEta diff = var * polys[n] - rhs;
    rep.expect_true("recurrence" + at(n), diff.is_zero());
  }
  return rep;
}

/// Primed potentials against the twisted set, and the sign pattern
/// B > 0 (x < N), D > 0 (x > 0), B(N) = D(0) = 0.
inline CheckReport verify_potentials(const ParamSet& p) {
  CheckReport rep{"potentials"};
  const ParamSet t = twist(p);
  for (long x = 0; x <= p.N; ++x) {
    rep.expect_equal("B'" + at(x), potential(x, p, Potential::Bprime), potential(x, t, Potential::B));
    rep.expect_equal("D'" + at(x), potential(x, p, Potential::Dprime), potential(x, t, Potential::D));
    const Rational B = potential(x, p, Potential::B);
    const Rational D = potential(x, p, Potential::D);
    rep.expect_true("B sign" + at(x), x < p.N ? B > 0 : B == 0);
    rep.expect_true("D sign" + at(x), x > 0 ? D > 0 : D == 0);
  }
  return rep;
}

}  // namespace dmiop
