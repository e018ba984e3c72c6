#pragma once

// Casoratian construction of the denominator polynomial and the
// multi-indexed polynomials, their normalisation constants and weights,
// and exact checks of orthogonality and the difference equation.

#include <functional>
#include <string>
#include <vector>

#include "dmiop/base_family.hpp"
#include "dmiop/matrix.hpp"
#include "dmiop/report.hpp"

namespace dmiop {

/// (eta(x+1) - eta(x)) / eta(1).
inline Rational varphi(long x, const ParamSet& p) {
  return checked_div(eta(x + 1, p) - eta(x, p), eta(1, p), "varphi");
}

inline Rational varphi_m(long x, long M, const ParamSet& p) {
  if (M < 0) fail(ErrorCode::IndexOutOfRange, "varphi_m: negative M");
  Rational r = 1;
  for (long j = 1; j <= M; ++j)
    for (long k = j + 1; k <= M; ++k) r *= varphi(x + j - 1, shift(p, k - j - 1, ShiftKind::delta));
  return r;
}

using GridFn = std::function<Rational(long)>;

/// det(f_k(x+j-1)); the empty set gives 1.
inline Rational casoratian(const std::vector<GridFn>& fs, long x) {
  const std::size_t n = fs.size();
  ExactMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(j, k) = fs[k](x + static_cast<long>(j));
  return exact_det(m);
}

/// Border factor r_j of the bordered Casoratian, 1 <= j <= M+1, written in
/// terms of the base point x (the row argument is x+j-1).
inline Rational rj_factor(long j, long x, long M, const ParamSet& p) {
  if (j < 1 || j > M + 1) fail(ErrorCode::IndexOutOfRange, "rj_factor: j outside [1, M+1]");
  const Rational &a = p.a, &b = p.b, &d = p.d;
  if (!p.is_q()) {
    const Rational X(x);
    return checked_div(pochhammer(X + a, j - 1) * pochhammer(X + b, j - 1) * pochhammer(X + d - a + j, M + 1 - j) *
                           pochhammer(X + d - b + j, M + 1 - j),
                       pochhammer(d - a + 1, M) * pochhammer(d - b + 1, M), "r_j");
  }
  const Rational& q = p.q;
  const Rational qx = ipow(q, x);
  const Rational dqxj = d * qx * ipow(q, j);
  const Rational num = qpochhammer(a * qx, q, j - 1) * qpochhammer(b * qx, q, j - 1) *
                       qpochhammer(dqxj / a, q, M + 1 - j) * qpochhammer(dqxj / b, q, M + 1 - j);
  const Rational den = ipow(a * b / (d * q), j - 1) * ipow(q, M * x) * qpochhammer(d * q / a, q, M) *
                       qpochhammer(d * q / b, q, M);
  return checked_div(num, den, "r_j");
}

namespace detail {

inline Rational virtual_denominator(long j, const ParamSet& p) {
  const Rational v = alpha_const(p) * potential(j - 1, p, Potential::Bprime);
  if (v == 0) fail(ErrorCode::InadmissibleParams, "alpha B'(" + std::to_string(j - 1) + ") vanishes");
  return v;
}

}  // namespace detail

/// C_D(lambda).
inline Rational const_CD(const ParamSet& p, const IndexSet& D) {
  const long M = D.M();
  Rational r = checked_div(1, varphi_m(0, M, p), "C_D");
  for (long j = 1; j <= M; ++j)
    for (long k = j + 1; k <= M; ++k)
      r *= (etilde_v(D[j - 1], p) - etilde_v(D[k - 1], p)) / detail::virtual_denominator(j, p);
  if (r == 0) fail(ErrorCode::InadmissibleParams, "C_D vanishes");
  return r;
}

/// d~_{D,n}^2.
inline Rational dtilde_sq(long n, const ParamSet& p, const IndexSet& D) {
  const long M = D.M();
  Rational r = checked_div(varphi_m(0, M, p), varphi_m(0, M + 1, p), "d~_{D,n}^2");
  const Rational En = energy(n, p);
  for (long j = 1; j <= M; ++j) r *= (En - etilde_v(D[j - 1], p)) / detail::virtual_denominator(j, p);
  return r;
}

inline Rational const_CDn(long n, const ParamSet& p, const IndexSet& D) {
  const Rational r = (D.M() % 2 == 0 ? 1 : -1) * const_CD(p, D) * dtilde_sq(n, p, D);
  if (r == 0) fail(ErrorCode::InadmissibleParams, "C_{D,n} vanishes");
  return r;
}

/// Xi^check_D(x) from the Casoratian of virtual-state polynomials (any x).
inline Rational xi_check(long x, const ParamSet& p, const IndexSet& D) {
  const long M = D.M();
  if (M == 0) return Rational(1);
  ExactMatrix m(M, M);
  for (long j = 0; j < M; ++j)
    for (long k = 0; k < M; ++k) m(j, k) = xi_v(D[k], x + j, p);
  return checked_div(exact_det(m), const_CD(p, D) * varphi_m(x, M, p), "Xi_D");
}

/// P^check_{D,n}(x) from the bordered Casoratian (any x).
inline Rational pdn_check(long n, long x, const ParamSet& p, const IndexSet& D) {
  const long M = D.M();
  if (M == 0) return racah_value(n, x, p);
  ExactMatrix m(M + 1, M + 1);
  for (long j = 0; j <= M; ++j) {
    for (long k = 0; k < M; ++k) m(j, k) = xi_v(D[k], x + j, p);
    m(j, M) = rj_factor(j + 1, x, M, p) * racah_value(n, x + j, p);
  }
  return checked_div(exact_det(m), const_CDn(n, p, D) * varphi_m(x, M + 1, p), "P_{D,n}");
}

/// Leading coefficient c^Xi_D.
inline Rational leading_cxi(const ParamSet& p, const IndexSet& D) {
  const long M = D.M();
  const Rational &a = p.a, &b = p.b, &c = p.c, &d = p.d;
  Rational r = 1;
  for (long j = 1; j <= M; ++j) r *= leading_ctilde(D[j - 1], p);
  Rational num = 1, den = 1;
  if (!p.is_q()) {
    for (long j = 1; j <= M; ++j)
      num *= pochhammer(d - a + 1, j - 1) * pochhammer(d - b + 1, j - 1) * pochhammer(c, j - 1);
    for (long j = 1; j <= M; ++j)
      for (long k = j + 1; k <= M; ++k) den *= c + d - a - b + D[j - 1] + D[k - 1] + 1;
  } else {
    const Rational& q = p.q;
    for (long j = 1; j <= M; ++j)
      num *= qpochhammer(d * q / a, q, j - 1) * qpochhammer(d * q / b, q, j - 1) * qpochhammer(c, q, j - 1);
    for (long j = 1; j <= M; ++j)
      for (long k = j + 1; k <= M; ++k) den *= 1 - c * d * p.qpow(D[j - 1] + D[k - 1] + 1) / (a * b);
  }
  return r * checked_div(num, den, "c^Xi_D");
}

/// Leading coefficient c^P_{D,n}.
inline Rational leading_cpdn(long n, const ParamSet& p, const IndexSet& D) {
  Rational r = leading_cxi(p, D) * leading_cn(n, p);
  for (long j = 1; j <= D.M(); ++j) {
    if (!p.is_q())
      r *= checked_div(p.c + j - 1, p.c + D[j - 1] + n, "c^P_{D,n}");
    else
      r *= checked_div(1 - p.c * p.qpow(j - 1), 1 - p.c * p.qpow(D[j - 1] + n), "c^P_{D,n}");
  }
  return r;
}

struct MISystem {
  ParamSet params;
  IndexSet D;
  long M = 0;
  long ell = 0;
  PolyEta xi_poly;                  // Xi_D in eta(x; lambda+(M-1)delta)
  std::vector<PolyEta> pdn_polys;   // P_{D,n} in eta(x; lambda+M delta), n = 0..N
  std::vector<GridVec> pdn_grid;    // [n][x], x = 0..N
  GridVec xi_grid;                  // Xi(x), x = 0..N+1
  GridVec xi_shift_grid;            // Xi(x; lambda+delta), x = 0..N+1
  std::vector<Rational> dDn_sq;     // d_{D,n}^2
  GridVec weights;                  // psi_D(x)^2 / Xi(1)
  GridVec BD, DD;                   // deformed potentials, x = 0..N

  long N() const { return params.N; }
  ParamSet xi_var_params() const { return shift(params, M - 1, ShiftKind::delta); }
  ParamSet pdn_var_params() const { return shift(params, M, ShiftKind::delta); }
  ParamSet weight_params() const { return shift(params, M, ShiftKind::tilde); }
  const Rational& xi_shift(long x) const { return xi_shift_grid.at(static_cast<std::size_t>(x)); }
};

namespace detail {

inline PolyEta interpolate_checked(const std::vector<Rational>& nodes, const std::vector<Rational>& values,
                                   std::size_t degree, const std::string& what) {
  PolyEta poly = interpolate(nodes, values);
  if (poly.degree() != std::optional<std::size_t>(degree))
    fail(ErrorCode::DegreeMismatch, what + ": interpolant degree " +
                                        (poly.degree() ? std::to_string(*poly.degree()) : std::string("none")) +
                                        ", expected " + std::to_string(degree));
  return poly;
}

}  // namespace detail

inline MISystem build_mi_system(const ParamSet& p, const IndexSet& D) {
  const auto violations = validate(p, D);
  if (!violations.empty())
    fail(ErrorCode::InadmissibleParams, describe(p) + " D=" + D.to_string() + " violates " + violations.front().chain +
                                            " (" + violations.front().detail + ")");
  MISystem s;
  s.params = p;
  s.D = D;
  s.M = D.M();
  s.ell = ell(D);
  const long N = p.N;
  const ParamSet xi_var = s.xi_var_params();
  const ParamSet pdn_var = s.pdn_var_params();

  for (long x = 0; x <= N + 1; ++x) s.xi_grid.push_back(xi_check(x, p, D));
  {
    std::vector<Rational> nodes, values;
    for (long x = 0; x <= s.ell + 1; ++x) {
      nodes.push_back(eta(x, xi_var));
      values.push_back(x <= N + 1 ? s.xi_grid[x] : xi_check(x, p, D));
    }
    s.xi_poly = detail::interpolate_checked(nodes, values, s.ell, "Xi_D");
    for (long x = 0; x <= N + 1; ++x)
      if (s.xi_poly(eta(x, xi_var)) != s.xi_grid[x])
        fail(ErrorCode::DegreeMismatch, "Xi_D interpolant misses grid point " + std::to_string(x));
  }
  if (s.xi_grid[0] != 1) fail(ErrorCode::CrossCheckMismatch, "Xi_D(0) = " + to_string(s.xi_grid[0]));
  for (long x = 0; x <= N; ++x)
    if (s.xi_grid[x] <= 0) fail(ErrorCode::NonPositiveWeight, "Xi_D(" + std::to_string(x) + ") not positive");

  const ParamSet p1 = shift(p, 1, ShiftKind::delta);
  for (long x = 0; x <= N + 1; ++x) s.xi_shift_grid.push_back(xi_check(x, p1, D));

  for (long n = 0; n <= N; ++n) {
    GridVec grid;
    for (long x = 0; x <= N; ++x) grid.push_back(pdn_check(n, x, p, D));
    std::vector<Rational> nodes, values;
    const long deg = s.ell + n;
    for (long x = 0; x <= deg + 1; ++x) {
      nodes.push_back(eta(x, pdn_var));
      values.push_back(x <= N ? grid[x] : pdn_check(n, x, p, D));
    }
    PolyEta poly = detail::interpolate_checked(nodes, values, static_cast<std::size_t>(deg),
                                               "P_{D," + std::to_string(n) + "}");
    for (long x = 0; x <= N; ++x)
      if (poly(eta(x, pdn_var)) != grid[x])
        fail(ErrorCode::DegreeMismatch, "P_{D,n} interpolant misses grid point " + std::to_string(x));
    if (grid[0] != 1) fail(ErrorCode::CrossCheckMismatch, "P_{D," + std::to_string(n) + "}(0) != 1");
    s.pdn_polys.push_back(std::move(poly));
    s.pdn_grid.push_back(std::move(grid));
  }

  for (long n = 0; n <= N; ++n) {
    const Rational v = dn_sq(n, p) * dtilde_sq(n, p, D);
    if (v <= 0) fail(ErrorCode::NonPositiveWeight, "d_{D," + std::to_string(n) + "}^2 not positive");
    s.dDn_sq.push_back(v);
  }

  const ParamSet wp = s.weight_params();
  for (long x = 0; x <= N; ++x) {
    const Rational w = checked_div(phi0_sq(x, wp), s.xi_grid[x] * s.xi_grid[x + 1], "weight");
    if (w <= 0) fail(ErrorCode::NonPositiveWeight, "weight at x=" + std::to_string(x));
    s.weights.push_back(w);
    const Rational B = potential(x, wp, Potential::B);
    const Rational Dv = potential(x, wp, Potential::D);
    s.BD.push_back(B == 0 ? Rational(0)
                          : checked_div(B * s.xi_grid[x] * s.xi_shift(x + 1), s.xi_grid[x + 1] * s.xi_shift(x), "B_D"));
    s.DD.push_back(Dv == 0 ? Rational(0)
                           : checked_div(Dv * s.xi_grid[x + 1] * s.xi_shift(x - 1), s.xi_grid[x] * s.xi_shift(x), "D_D"));
  }
  return s;
}

inline CheckReport verify_ortho(const MISystem& s) {
  CheckReport rep{"orthogonality"};
  const long N = s.N();
  for (long n = 0; n <= N; ++n)
    for (long m = 0; m <= N; ++m) {
      Rational sum = 0;
      for (long x = 0; x <= N; ++x) sum += s.weights[x] * s.pdn_grid[n][x] * s.pdn_grid[m][x];
      rep.expect_equal(at(n, m), sum, n == m ? Rational(1 / s.dDn_sq[n]) : Rational(0));
    }
  return rep;
}

/// Similarity-transformed Hamiltonian acting on P_{D,n} equals E_n P_{D,n}.
inline CheckReport verify_difference_eq(const MISystem& s) {
  CheckReport rep{"difference equation"};
  const long N = s.N();
  const ParamSet wp = s.weight_params();
  rep.expect_zero("D_D(0)", s.DD[0]);
  rep.expect_zero("B_D(N)", s.BD[N]);
  for (long n = 0; n <= N; ++n) {
    const Rational En = energy(n, s.params);
    const auto& P = s.pdn_grid[n];
    for (long x = 0; x <= N; ++x) {
      Rational lhs = (s.BD[x] + s.DD[x]) * P[x];
      const Rational B = potential(x, wp, Potential::B);
      const Rational Dv = potential(x, wp, Potential::D);
      if (B != 0) lhs -= B * s.xi_grid[x] / s.xi_grid[x + 1] * P.at(x + 1);
      if (Dv != 0) lhs -= Dv * s.xi_grid[x + 1] / s.xi_grid[x] * P.at(x - 1);
      rep.expect_equal(at(n, x), lhs, Rational(En * P[x]));
    }
  }
  return rep;
}

inline long sign_changes(std::span<const Rational> seq) {
  long changes = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == 0) fail(ErrorCode::ZeroEntry, "zero entry at index " + std::to_string(i));
    if (i > 0 && sgn(seq[i]) != sgn(seq[i - 1])) ++changes;
  }
  return changes;
}

/// Structural invariants: degrees, normalisation, the P_{D,0} = Xi_D(lambda+delta)
/// identity, sign changes, leading coefficients and the closed d-ratio.
inline CheckReport verify_structure(const MISystem& s) {
  CheckReport rep{"structure"};
  const long N = s.N();
  const ParamSet& p = s.params;
  rep.expect_true("deg Xi", s.xi_poly.degree() == std::optional<std::size_t>(s.ell));
  rep.expect_equal("Xi(0)", s.xi_grid[0], 1);
  rep.expect_equal("lead Xi", s.xi_poly.leading(), leading_cxi(p, s.D));
  for (long x = 0; x <= N; ++x) rep.expect_true("Xi>0" + at(x), s.xi_grid[x] > 0);
  for (long x = 0; x <= N; ++x) rep.expect_equal("P0=Xi(l+delta)" + at(x), s.pdn_grid[0][x], s.xi_shift(x));
  const Rational d0 = s.dDn_sq[0];
  for (long n = 0; n <= N; ++n) {
    rep.expect_true("deg P" + at(n), s.pdn_polys[n].degree() == std::optional<std::size_t>(s.ell + n));
    rep.expect_equal("P(0)" + at(n), s.pdn_grid[n][0], 1);
    rep.expect_equal("lead P" + at(n), s.pdn_polys[n].leading(), leading_cpdn(n, p, s.D));
    rep.expect_true("sign changes" + at(n), sign_changes(s.pdn_grid[n]) == n);
    Rational ratio = 1;
    for (long m = 0; m < n; ++m) ratio *= rec_coeffs(m, p).A / rec_coeffs(m + 1, p).C;
    for (long j = 0; j < s.M; ++j) {
      const Rational Et = etilde_v(s.D[j], p);
      ratio *= (energy(n, p) - Et) / (-Et);
    }
    rep.expect_equal("d ratio" + at(n), s.dDn_sq[n] / d0, ratio);
  }
  return rep;
}

}  // namespace dmiop
