#pragma once

// Dual polynomials Q_{D,x}(n) = P_{D,n}(x)/P_{D,0}(x), their orthogonality,
// and the (1+2L)-diagonal Hamiltonians built from r_{n,k}.

#include <cstdlib>
#include <string>
#include <vector>

#include "dmiop/matrix.hpp"
#include "dmiop/recurrence.hpp"

namespace dmiop {

struct DualTable {
  std::vector<GridVec> q_vals;  // [x][n] = Q_{D,x}(n)
  GridVec A, B, C;              // dual three-term coefficients, x = 0..N

  long N() const { return static_cast<long>(q_vals.size()) - 1; }
};

/// Ratio definition, re-derived from the three-term recurrence in x
/// E_n Q_x(n) = A_x Q_{x+1}(n) + B_x Q_x(n) + C_x Q_{x-1}(n).
inline DualTable dual_values(const MISystem& s) {
  const long N = s.N();
  DualTable t;
  t.q_vals.assign(N + 1, GridVec(N + 1));
  for (long x = 0; x <= N; ++x)
    for (long n = 0; n <= N; ++n)
      t.q_vals[x][n] = checked_div(s.pdn_grid[n][x], s.pdn_grid[0][x], "P_{D,0}(x)");
  for (long x = 0; x <= N; ++x) {
    t.A.push_back(Rational(-s.BD[x]));
    t.C.push_back(Rational(-s.DD[x]));
    t.B.push_back(Rational(s.BD[x] + s.DD[x]));
  }
  for (long n = 0; n <= N; ++n) {
    const Rational En = energy(n, s.params);
    Rational prev = 0, cur = 1;
    for (long x = 0; x <= N; ++x) {
      if (cur != t.q_vals[x][n])
        fail(ErrorCode::CrossCheckMismatch, "dual recurrence disagrees with the ratio at" + at(x, n));
      if (x == N) break;
      const Rational next = checked_div((En - t.B[x]) * cur - t.C[x] * prev, t.A[x], "A^dual_x");
      prev = cur;
      cur = next;
    }
  }
  return t;
}

/// Normalisation rows and columns, sign changes, and boundary coefficients.
inline CheckReport verify_dual_structure(const DualTable& t) {
  CheckReport rep{"dual structure"};
  const long N = t.N();
  for (long i = 0; i <= N; ++i) {
    rep.expect_equal("Q_0" + at(i), t.q_vals[0][i], Rational(1));
    rep.expect_equal("Q" + at(i) + "(0)", t.q_vals[i][0], Rational(1));
    rep.expect_true("sign changes of Q" + at(i), sign_changes(t.q_vals[i]) == i);
  }
  rep.expect_zero("C^dual_0", t.C[0]);
  rep.expect_zero("A^dual_N", t.A[N]);
  for (long x = 0; x < N; ++x) rep.expect_true("A^dual" + at(x) + " < 0", t.A[x] < 0);
  for (long x = 1; x <= N; ++x) rep.expect_true("C^dual" + at(x) + " < 0", t.C[x] < 0);
  return rep;
}

/// phi_{D,0}(x)^2 = Xi(1) psi_D(x)^2 P_{D,0}(x)^2.
inline Rational phi_dual0_sq(const MISystem& s, long x) {
  return s.xi_grid[1] * s.weights[x] * s.pdn_grid[0][x] * s.pdn_grid[0][x];
}

/// sum_n (d_{D,n}^2/Xi(1)) Q_x(n) Q_y(n) = delta_{xy}/phi_{D,0}(x)^2.
inline CheckReport dual_ortho(const MISystem& s, const DualTable& t) {
  CheckReport rep{"dual orthogonality"};
  const long N = s.N();
  for (long x = 0; x <= N; ++x)
    for (long y = x; y <= N; ++y) {
      Rational sum = 0;
      for (long n = 0; n <= N; ++n) sum += s.dDn_sq[n] / s.xi_grid[1] * t.q_vals[x][n] * t.q_vals[y][n];
      const Rational expected = x == y ? Rational(1 / phi_dual0_sq(s, x)) : Rational(0);
      rep.expect_equal(at(x, y), sum, expected);
    }
  return rep;
}

struct DualHamiltonian {
  ExactMatrix h_tilde;     // h_tilde(x, x+k) = r_{x,k}
  RealMatrix h_sym;        // r_{x,k} sqrt(d^2_x / d^2_{x+k})
  GridVec energies;        // X(n), n = 0..N
  Rational x_minus1;       // X(-1)
  Rational x_nplus1;       // X(N+1)
  Rational x_nplus2;       // X(N+2), only for off-grid controls
  ExactMatrix V;           // V(x, n) = P_{D,x}(n)/P_{D,0}(n), the transpose of the dual table
  ExactMatrix Vinv;
  long L = 0;
  long precision = kDefaultPrecision;

  long N() const { return static_cast<long>(energies.size()) - 1; }
  /// X at n = -1..N+2.
  const Rational& X(long n) const {
    if (n == -1) return x_minus1;
    if (n == N() + 1) return x_nplus1;
    if (n == N() + 2) return x_nplus2;
    return energies.at(static_cast<std::size_t>(n));
  }
};

inline DualHamiltonian build_hamiltonians(const MISystem& s, const XPoly& xp, const RecTable& t, const DualTable& dual,
                                          long precision = kDefaultPrecision) {
  const long N = s.N();
  const std::size_t n1 = static_cast<std::size_t>(N + 1);
  if (precision < kMinPrecision) fail(ErrorCode::ConfigError, "precision below " + std::to_string(kMinPrecision) + " bits");
  DualHamiltonian h;
  h.L = t.L();
  h.precision = precision;
  h.h_tilde = ExactMatrix::square(n1);
  h.h_sym = RealMatrix(n1, n1, BigReal(precision));
  for (long x = 0; x <= N; ++x)
    for (long k = t.kmin(x); k <= t.kmax(x); ++k) {
      const Rational& r = t.at_nk(x, k);
      h.h_tilde(x, x + k) = r;
      const Rational ratio = s.dDn_sq[x] / s.dDn_sq[x + k];
      if (ratio <= 0) fail(ErrorCode::NegativeUnderSqrt, "d^2 ratio at" + at(x, k));
      if (r * r * ratio != r * t.at_nk(x + k, -k))
        fail(ErrorCode::SymmetryViolation, "r^2 d^2 ratio differs from r_{x,k} r_{x+k,-k} at" + at(x, k));
      h.h_sym(x, x + k) = BigReal(r, precision) * big_sqrt(BigReal(ratio, precision));
    }
  const BigReal tol = BigReal::exp2(-precision / 2, precision);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = i + 1; j < n1; ++j)
      if (abs(h.h_sym(i, j) - h.h_sym(j, i)) > tol)
        fail(ErrorCode::SymmetryViolation, "h_sym not symmetric at" + at(static_cast<long>(i), static_cast<long>(j)));
  for (long n = 0; n <= N; ++n) h.energies.push_back(xp(n));
  h.x_minus1 = xp(-1);
  h.x_nplus1 = xp(N + 1);
  h.x_nplus2 = xp.at(N + 2);
  h.V = ExactMatrix::square(n1);
  for (long x = 0; x <= N; ++x)
    for (long n = 0; n <= N; ++n) h.V(x, n) = dual.q_vals[n][x];
  h.Vinv = exact_inverse(h.V);
  return h;
}

/// h_tilde V = V diag(X(n)) exactly, energies strictly increasing from 0,
/// band structure, and the exact symmetric-product identity.
inline CheckReport verify_spectrum(const DualHamiltonian& h) {
  CheckReport rep{"spectrum"};
  const long N = h.N();
  const ExactMatrix lhs = h.h_tilde * h.V;
  for (long x = 0; x <= N; ++x)
    for (long n = 0; n <= N; ++n) rep.expect_equal(at(x, n), lhs(x, n), Rational(h.V(x, n) * h.energies[n]));
  rep.expect_zero("X(0)", h.energies[0]);
  for (long n = 1; n <= N; ++n) rep.expect_true("X increasing at" + at(n), h.energies[n] > h.energies[n - 1]);
  for (long x = 0; x <= N; ++x)
    for (long y = 0; y <= N; ++y)
      if (std::abs(x - y) > h.L) rep.expect_zero("band" + at(x, y), h.h_tilde(x, y));
  return rep;
}

/// Exact commutator of two h_tilde matrices.
inline CheckReport commutator_check(const ExactMatrix& h1, const ExactMatrix& h2) {
  if (h1.rows() != h2.rows() || !h1.is_square() || !h2.is_square())
    fail(ErrorCode::ShapeMismatch, "commutator of differently shaped matrices");
  CheckReport rep{"commutator"};
  const ExactMatrix c = commutator(h1, h2);
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) rep.expect_zero(at(static_cast<long>(i), static_cast<long>(j)), c(i, j));
  return rep;
}

inline CheckReport commutator_check(const DualHamiltonian& h1, const DualHamiltonian& h2) {
  return commutator_check(h1.h_tilde, h2.h_tilde);
}

}  // namespace dmiop
