#pragma once

// Closure relation [H,[H,E]] = E R0(H) + [H,E] R1(H) + R-1(H) for the
// dual Hamiltonian, and creation/annihilation operators built spectrally.

#include <string>
#include <vector>

#include "dmiop/dual_system.hpp"

namespace dmiop {

struct ClosureTriple {
  PolyEta R0, R1, Rm1;  // in the spectral variable z
};

namespace detail {

/// Node values of R0, R1, R-1 at z = X(j).
struct NodeValues {
  Rational beta0, beta1, betam1;
};

/// R0 and R1 node values only need X at j-1, j, j+1; R-1 also needs B^dual_j.
inline NodeValues closure_nodes(const DualHamiltonian& h, const DualTable* t, long j) {
  const Rational up = h.X(j + 1) - h.X(j), down = h.X(j) - h.X(j - 1);
  NodeValues v{Rational(up * down), Rational(up - down), Rational(0)};
  if (t) v.betam1 = -v.beta0 * t->B.at(static_cast<std::size_t>(j));
  return v;
}

/// Cramer form of the interpolant evaluated at z:
/// det [[X(j)^m (m=1..N), beta_0 - beta_j]_{j=1..N}; [z^m (m=1..N), beta_0]] / det W.
inline Rational cramer_value(const DualHamiltonian& h, const GridVec& beta, const Rational& z) {
  const long N = h.N();
  ExactMatrix m = ExactMatrix::square(static_cast<std::size_t>(N + 1));
  for (long j = 1; j <= N; ++j) {
    for (long k = 1; k <= N; ++k) m(j - 1, k - 1) = ipow(h.energies[j], k);
    m(j - 1, N) = beta[0] - beta[j];
  }
  for (long k = 1; k <= N; ++k) m(N, k - 1) = ipow(z, k);
  m(N, N) = beta[0];
  Rational detW = 1;
  for (long j = 1; j <= N; ++j) {
    detW *= h.energies[j];
    for (long k = 1; k < j; ++k) detW *= h.energies[j] - h.energies[k];
  }
  return checked_div(exact_det(m), detW, "Vandermonde determinant");
}

}  // namespace detail

/// Degree-N interpolants through the node conditions at z = X(0..N),
/// solved as a Vandermonde system and cross-checked in Cramer form at z = 1.
inline ClosureTriple solve_closure(const DualHamiltonian& h, const DualTable& t) {
  const long N = h.N();
  GridVec b0, b1, bm1;
  for (long j = 0; j <= N; ++j) {
    const auto v = detail::closure_nodes(h, &t, j);
    b0.push_back(v.beta0);
    b1.push_back(v.beta1);
    bm1.push_back(v.betam1);
  }
  ExactMatrix vand = ExactMatrix::square(static_cast<std::size_t>(N + 1));
  for (long j = 0; j <= N; ++j)
    for (long k = 0; k <= N; ++k) vand(j, k) = ipow(h.energies[j], k);
  auto solve = [&](const GridVec& beta, const char* name) {
    PolyEta poly(exact_solve(vand, std::span<const Rational>(beta)));
    if (poly(Rational(1)) != detail::cramer_value(h, beta, Rational(1)))
      fail(ErrorCode::CrossCheckMismatch, std::string(name) + ": Vandermonde solve and Cramer form disagree");
    return poly;
  };
  return ClosureTriple{solve(b0, "R0"), solve(b1, "R1"), solve(bm1, "R-1")};
}

/// Node conditions, the discriminant identity R1^2 + 4 R0 = (X(j+1)-X(j-1))^2
/// at j = 0..N, and the negative control at j = N+1 where they need not hold.
struct ClosureNodeReport {
  CheckReport nodes{"closure nodes"};
  bool off_grid_differs = false;  // at least one node condition fails at j = N+1
};

inline ClosureNodeReport verify_closure_nodes(const DualHamiltonian& h, const DualTable& t, const ClosureTriple& c) {
  ClosureNodeReport out;
  const long N = h.N();
  for (long j = 0; j <= N; ++j) {
    const Rational z = h.energies[j];
    const auto v = detail::closure_nodes(h, &t, j);
    out.nodes.expect_equal("R0" + at(j), c.R0(z), v.beta0);
    out.nodes.expect_equal("R1" + at(j), c.R1(z), v.beta1);
    out.nodes.expect_equal("R-1" + at(j), c.Rm1(z), v.betam1);
    const Rational span = h.X(j + 1) - h.X(j - 1);
    out.nodes.expect_equal("discriminant" + at(j), Rational(c.R1(z) * c.R1(z) + 4 * c.R0(z)), Rational(span * span));
  }
  const Rational z = h.X(N + 1);
  const auto v = detail::closure_nodes(h, nullptr, N + 1);
  out.off_grid_differs = c.R0(z) != v.beta0 || c.R1(z) != v.beta1;
  return out;
}

/// Sinusoidal-coordinate diagonal E_x of the dual system.
inline ExactMatrix coordinate_matrix(const MISystem& s) {
  GridVec e;
  for (long x = 0; x <= s.N(); ++x) e.push_back(energy(x, s.params));
  return ExactMatrix::diagonal(std::span<const Rational>(e));
}

/// Exact residual of [H,[H,E]] - (E R0(H) + [H,E] R1(H) + R-1(H)).
inline CheckReport verify_closure(const DualHamiltonian& h, const ExactMatrix& E, const ClosureTriple& c) {
  CheckReport rep{"closure relation"};
  const ExactMatrix& H = h.h_tilde;
  const ExactMatrix HE = commutator(H, E);
  const ExactMatrix lhs = commutator(H, HE);
  const ExactMatrix rhs = E * eval_matrix(c.R0, H) + HE * eval_matrix(c.R1, H) + eval_matrix(c.Rm1, H);
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      rep.expect_equal(at(static_cast<long>(i), static_cast<long>(j)), lhs(i, j), rhs(i, j));
  return rep;
}

/// V diag(values) V^{-1}.
inline ExactMatrix spectral_fn(const DualHamiltonian& h, std::span<const Rational> values) {
  if (values.size() != h.energies.size()) fail(ErrorCode::ShapeMismatch, "node values do not match the spectrum");
  ExactMatrix vd = h.V;
  for (std::size_t i = 0; i < vd.rows(); ++i)
    for (std::size_t n = 0; n < vd.cols(); ++n) vd(i, n) *= values[n];
  return vd * h.Vinv;
}

/// spectral_fn of p(X(n)) against Horner evaluation of p(h_tilde).
inline CheckReport verify_spectral_fn(const DualHamiltonian& h, const PolyEta& p, const std::string& name) {
  CheckReport rep{"spectral calculus " + name};
  GridVec vals;
  for (const auto& z : h.energies) vals.push_back(p(z));
  const ExactMatrix a = spectral_fn(h, vals), b = eval_matrix(p, h.h_tilde);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      rep.expect_equal(at(static_cast<long>(i), static_cast<long>(j)), a(i, j), b(i, j));
  return rep;
}

struct LadderPair {
  ExactMatrix a_plus, a_minus;
};

/// a^(+/-) = +/-([H,E] - (E + R-1 R0^{-1})(H) alpha_-/+(H)) (alpha_+ - alpha_-)(H)^{-1}.
inline LadderPair build_ladder(const DualHamiltonian& h, const DualTable& t, const ExactMatrix& E,
                               const ClosureTriple& c) {
  const long N = h.N();
  GridVec shift, alpha_p, alpha_m, inv;
  for (long n = 0; n <= N; ++n) {
    const Rational z = h.energies[n];
    const Rational r0 = c.R0(z);
    if (r0 == 0) fail(ErrorCode::SingularR0, "R0 vanishes at X" + at(n));
    const Rational s = c.Rm1(z) / r0;
    if (-s != t.B[n]) fail(ErrorCode::CrossCheckMismatch, "-R-1/R0 differs from B^dual at" + at(n));
    shift.push_back(s);
    alpha_p.push_back(Rational(h.X(n + 1) - z));
    alpha_m.push_back(Rational(h.X(n - 1) - z));
    inv.push_back(checked_div(Rational(1), Rational(h.X(n + 1) - h.X(n - 1)), "alpha_+ - alpha_-"));
  }
  const ExactMatrix HE = commutator(h.h_tilde, E);
  const ExactMatrix ES = E + spectral_fn(h, shift);
  const ExactMatrix Inv = spectral_fn(h, inv);
  LadderPair lp;
  lp.a_plus = (HE - ES * spectral_fn(h, alpha_m)) * Inv;
  lp.a_minus = Rational(-1) * ((HE - ES * spectral_fn(h, alpha_p)) * Inv);
  return lp;
}

/// a^(+) v_n = A^dual_n v_{n+1}, a^(-) v_n = C^dual_n v_{n-1}, the scalar
/// identities alpha_+ alpha_- = -R0 and alpha_+ + alpha_- = R1 at every node,
/// and [h, a^(+)] v_n = (X(n+1)-X(n)) A^dual_n v_{n+1}.
inline CheckReport verify_ladder(const DualHamiltonian& h, const DualTable& t, const ClosureTriple& c,
                                 const LadderPair& lp) {
  CheckReport rep{"ladder"};
  const long N = h.N();
  const std::size_t n1 = static_cast<std::size_t>(N + 1);
  const ExactMatrix ap = lp.a_plus * h.V, am = lp.a_minus * h.V;
  const ExactMatrix comm = commutator(h.h_tilde, lp.a_plus) * h.V;
  for (long n = 0; n <= N; ++n) {
    for (std::size_t x = 0; x < n1; ++x) {
      const Rational up = n < N ? Rational(t.A[n] * h.V(x, n + 1)) : Rational(0);
      const Rational down = n > 0 ? Rational(t.C[n] * h.V(x, n - 1)) : Rational(0);
      rep.expect_equal("a+" + at(static_cast<long>(x), n), ap(x, n), up);
      rep.expect_equal("a-" + at(static_cast<long>(x), n), am(x, n), down);
      rep.expect_equal("[h,a+]" + at(static_cast<long>(x), n), comm(x, n), Rational((h.X(n + 1) - h.X(n)) * up));
    }
    const Rational z = h.energies[n];
    const Rational ap_n = h.X(n + 1) - z, am_n = h.X(n - 1) - z;
    rep.expect_equal("alpha product" + at(n), Rational(ap_n * am_n), Rational(-c.R0(z)));
    rep.expect_equal("alpha sum" + at(n), Rational(ap_n + am_n), c.R1(z));
  }
  return rep;
}

}  // namespace dmiop
