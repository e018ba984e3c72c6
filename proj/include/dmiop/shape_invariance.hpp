#pragma once

// Upper-triangular factorisation H = A^T A of the semidefinite Hamiltonian
// and a falsification test of shape invariance against candidate partners.

#include <optional>
#include <string>
#include <vector>

#include "dmiop/dual_system.hpp"

namespace dmiop {

struct UpperFactor {
  RealMatrix A;
  long precision = kDefaultPrecision;
};

inline BigReal max_abs(const RealMatrix& m, long precision) {
  BigReal best(precision);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (abs(m(i, j)) > best) best = abs(m(i, j));
  return best;
}

/// Row-by-row semidefinite elimination: h'_{xy} = h_{xy} - sum_{z<x} h'_{zx} h'_{zy} / h'_{zz},
/// a_{xy} = h'_{xy}/sqrt(h'_{xx}); pivots within tolerance of zero give zero rows.
inline UpperFactor factor_upper(const RealMatrix& h) {
  if (!h.is_square()) fail(ErrorCode::ShapeMismatch, "factor_upper needs a square matrix");
  const std::size_t n = h.order();
  const long prec = n ? h(0, 0).precision() : kDefaultPrecision;
  const BigReal scale = max_abs(h, prec);
  const BigReal tol = BigReal::exp2(-prec / 2, prec) * (scale.is_zero() ? BigReal(1, prec) : scale);
  RealMatrix hp(n, n, BigReal(prec));
  UpperFactor f{RealMatrix(n, n, BigReal(prec)), prec};
  std::vector<bool> live(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      BigReal v = h(x, y);
      for (std::size_t z = 0; z < x; ++z)
        if (live[z]) v -= hp(z, x) * hp(z, y) / hp(z, z);
      hp(x, y) = v;
    }
    const BigReal& pivot = hp(x, x);
    if (pivot < -tol) fail(ErrorCode::NegativePivot, "pivot " + pivot.to_string() + " at row " + std::to_string(x));
    if (pivot <= tol) {
      for (std::size_t y = x + 1; y < n; ++y)
        if (abs(hp(x, y)) > tol)
          fail(ErrorCode::NegativePivot, "zero pivot with nonzero remainder at row " + std::to_string(x));
      continue;
    }
    live[x] = true;
    const BigReal root = big_sqrt(pivot);
    for (std::size_t y = x; y < n; ++y) f.A(x, y) = hp(x, y) / root;
  }
  const RealMatrix err = f.A.transpose() * f.A - h;
  if (max_abs(err, prec) > tol)
    fail(ErrorCode::CrossCheckMismatch, "A^T A does not reproduce the input: " + max_abs(err, prec).to_string());
  return f;
}

/// Candidate partner lambda' at size N-1: b, c, d advanced by (kb, kc, kd)
/// steps (additive for R, powers of q for qR); a follows from N-1.
struct SICandidate {
  std::string id;
  long kb = 0, kc = 0, kd = 0;
};

inline const std::vector<SICandidate>& builtin_candidates() {
  static const std::vector<SICandidate> c{{"delta", 1, 1, 1}, {"tilde", 0, 1, 1}, {"delta+d", 1, 1, 2}};
  return c;
}

inline ParamSet apply_candidate(const ParamSet& p, const SICandidate& c) {
  if (p.N < 2) fail(ErrorCode::InadmissibleCandidate, "shape-invariance partner needs N >= 2");
  if (!p.is_q()) return make_params(Family::R, p.N - 1, p.b + c.kb, p.c + c.kc, p.d + c.kd);
  return make_params(Family::qR, p.N - 1, p.b * p.qpow(c.kb), p.c * p.qpow(c.kc), p.d * p.qpow(c.kd), p.q);
}

struct SICandidateResult {
  std::string id;
  ParamSet partner;
  Rational kappa;
  bool spectral_ok = false;
  std::optional<long> first_fail_x;
  Rational mismatch;          // kappa X(x; lambda') - (X(x+1) - X(1)) at the first failure
  std::string matrix_residual;  // decimal, at `precision` bits
  long precision = kDefaultPrecision;
};

struct SIReport {
  std::vector<SICandidateResult> candidates;
  bool any_spectral_pass() const {
    for (const auto& c : candidates)
      if (c.spectral_ok) return true;
    return false;
  }
};

/// Partner system at lambda' with the same D and Y; admissibility failures
/// of any kind become InadmissibleCandidate.
struct PartnerSystem {
  MISystem s;
  XPoly xp;
  DualHamiltonian h;
};

inline PartnerSystem build_partner(const ParamSet& pp, const IndexSet& D, const PolyEta& Y, long precision,
                                   const std::string& id) {
  try {
    if (!validate(pp, D).empty()) fail(ErrorCode::InadmissibleCandidate, "candidate " + id + " violates " + validate(pp, D).front().chain);
    MISystem s = build_mi_system(pp, D);
    XPoly xp = build_X(s, Y);
    const RecTable t = extract_r(s, xp);
    DualHamiltonian h = build_hamiltonians(s, xp, t, dual_values(s), precision);
    return PartnerSystem{std::move(s), std::move(xp), std::move(h)};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InadmissibleCandidate) throw;
    fail(ErrorCode::InadmissibleCandidate, "candidate " + id + ": " + e.what());
  }
}

/// Exact spectral necessary condition kappa X(x; lambda') = X(x+1) - X(1),
/// x = 0..N-1, and the float residual of the matrix condition
/// (A A^T)_{N x N} - kappa A'^T A' - X(1) Id.
inline SIReport si_test(const MISystem& s, const XPoly& xp, const DualHamiltonian& h,
                        const std::vector<SICandidate>& candidates) {
  SIReport rep;
  const long N = s.N();
  const long prec = h.precision;
  const UpperFactor A = factor_upper(h.h_sym);
  const RealMatrix AAt = A.A * A.A.transpose();
  for (const auto& cand : candidates) {
    SICandidateResult r;
    r.id = cand.id;
    r.precision = prec;
    r.partner = apply_candidate(s.params, cand);
    const PartnerSystem ps = build_partner(r.partner, s.D, xp.Y, prec, cand.id);
    r.kappa = checked_div(Rational(xp(2) - xp(1)), ps.xp(1), "X(1; lambda')");
    r.spectral_ok = true;
    for (long x = 0; x <= N - 1; ++x) {
      const Rational diff = r.kappa * ps.xp(x) - (xp(x + 1) - xp(1));
      if (diff != 0) {
        r.spectral_ok = false;
        r.first_fail_x = x;
        r.mismatch = diff;
        break;
      }
    }
    const UpperFactor Ap = factor_upper(ps.h.h_sym);
    const RealMatrix AtA = Ap.A.transpose() * Ap.A;
    const BigReal kappa(r.kappa, prec), e1(xp(1), prec);
    RealMatrix res(static_cast<std::size_t>(N), static_cast<std::size_t>(N), BigReal(prec));
    for (long i = 0; i < N; ++i)
      for (long j = 0; j < N; ++j) {
        res(i, j) = AAt(i, j) - kappa * AtA(i, j);
        if (i == j) res(i, j) -= e1;
      }
    r.matrix_residual = max_abs(res, prec).to_string();
    rep.candidates.push_back(std::move(r));
  }
  return rep;
}

}  // namespace dmiop
