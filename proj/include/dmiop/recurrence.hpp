#pragma once

// The discrete antiderivative I, the polynomial X = I[Xi_D Y], and the
// constant-coefficient recurrence X P_{D,n} = sum_k r_{n,k} P_{D,n+k}.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dmiop/matrix.hpp"
#include "dmiop/multi_indexed.hpp"
#include "dmiop/report.hpp"

namespace dmiop {

namespace detail {

inline Rational gprime_wilson(long n, long k) {
  const int s = k % 2 == 0 ? 1 : -1;
  Rational g(s * binomial(2 * n + 2, 2 * k + 1), Integer(1) << static_cast<mp_bitcnt_t>(2 * k + 1));
  g.canonicalize();
  return g;
}

/// Askey-Wilson inner coefficient with the half-integer powers of q
/// already combined with the outer factor q^{(n-k)/2}.
inline Rational gprime_aw_scaled(long n, long k, const Rational& q) {
  if (k % 2 != 0) return Rational(0);
  const long h = k / 2;
  Rational sum = 0;
  for (long r = 0; r <= h; ++r) {
    const int s = r % 2 == 0 ? 1 : -1;
    sum += Rational(s * binomial(n - k + r, r)) * ipow(q, -r) /
           Rational(factorial(h - r) * factorial(n - h + 1 + r)) * ((1 - ipow(q, n - k + 1 + 2 * r)) / (1 - q));
  }
  return Rational(factorial(n + 1)) / Rational(Integer(1) << static_cast<mp_bitcnt_t>(k)) * sum;
}

}  // namespace detail

/// Coefficient g'^{(k)}_n of the expansion of
/// (eta(x)^{n+1} - eta(x-1)^{n+1}) / (eta(x) - eta(x-1)) in powers of eta(x; lambda-delta).
inline Rational gprime(long n, long k, const ParamSet& p) {
  if (n < 0 || k < 0 || k > n) fail(ErrorCode::IndexOutOfRange, "gprime: need 0 <= k <= n");
  const Rational& d = p.d;
  Rational sum = 0;
  for (long r = 0; r <= k; ++r)
    for (long l = 0; l <= k - r; ++l) {
      const Integer bin = binomial(n + 1, r) * binomial(n - r - l, n - k);
      if (bin == 0) continue;
      if (!p.is_q()) {
        const int s = (r + l) % 2 == 0 ? 1 : -1;
        sum += Rational(s * bin) * ipow(d / 2, 2 * r) * ipow((d - 1) / 2, 2 * (k - r - l)) *
               detail::gprime_wilson(n - r, l);
      } else {
        if (l % 2 != 0) continue;
        const int s = r % 2 == 0 ? 1 : -1;
        sum += Rational(s * bin) * Rational(Integer(1) << static_cast<mp_bitcnt_t>(l)) * ipow(d, l / 2) *
               ipow(1 + d, r) * ipow(1 + d / p.q, k - r - l) * detail::gprime_aw_scaled(n - r, l, p.q);
      }
    }
  return sum;
}

/// Discrete antiderivative: I[p](eta(x)) - I[p](eta(x-1)) = (eta(x) - eta(x-1)) p(eta(x; lambda-delta)).
inline PolyEta map_I(const PolyEta& pol, const ParamSet& p) {
  if (pol.is_zero()) fail(ErrorCode::ZeroPolynomial, "map_I of the zero polynomial");
  const long n = static_cast<long>(*pol.degree());
  std::vector<Rational> b(n + 2, Rational(0));
  for (long k = n; k >= 0; --k) {
    Rational acc = pol.coeff(k);
    for (long j = k + 1; j <= n; ++j) acc -= gprime(j, j - k, p) * b[j + 1];
    b[k + 1] = checked_div(acc, gprime(k, 0, p), "g'^{(0)}_k");
  }
  return PolyEta(std::move(b));
}

struct XPoly {
  PolyEta poly;        // X in eta(x; lambda+M delta)
  PolyEta Y;
  long L = 0;
  ParamSet var_params;  // lambda + M delta
  GridVec grid;        // X(x) for x = -1..N+1 (index x+1)

  const Rational& operator()(long x) const { return grid.at(static_cast<std::size_t>(x + 1)); }
  /// Polynomial value at any integer x.
  Rational at(long x) const { return poly(eta(x, var_params)); }
};

/// X = I_{lambda+M delta}[Xi_D Y].  With `hamiltonian` set, Y must have
/// non-negative coefficients and the grid must increase strictly.
inline XPoly build_X(const MISystem& s, const PolyEta& Y, bool hamiltonian = true) {
  if (Y.is_zero()) fail(ErrorCode::ZeroPolynomial, "Y must be nonzero");
  if (hamiltonian)
    for (const auto& c : Y.coeffs())
      if (c < 0) fail(ErrorCode::NegativeYCoefficient, "Y has a negative coefficient " + to_string(c));
  XPoly xp;
  xp.Y = Y;
  xp.var_params = s.pdn_var_params();
  xp.poly = map_I(s.xi_poly * Y, xp.var_params);
  xp.L = s.ell + static_cast<long>(*Y.degree()) + 1;
  if (xp.poly.degree() != std::optional<std::size_t>(xp.L)) fail(ErrorCode::DegreeMismatch, "deg X != L");
  if (xp.poly.coeff(0) != 0) fail(ErrorCode::CrossCheckMismatch, "X(0) != 0");
  const long N = s.N();
  for (long x = -1; x <= N + 1; ++x) xp.grid.push_back(xp.at(x));

  const ParamSet xi_var = s.xi_var_params();
  Rational partial = 0;
  for (long x = 0; x <= N; ++x) {
    if (x > 0)
      partial += (eta(x, xp.var_params) - eta(x - 1, xp.var_params)) * s.xi_grid[x] * Y(eta(x, xi_var));
    if (partial != xp(x))
      fail(ErrorCode::CrossCheckMismatch, "telescoping sum disagrees with X at x=" + std::to_string(x));
  }
  if (hamiltonian)
    for (long x = 1; x <= N; ++x)
      if (!(xp(x) > xp(x - 1))) fail(ErrorCode::NonMonotone, "X not increasing at x=" + std::to_string(x));
  return xp;
}

/// X(-1) by evaluation, cross-checked against its closed form.
inline Rational xhat_minus1(const XPoly& xp, const MISystem& s) {
  const ParamSet& p = s.params;
  const Rational y0 = xp.Y.coeff(0);
  const Rational closed = p.is_q() ? Rational(-(1 - p.q) * (1 - p.d * p.qpow(s.M - 1)) * y0)
                                   : Rational(-(p.d + s.M - 1) * y0);
  const Rational value = xp(-1);
  if (value != closed)
    fail(ErrorCode::CrossCheckMismatch, "X(-1) = " + to_string(value) + " but closed form gives " + to_string(closed));
  return value;
}

/// r_{n,k} for 0 <= n <= N and -min(L,n) <= k <= min(L,N-n).
class RecTable {
 public:
  RecTable() = default;
  RecTable(long N, long L) : N_(N), L_(L) {}

  long N() const { return N_; }
  long L() const { return L_; }
  long kmin(long n) const { return -std::min(L_, n); }
  long kmax(long n) const { return std::min(L_, N_ - n); }
  bool in_band(long n, long k) const { return n >= 0 && n <= N_ && k >= kmin(n) && k <= kmax(n); }

  void set(long n, long k, Rational v) {
    if (!in_band(n, k)) fail(ErrorCode::IndexOutOfRange, "r" + at(n, k) + " outside the band");
    r_[{n, k}] = std::move(v);
  }
  bool contains(long n, long k) const { return r_.count({n, k}) != 0; }
  const Rational& at_nk(long n, long k) const {
    auto it = r_.find({n, k});
    if (it == r_.end()) fail(ErrorCode::IndexOutOfRange, "r" + at(n, k) + " absent");
    return it->second;
  }
  /// Zero outside the band.
  Rational get(long n, long k) const {
    auto it = r_.find({n, k});
    return it == r_.end() ? Rational(0) : it->second;
  }
  const std::map<std::pair<long, long>, Rational>& entries() const { return r_; }
  friend bool operator==(const RecTable&, const RecTable&) = default;

 private:
  long N_ = 0;
  long L_ = 0;
  std::map<std::pair<long, long>, Rational> r_;
};

/// Projection onto the orthogonal basis, cross-checked by an exact linear
/// solve of X(x) P_{D,n}(x) = sum_m c_m P_{D,m}(x) on the grid.
inline RecTable extract_r(const MISystem& s, const XPoly& xp) {
  const long N = s.N();
  RecTable t(N, xp.L);
  ExactMatrix basis(N + 1, N + 1);  // basis(x, m) = P_{D,m}(x)
  ExactMatrix rhs(N + 1, N + 1);    // rhs(x, n) = X(x) P_{D,n}(x)
  for (long x = 0; x <= N; ++x)
    for (long m = 0; m <= N; ++m) {
      basis(x, m) = s.pdn_grid[m][x];
      rhs(x, m) = xp(x) * s.pdn_grid[m][x];
    }
  const ExactMatrix solved = exact_solve(basis, rhs);  // solved(m, n)

  for (long n = 0; n <= N; ++n)
    for (long m = 0; m <= N; ++m) {
      Rational sum = 0;
      for (long x = 0; x <= N; ++x) sum += s.weights[x] * xp(x) * s.pdn_grid[n][x] * s.pdn_grid[m][x];
      const Rational r = s.dDn_sq[m] * sum;
      if (r != solved(m, n))
        fail(ErrorCode::CrossCheckMismatch, "projection and linear solve disagree at" + at(n, m - n));
      const long k = m - n;
      if (t.in_band(n, k))
        t.set(n, k, r);
      else if (r != 0)
        fail(ErrorCode::CrossCheckMismatch, "nonzero coefficient outside the band at" + at(n, k));
    }
  for (long n = 0; n <= N; ++n)
    for (long k = 1; k <= t.kmax(n); ++k)
      if (t.at_nk(n + k, -k) != s.dDn_sq[n] / s.dDn_sq[n + k] * t.at_nk(n, k))
        fail(ErrorCode::CrossCheckMismatch, "symmetry of r fails at" + at(n, k));
  return t;
}

enum class RecMode { Standard, PolynomialEverywhere };

/// The recurrence as a polynomial identity for n <= N-L and on the grid
/// otherwise.  PolynomialEverywhere applies the polynomial test to all n.
inline CheckReport verify_recurrence(const MISystem& s, const XPoly& xp, const RecTable& t,
                                     RecMode mode = RecMode::Standard) {
  CheckReport rep{"recurrence"};
  const long N = s.N();
  for (long n = 0; n <= N; ++n) {
    Rational rowsum = 0;
    for (long k = t.kmin(n); k <= t.kmax(n); ++k) rowsum += t.get(n, k);
    rep.expect_zero("row sum" + at(n), rowsum);
    const bool poly_mode = mode == RecMode::PolynomialEverywhere || n <= N - xp.L;
    if (poly_mode) {
      PolyEta diff = xp.poly * s.pdn_polys[n];
      for (long k = t.kmin(n); k <= t.kmax(n); ++k) diff -= s.pdn_polys[n + k] * t.get(n, k);
      ++rep.checked;
      if (!diff.is_zero()) rep.failures.push_back({"polynomial" + at(n), diff.leading()});
    } else {
      for (long x = 0; x <= N; ++x) {
        Rational rhs = 0;
        for (long k = t.kmin(n); k <= t.kmax(n); ++k) rhs += t.get(n, k) * s.pdn_grid[n + k][x];
        rep.expect_equal("grid" + at(n, x), Rational(xp(x) * s.pdn_grid[n][x]), rhs);
      }
    }
  }
  return rep;
}

/// Antiderivative property of I on the grid, for a given polynomial.
inline CheckReport verify_map_I(const PolyEta& pol, const ParamSet& p) {
  CheckReport rep{"map I"};
  const PolyEta img = map_I(pol, p);
  rep.expect_true("degree", img.degree() && pol.degree() && *img.degree() == *pol.degree() + 1);
  const ParamSet lower = shift(p, -1, ShiftKind::delta);
  for (long x = 1; x <= p.N; ++x)
    rep.expect_equal(at(x), Rational(img(eta(x, p)) - img(eta(x - 1, p))),
                     Rational((eta(x, p) - eta(x - 1, p)) * pol(eta(x, lower))));
  return rep;
}

/// Defining identity of g' at x = 1..N for degrees up to nmax.
inline CheckReport verify_gprime(const ParamSet& p, long nmax) {
  CheckReport rep{"g' expansion"};
  const ParamSet lower = shift(p, -1, ShiftKind::delta);
  for (long n = 0; n <= nmax; ++n)
    for (long x = 1; x <= p.N; ++x) {
      const Rational e1 = eta(x, p), e0 = eta(x - 1, p);
      Rational lhs = 0;
      for (long i = 0; i <= n; ++i) lhs += ipow(e1, i) * ipow(e0, n - i);
      Rational rhs = 0;
      for (long k = 0; k <= n; ++k) rhs += gprime(n, k, p) * ipow(eta(x, lower), n - k);
      rep.expect_equal(at(n, x), lhs, rhs);
    }
  return rep;
}

}  // namespace dmiop
