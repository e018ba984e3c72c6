#pragma once

// q -> 1 comparison: a Racah tuple with integer b, c, d against the q-Racah
// tuple (q^b, q^c, q^d) at q = 1 - 10^-k, entrywise on P_{D,n}(x) and Q_{D,x}(n).

#include <string>
#include <vector>

#include "dmiop/dual_system.hpp"

namespace dmiop {

struct QLimitRow {
  long k = 0;
  Rational q;
  BigReal diff_P;  // max_{n,x} |P_qR - P_R|
  BigReal diff_Q;  // max_{x,n} |Q_qR - Q_R|
  BigReal tolerance;  // 10^(-k+2)
};

struct QLimitReport {
  std::vector<QLimitRow> rows;
  bool monotone = true;
  bool within_tolerance = true;
  bool ok() const { return monotone && within_tolerance; }
};

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// The q-Racah partner of an R tuple: b, c, d become q^b, q^c, q^d.
inline ParamSet q_partner(const ParamSet& racah, const Rational& q) {
  if (racah.is_q()) fail(ErrorCode::ConfigError, "q-limit reference must be a Racah tuple");
  for (const Rational* v : {&racah.b, &racah.c, &racah.d})
    if (!is_integer(*v)) fail(ErrorCode::ConfigError, "q-limit needs integer b, c, d (got " + to_string(*v) + ")");
  return make_params(Family::qR, racah.N, ipow(q, racah.b.get_num().get_si()), ipow(q, racah.c.get_num().get_si()),
                     ipow(q, racah.d.get_num().get_si()), q);
}

inline QLimitReport qlimit_test(const ParamSet& racah, const IndexSet& D, long kmin = 3, long kmax = 6,
                                long precision = kDefaultPrecision) {
  const MISystem ref = build_mi_system(racah, D);
  const DualTable ref_dual = dual_values(ref);
  const long N = racah.N;
  QLimitReport rep;
  for (long k = kmin; k <= kmax; ++k) {
    QLimitRow row{k, Rational(1) - ipow(Rational(10), -k), BigReal(precision), BigReal(precision),
                  BigReal(precision)};
    const MISystem qs = build_mi_system(q_partner(racah, row.q), D);
    const DualTable qd = dual_values(qs);
    for (long n = 0; n <= N; ++n)
      for (long x = 0; x <= N; ++x) {
        const BigReal dp = abs(BigReal(Rational(qs.pdn_grid[n][x] - ref.pdn_grid[n][x]), precision));
        if (dp > row.diff_P) row.diff_P = dp;
        const BigReal dq = abs(BigReal(Rational(qd.q_vals[x][n] - ref_dual.q_vals[x][n]), precision));
        if (dq > row.diff_Q) row.diff_Q = dq;
      }
    row.tolerance = BigReal(ipow(Rational(10), 2 - k), precision);
    if (!(row.diff_P < row.tolerance && row.diff_Q < row.tolerance)) rep.within_tolerance = false;
    if (!rep.rows.empty() && !(row.diff_P < rep.rows.back().diff_P && row.diff_Q < rep.rows.back().diff_Q))
      rep.monotone = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace dmiop
