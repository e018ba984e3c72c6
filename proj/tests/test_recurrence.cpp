#include <gtest/gtest.h>

#include "support.hpp"

using namespace dmiop;
using fixtures::Q;

namespace {

// Projection oracle: r_{n,k} = d^2_{n+k} sum_x w(x) X(x) P_n(x) P_{n+k}(x).
Rational projected_r(const MISystem& s, const XPoly& xp, long n, long k) {
  Rational sum = 0;
  for (long x = 0; x <= s.N(); ++x) sum += s.weights[x] * xp(x) * s.pdn_grid[n][x] * s.pdn_grid[n + k][x];
  return s.dDn_sq[n + k] * sum;
}

}  // namespace

TEST(Recurrence, GprimeBase) {
  for (const ParamSet& p : {fixtures::racah(5), fixtures::qracah(5)}) EXPECT_EQ(gprime(0, 0, p), Q(1));
}

TEST(Recurrence, GprimeDefiningIdentity) {
  for (const ParamSet& p : {fixtures::racah(6), fixtures::qracah(6)}) {
    const ParamSet down = shift(p, -1, ShiftKind::delta);
    for (long n = 0; n <= 4; ++n)
      for (long x = 1; x <= p.N; ++x) {
        const Rational e1 = eta(x, p), e0 = eta(x - 1, p);
        const Rational lhs = (ipow(e1, n + 1) - ipow(e0, n + 1)) / (e1 - e0);
        Rational rhs = 0;
        for (long k = 0; k <= n; ++k) rhs += gprime(n, k, p) * ipow(eta(x, down), n - k);
        EXPECT_EQ(lhs, rhs) << to_string(p.family) << " n=" << n << " x=" << x;
      }
    EXPECT_TRUE(verify_gprime(p, 4).ok());
  }
}

TEST(Recurrence, MapIAntiderivative) {
  const std::vector<PolyEta> polys{PolyEta::constant(Q(1)), PolyEta(std::vector<Rational>{Q(2), Q(-1, 3)}),
                                   PolyEta(std::vector<Rational>{Q(0), Q(1), Q(5, 2)}),
                                   PolyEta(std::vector<Rational>{Q(1, 7), Q(0), Q(-2), Q(3)})};
  for (const ParamSet& p : {fixtures::racah(6), fixtures::qracah(6)}) {
    EXPECT_EQ(map_I(PolyEta::constant(Q(1)), p), fixtures::eta_var());
    const ParamSet down = shift(p, -1, ShiftKind::delta);
    for (const PolyEta& pol : polys) {
      const PolyEta I = map_I(pol, p);
      EXPECT_EQ(*I.degree(), *pol.degree() + 1);
      EXPECT_EQ(I.coeff(0), Q(0));
      for (long x = 1; x <= p.N; ++x)
        EXPECT_EQ(I(eta(x, p)) - I(eta(x - 1, p)), (eta(x, p) - eta(x - 1, p)) * pol(eta(x, down)));
    }
  }
  try {
    map_I(PolyEta(), fixtures::racah(4));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroPolynomial);
  }
}

TEST(Recurrence, BuildXBasics) {
  const MISystem s0 = build_mi_system(fixtures::racah(5), {});
  const XPoly x0 = build_X(s0, fixtures::one());
  EXPECT_EQ(x0.poly, fixtures::eta_var());
  EXPECT_EQ(x0.L, 1);
  for (Family f : {Family::R, Family::qR})
    for (const IndexSet& D : {IndexSet{1}, IndexSet{1, 2}}) {
      const MISystem s = build_mi_system(fixtures::tuple(f, 5), D);
      const XPoly xp = build_X(s, fixtures::eta_var());
      EXPECT_EQ(xp(0), Q(0));
      EXPECT_EQ(xp.L, s.ell + 2);
      for (long x = 1; x <= 5; ++x) EXPECT_GT(xp(x), xp(x - 1));
    }
  try {
    build_X(s0, PolyEta(std::vector<Rational>{Q(1), Q(-1)}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeYCoefficient);
  }
  EXPECT_NO_THROW(build_X(s0, PolyEta(std::vector<Rational>{Q(1), Q(-1, 1000)}), false));
}

TEST(Recurrence, XAtMinusOne) {
  const ParamSet p = fixtures::racah(5);
  const MISystem s = build_mi_system(p, {1});
  EXPECT_EQ(xhat_minus1(build_X(s, fixtures::one()), s), Q(-2, 5));
  EXPECT_EQ(xhat_minus1(build_X(s, fixtures::eta_var()), s), Q(0));
  const ParamSet q = fixtures::qracah(5);
  const MISystem sq = build_mi_system(q, {1});
  EXPECT_EQ(xhat_minus1(build_X(sq, fixtures::one()), sq), Rational(-(1 - q.q) * (1 - q.d)));
}

TEST(Recurrence, EmptySetGivesThreeTermCoefficients) {
  for (const ParamSet& p : {fixtures::racah(6), fixtures::qracah(6)}) {
    const MISystem s = build_mi_system(p, {});
    const RecTable t = extract_r(s, build_X(s, fixtures::one()));
    for (long n = 0; n <= p.N; ++n) {
      const RecCoeffs rc = rec_coeffs(n, p);
      EXPECT_EQ(t.get(n, 0), rc.B);
      if (n < p.N) EXPECT_EQ(t.get(n, 1), rc.A);
      if (n > 0) EXPECT_EQ(t.get(n, -1), rc.C);
    }
  }
}

TEST(Recurrence, TableMatchesProjectionOracle) {
  for (Family f : {Family::R, Family::qR})
    for (long N : {5, 6})
      for (const IndexSet& D : {IndexSet{1}, IndexSet{2}, IndexSet{1, 2}})
        for (const PolyEta& Y : {fixtures::one(), fixtures::eta_var()}) {
          const MISystem s = build_mi_system(fixtures::tuple(f, N), D);
          const XPoly xp = build_X(s, Y);
          const RecTable t = extract_r(s, xp);
          for (long n = 0; n <= N; ++n)
            for (long k = -n; k <= N - n; ++k) {
              const Rational r = projected_r(s, xp, n, k);
              if (t.in_band(n, k)) EXPECT_EQ(t.get(n, k), r);
              else {
                EXPECT_FALSE(t.contains(n, k));
                EXPECT_EQ(r, Q(0)) << "nonzero coefficient outside the band";
              }
            }
          for (long n = 0; n <= N; ++n)
            for (long k = 1; k <= t.L() && n + k <= N; ++k)
              EXPECT_EQ(t.get(n + k, -k), s.dDn_sq[n] / s.dDn_sq[n + k] * t.get(n, k));
          EXPECT_TRUE(verify_recurrence(s, xp, t).ok());
          EXPECT_FALSE(verify_recurrence(s, xp, t, RecMode::PolynomialEverywhere).ok());
        }
}

TEST(Recurrence, BandWidthAtInteriorRows) {
  const MISystem s = build_mi_system(fixtures::racah(8), {1});
  const XPoly xp = build_X(s, fixtures::one());
  const RecTable t = extract_r(s, xp);
  ASSERT_EQ(t.L(), 2);
  for (long n = t.L(); n <= 8 - t.L(); ++n) {
    long nonzero = 0;
    for (long k = -t.L(); k <= t.L(); ++k) nonzero += t.get(n, k) != 0;
    EXPECT_EQ(nonzero, 1 + 2 * t.L()) << n;
  }
  EXPECT_FALSE(t.contains(3, 3));
}

TEST(Recurrence, PerturbedTableFails) {
  const MISystem s = build_mi_system(fixtures::racah(5), {1});
  const XPoly xp = build_X(s, fixtures::one());
  RecTable t = extract_r(s, xp);
  t.set(2, 1, t.get(2, 1) + Q(1, 1000));
  EXPECT_FALSE(verify_recurrence(s, xp, t).ok());
}
