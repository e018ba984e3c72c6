#include <gtest/gtest.h>

#include "support.hpp"

using namespace dmiop;
using fixtures::Q;

TEST(Params, RacahDerivedSlots) {
  const ParamSet p = make_params(Family::R, 3, Q(5), Q(1, 2), Q(1, 3));
  EXPECT_EQ(p.a, Q(-3));
  EXPECT_EQ(p.dtilde(), Q(7, 6));
}

TEST(Params, QRacahTruncation) {
  EXPECT_EQ(make_params(Family::qR, 2, Q(1, 100), Q(1, 3), Q(1, 2), Q(1, 2)).a, Q(4));
  for (Rational q : {Q(3, 2), Q(0), Q(1)}) {
    try {
      make_params(Family::qR, 2, Q(1, 100), Q(1, 3), Q(1, 2), q);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadQ);
    }
  }
  try {
    make_params(Family::R, 0, Q(5), Q(1), Q(1));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadN);
  }
}

TEST(Params, Validate) {
  EXPECT_TRUE(validate(fixtures::racah(10), {1, 2}).empty());
  const auto v = validate(fixtures::racah(10, Q(14), Q(1, 2), Q(5)), {1, 2});
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().chain, "0<d<a+b");
  // ab = 1/2 = d, c = 1/4 = qd and ab > dq^2: every chain is reported.
  const ParamSet q = make_params(Family::qR, 4, Q(1, 32), Q(1, 4), Q(1, 2), Q(1, 2));
  std::vector<std::string> chains;
  for (const auto& x : validate(q, {1})) chains.push_back(x.chain);
  EXPECT_EQ(chains, (std::vector<std::string>{"0<ab<d<1", "qd<c<1", "ab<dq^(max(D)+1)"}));
  EXPECT_TRUE(validate(fixtures::qracah(4), {1}).empty());
}

TEST(Params, Shifts) {
  const ParamSet p = make_params(Family::R, 3, Q(5), Q(1, 2), Q(1, 3));
  const ParamSet s0 = shift(p, 0, ShiftKind::delta);
  EXPECT_EQ(std::tie(s0.a, s0.b, s0.c, s0.d), std::tie(p.a, p.b, p.c, p.d));
  const ParamSet t2 = shift(p, 2, ShiftKind::tilde);
  EXPECT_EQ(t2.a, Q(-3));
  EXPECT_EQ(t2.b, Q(5));
  EXPECT_EQ(t2.c, Q(5, 2));
  EXPECT_EQ(t2.d, Q(7, 3));
  const ParamSet q = fixtures::qracah(2);
  const ParamSet qs = shift(q, 1, ShiftKind::delta);
  EXPECT_EQ(qs.a, q.a * q.q);
  EXPECT_EQ(qs.b, q.b * q.q);
  EXPECT_EQ(qs.c, q.c * q.q);
  EXPECT_EQ(qs.d, q.d * q.q);
}

TEST(Params, Twist) {
  const ParamSet p = make_params(Family::R, 3, Q(5), Q(1, 2), Q(1, 3));
  const ParamSet t = twist(p);
  EXPECT_EQ(t.a, Q(13, 3));
  EXPECT_EQ(t.b, Q(-11, 3));
  EXPECT_EQ(t.c, Q(1, 2));
  EXPECT_EQ(t.d, Q(1, 3));
  const ParamSet tt = twist(t);
  EXPECT_EQ(std::tie(tt.a, tt.b, tt.c, tt.d), std::tie(p.a, p.b, p.c, p.d));
  const ParamSet q = fixtures::qracah(4);
  const ParamSet qt = twist(q);
  EXPECT_EQ(qt.a, q.d * q.q / q.a);
  EXPECT_EQ(qt.b, q.d * q.q / q.b);
  const ParamSet qtt = twist(qt);
  EXPECT_EQ(std::tie(qtt.a, qtt.b), std::tie(q.a, q.b));
}

TEST(Params, EtaInvariantUnderTwist) {
  for (const ParamSet& p : {fixtures::racah(6), fixtures::qracah(6)})
    for (long x = 0; x <= p.N; ++x) EXPECT_EQ(eta(x, twist(p)), eta(x, p));
}

TEST(Params, Ell) {
  EXPECT_EQ(ell({}), 0);
  EXPECT_EQ(ell({1}), 1);
  EXPECT_EQ(ell({1, 2}), 2);
}

TEST(Params, IndexSetRejectsBadSets) {
  for (auto bad : {std::vector<long>{0}, std::vector<long>{2, 1}, std::vector<long>{1, 1}}) {
    try {
      IndexSet d(bad);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadIndexSet);
    }
  }
}
