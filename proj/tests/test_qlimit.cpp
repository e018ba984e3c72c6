#include <gtest/gtest.h>

#include "support.hpp"

using namespace dmiop;
using fixtures::Q;

TEST(QLimit, PartnerTuple) {
  const ParamSet r = make_params(Family::R, 4, Q(12), Q(1), Q(1));
  const ParamSet q = q_partner(r, Q(1, 2));
  EXPECT_EQ(q.a, Q(16));
  EXPECT_EQ(q.b, ipow(Q(1, 2), 12));
  EXPECT_EQ(q.c, Q(1, 2));
  EXPECT_EQ(q.d, Q(1, 2));
  for (const ParamSet& bad : {fixtures::racah(4), fixtures::qracah(4)}) {
    try {
      q_partner(bad, Q(1, 2));
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ConfigError);
    }
  }
}

TEST(QLimit, DifferencesShrink) {
  const ParamSet r = make_params(Family::R, 4, Q(12), Q(1), Q(1));
  for (const IndexSet& D : {IndexSet{}, IndexSet{1}}) {
    const QLimitReport rep = qlimit_test(r, D, 3, 5);
    EXPECT_TRUE(rep.monotone);
    EXPECT_TRUE(rep.within_tolerance);
    ASSERT_EQ(rep.rows.size(), 3u);
    EXPECT_EQ(rep.rows.front().q, Q(999, 1000));
  }
}
