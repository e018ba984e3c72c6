#include <gtest/gtest.h>

#include "support.hpp"

using namespace dmiop;
using fixtures::Q;

namespace {

ParamSet params_for(const ClosedForm& cf) { return fixtures::tuple(cf.family, 8); }

ClosedFormComparison run(const std::string& id, const ParamSet& p) {
  const ClosedForm cf = closed_form(id, p);
  const MISystem s = build_mi_system(p, cf.D);
  const XPoly xp = build_X(s, cf.Y);
  return compare_closed_form(cf, xp, extract_r(s, xp));
}

}  // namespace

TEST(Comparators, AllExamplesMatchAtNEight) {
  for (const std::string& id : closed_form_ids()) {
    const ParamSet p = fixtures::tuple(id.rfind("qR:", 0) == 0 ? Family::qR : Family::R, 8);
    const ClosedForm cf = closed_form(id, p);
    const ClosedFormComparison cmp = run(id, p);
    EXPECT_TRUE(cmp.X.ok()) << id << " " << cmp.X.summary();
    EXPECT_TRUE(cmp.stated_factor.ok()) << id << " " << cmp.stated_factor.summary();
    EXPECT_GT(cmp.scale, 0);
    if (cf.r) EXPECT_TRUE(cmp.r.ok()) << id << " " << cmp.r.summary();
  }
}

TEST(Comparators, RecurrenceClosedFormsCoverEveryRow) {
  for (const std::string id : {"R:{1}/1", "qR:{1}/1"}) {
    const ParamSet p = fixtures::tuple(id[0] == 'q' ? Family::qR : Family::R, 8);
    const ClosedForm cf = closed_form(id, p);
    ASSERT_TRUE(cf.r.has_value());
    EXPECT_EQ(cf.r->L(), 2);
    for (long n = 0; n <= 8; ++n) {
      Rational row = 0;
      for (long k = cf.r->kmin(n); k <= cf.r->kmax(n); ++k) row += cf.r->get(n, k);
      EXPECT_EQ(row, Q(0)) << id << " n=" << n;  // X(0) = 0 and P(0) = 1
    }
  }
}

TEST(Comparators, OtherTuplesAndSizes) {
  for (long N : {5, 6})
    for (const std::string& id : closed_form_ids()) {
      const ParamSet p = fixtures::tuple(id[0] == 'q' ? Family::qR : Family::R, N);
      const ClosedFormComparison cmp = run(id, p);
      EXPECT_TRUE(cmp.X.ok() && cmp.stated_factor.ok() && cmp.r.ok()) << id << " N=" << N;
    }
  const ParamSet alt = fixtures::racah(6, Q(23, 2), Q(2, 3), Q(3, 4));
  EXPECT_TRUE(run("R:{1}/1", alt).r.ok());
}

TEST(Comparators, WrongPartnerFails) {
  const ParamSet p = fixtures::racah(6);
  const ClosedForm cf = closed_form("R:{2}/1", p);
  const MISystem s = build_mi_system(p, {1});
  const XPoly xp = build_X(s, fixtures::one());
  EXPECT_FALSE(compare_closed_form(cf, xp, extract_r(s, xp)).X.ok());
}

TEST(Comparators, UnknownAndMismatchedIds) {
  for (const auto& [id, p] : std::vector<std::pair<std::string, ParamSet>>{
           {"R:{3}/1", fixtures::racah(6)}, {"qR:{1}/1", fixtures::racah(6)}, {"R:{1}/1", fixtures::qracah(6)}}) {
    try {
      closed_form(id, p);
      ADD_FAILURE() << id;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnknownExample);
    }
  }
}
