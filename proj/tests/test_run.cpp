#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace dmiop;
using fixtures::Q;

namespace {

Json base_config() {
  return Json::parse(R"({"family": "R", "N": 5, "b": "10", "c": "1/2", "d": "2/5", "D": [1], "Y": ["0", "1"]})");
}

ErrorCode config_error(const Json& j) {
  try {
    parse_config(j);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted " << j.dump();
  return ErrorCode::SingularR0;
}

const Json* suite(const Json& report, const std::string& name) {
  for (const auto& s : report["suites"])
    if (s["suite"] == name) return &s;
  return nullptr;
}

}  // namespace

TEST(Serialize, ExactValuesAsFractions) {
  EXPECT_EQ(to_json(Q(-3, 6)).get<std::string>(), "-1/2");
  EXPECT_EQ(to_json(IndexSet{1, 2}).dump(), "[1,2]");
  EXPECT_EQ(to_json(fixtures::eta_var()).dump(), R"(["0/1","1/1"])");
  EXPECT_EQ(grid_csv("n", "x", {{Q(1), Q(1, 2)}, {Q(1), Q(-1)}}), "n,x=0,x=1\n0,1/1,1/2\n1,1/1,-1/1\n");
}

TEST(RunConfig, ParsesAndEchoes) {
  const RunConfig cfg = parse_config(base_config());
  EXPECT_EQ(cfg.params.a, Q(-5));
  EXPECT_EQ(cfg.Y, fixtures::eta_var());
  EXPECT_EQ(cfg.precision, 256);
  // c = 1/2 is not an integer, so the q -> 1 comparison is left out of the default set.
  EXPECT_FALSE(cfg.wants("qlimit"));
  EXPECT_TRUE(cfg.wants("ladder"));
  const Json echo = config_echo(cfg);
  EXPECT_EQ(echo["b"], "10/1");
  EXPECT_EQ(echo["Y"].dump(), R"(["0/1","1/1"])");
}

TEST(RunConfig, RejectsBadInput) {
  auto with = [](const char* key, Json v) {
    Json j = base_config();
    j[key] = std::move(v);
    return j;
  };
  EXPECT_EQ(config_error(with("colour", "red")), ErrorCode::ConfigError);
  EXPECT_EQ(config_error(with("q", "1/2")), ErrorCode::ConfigError);
  EXPECT_EQ(config_error(with("precision", 64)), ErrorCode::ConfigError);
  EXPECT_EQ(config_error(with("suites", Json::array({"base", "bogus"}))), ErrorCode::ConfigError);
  EXPECT_EQ(config_error(with("suites", Json::array({"qlimit"}))), ErrorCode::ConfigError);
  EXPECT_EQ(config_error(with("b", "ten")), ErrorCode::ConfigError);
  EXPECT_EQ(config_error(with("Y", Json::array({"1", "-1"}))), ErrorCode::ConfigError);
  EXPECT_EQ(config_error(with("D", Json::array({2, 1}))), ErrorCode::BadIndexSet);
  EXPECT_EQ(config_error(with("d", "50")), ErrorCode::InadmissibleParams);
  Json q = base_config();
  q["family"] = "qR";
  q["q"] = "3/0";
  EXPECT_EQ(config_error(q), ErrorCode::ConfigError);
  q["q"] = "3/2";
  EXPECT_EQ(config_error(q), ErrorCode::BadQ);
  Json missing = base_config();
  missing.erase("N");
  EXPECT_EQ(config_error(missing), ErrorCode::ConfigError);
}

TEST(RunSuite, LadderSkippedWhenNotRequested) {
  Json j = base_config();
  j["suites"] = Json::array({"base", "mi", "recurrence", "dual", "closure", "commute", "shape"});
  const RunReport rep = run_suite(parse_config(j));
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.json["status"], "pass");
  EXPECT_EQ(suite(rep.json, "ladder"), nullptr);
  ASSERT_TRUE(rep.json.contains("notes"));
  EXPECT_NE(rep.json["notes"].dump().find("Y(0) = 0"), std::string::npos);
}

TEST(RunSuite, LadderDegenerateIsNotFailure) {
  const RunReport rep = run_suite(parse_config(base_config()));
  EXPECT_TRUE(rep.ok);
  const Json* ladder = suite(rep.json, "ladder");
  ASSERT_NE(ladder, nullptr);
  EXPECT_EQ((*ladder)["status"], "degenerate");
  EXPECT_NE((*ladder)["note"].get<std::string>().find("expected degenerate"), std::string::npos);
  ASSERT_EQ(rep.json["closure_evidence"].size(), 1u);
  EXPECT_EQ(rep.json["closure_evidence"][0]["closure_residual_zero"], true);
}

TEST(RunSuite, ClosedFormDetectedAndCompared) {
  Json j = base_config();
  j["Y"] = Json::array({"1"});
  j["suites"] = Json::array({"recurrence"});
  const RunReport rep = run_suite(parse_config(j));
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ((*suite(rep.json, "recurrence"))["data"]["closed_form"]["example"], "R:{1}/1");
}

TEST(RunSuite, QLimitSuite) {
  const Json j = Json::parse(R"({"family": "R", "N": 4, "b": "12", "c": "1", "d": "1", "D": [1], "suites": ["qlimit"]})");
  const RunReport rep = run_suite(parse_config(j));
  EXPECT_TRUE(rep.ok) << rep.json.dump(2);
  EXPECT_EQ((*suite(rep.json, "qlimit"))["data"]["rows"].size(), 4u);
}

TEST(RunSuite, ShapeSuiteControlAndDeformed) {
  Json j = Json::parse(R"({"family": "qR", "N": 5, "b": "1/10000", "c": "1/3", "d": "2/5", "q": "1/2", "suites": ["shape"]})");
  for (auto D : {Json::array(), Json::array({1})}) {
    j["D"] = D;
    const RunReport rep = run_suite(parse_config(j));
    EXPECT_TRUE(rep.ok) << rep.json.dump(2);
  }
}

TEST(RunSuite, Deterministic) {
  const RunConfig cfg = parse_config(base_config());
  EXPECT_EQ(run_suite(cfg).json.dump(2), run_suite(cfg).json.dump(2));
}

TEST(EmitTables, Spectrum) {
  const RunConfig cfg = parse_config(base_config());
  const auto files = emit_tables(cfg, "spectrum");
  ASSERT_EQ(files.size(), 1u);
  std::istringstream in(files[0].content);
  std::string line;
  long rows = -1;  // header
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 6);
}

TEST(EmitTables, PolysOfOriginalFamily) {
  Json j = base_config();
  j["D"] = Json::array();
  const auto files = emit_tables(parse_config(j), "polys");
  std::istringstream in(files.at(0).content);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.substr(0, 8), "n,x=0,x=");
  while (std::getline(in, line)) EXPECT_EQ(line.substr(line.find(',') + 1, 4), "1/1,");
}

TEST(EmitTables, RecurrenceRowsMatchClosedForm) {
  Json j = base_config();
  j["Y"] = Json::array({"1"});
  const RunConfig cfg = parse_config(j);
  const auto files = emit_tables(cfg, "rnk");
  const Json rows = Json::parse(files.at(1).content)["rows"];
  const ClosedForm cf = closed_form("R:{1}/1", cfg.params);
  const MISystem s = build_mi_system(cfg.params, cfg.D);
  const XPoly xp = build_X(s, cfg.Y);
  const Rational scale = compare_closed_form(cf, xp, extract_r(s, xp)).scale;
  for (const auto& row : rows)
    EXPECT_EQ(Rational(scale * parse_rational(row["r"].get<std::string>())),
              cf.r->get(row["n"].get<long>(), row["k"].get<long>()));
}

TEST(EmitTables, OtherKinds) {
  const RunConfig cfg = parse_config(base_config());
  const auto h = emit_tables(cfg, "hamiltonian");
  EXPECT_EQ(Json::parse(h.at(0).content)["h_sym"]["precision"], 256);
  EXPECT_EQ(emit_tables(cfg, "dual").size(), 2u);
  try {
    emit_tables(cfg, "plots");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConfigError);
  }
}
