#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("dmiop_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_config(const std::string& name, const std::string& body) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << body;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args, const std::string& tag) {
  const fs::path out = scratch() / (tag + ".stdout");
  const std::string cmd = std::string(DMIOP_CLI) + " " + args + " > " + out.string() + " 2> " +
                          (scratch() / (tag + ".stderr")).string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

const char* kYEta =
    R"({"family": "R", "N": 5, "b": "10", "c": "1/2", "d": "2/5", "D": [1], "Y": ["0", "1"],
        "suites": ["base", "mi", "recurrence", "dual", "closure", "commute", "shape"]})";

}  // namespace

TEST(Cli, VerifyPassesWithExitZero) {
  const fs::path cfg = write_config("eta.json", kYEta);
  const Result r = run("verify --config " + cfg.string(), "eta");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("\"status\": \"pass\""), std::string::npos);
}

TEST(Cli, ReportsAreByteIdentical) {
  const fs::path cfg = write_config("eta2.json", kYEta);
  const Result a = run("verify --config " + cfg.string(), "det_a");
  const Result b = run("verify --config " + cfg.string(), "det_b");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

TEST(Cli, LadderDegenerateStillExitsZero) {
  const fs::path cfg = write_config(
      "ladder.json", R"({"family": "R", "N": 5, "b": "10", "c": "1/2", "d": "2/5", "D": [1], "Y": ["0", "1"], "suites": ["ladder"]})");
  const Result r = run("verify --config " + cfg.string(), "ladder");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"degenerate\""), std::string::npos);
}

TEST(Cli, MalformedRationalExitsTwo) {
  const fs::path cfg = write_config(
      "badq.json", R"({"family": "qR", "N": 4, "b": "1/1000", "c": "1/3", "d": "2/5", "q": "3/0", "D": [1]})");
  EXPECT_EQ(run("verify --config " + cfg.string(), "badq").code, 2);
}

TEST(Cli, ConfigProblemsExitTwo) {
  const fs::path unknown = write_config("unknown.json", R"({"family": "R", "N": 4, "b": "10", "c": "1/2", "d": "2/5", "extra": 1})");
  EXPECT_EQ(run("verify --config " + unknown.string(), "unknown").code, 2);
  const fs::path inadmissible = write_config("inad.json", R"({"family": "R", "N": 4, "b": "10", "c": "1/2", "d": "40"})");
  EXPECT_EQ(run("verify --config " + inadmissible.string(), "inad").code, 2);
  EXPECT_EQ(run("verify --config " + (scratch() / "missing.json").string(), "missing").code, 2);
  const fs::path garbage = write_config("garbage.json", "{not json");
  EXPECT_EQ(run("verify --config " + garbage.string(), "garbage").code, 2);
  const fs::path ok = write_config("ok.json", kYEta);
  EXPECT_EQ(run("verify --config " + ok.string() + " --precision 64", "lowprec").code, 2);
  EXPECT_EQ(run("tables --config " + ok.string() + " --what plots", "badwhat").code, 2);
  EXPECT_EQ(run("frobnicate", "badsub").code, 2);
}

TEST(Cli, VerificationFailureExitsOne) {
  // Large b inflates the polynomial values, so the absolute q -> 1 tolerance
  // 10^(2-k) is missed at k = 3 even though the error still falls like 10^-k.
  const fs::path cfg = write_config(
      "fail.json", R"({"family": "R", "N": 6, "b": "2000", "c": "1", "d": "1", "D": [1], "suites": ["qlimit"]})");
  const Result r = run("verify --config " + cfg.string(), "fail");
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find("\"status\": \"fail\""), std::string::npos);
}

TEST(Cli, OutDirectoryAndTables) {
  const fs::path cfg = write_config("tables.json", kYEta);
  const fs::path out = scratch() / "out";
  EXPECT_EQ(run("verify --config " + cfg.string() + " --out " + out.string(), "outdir").code, 0);
  EXPECT_TRUE(fs::exists(out / "report.json"));
  for (const std::string what : {"polys", "rnk", "hamiltonian", "spectrum", "dual"})
    EXPECT_EQ(run("tables --config " + cfg.string() + " --what " + what + " --out " + out.string(), "t_" + what).code, 0);
  for (const char* f : {"polys.csv", "polys.json", "rnk.csv", "rnk.json", "hamiltonian.json", "spectrum.csv", "dual.csv", "dual_abc.csv"})
    EXPECT_TRUE(fs::exists(out / f)) << f;
  const Result spec = run("tables --config " + cfg.string() + " --what spectrum", "stdout_tables");
  EXPECT_EQ(spec.code, 0);
  EXPECT_EQ(spec.out.rfind("# spectrum.csv\nn,X\n0,0/1\n", 0), 0u) << spec.out;
}
