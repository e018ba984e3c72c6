// dmiop verify|tables --config <path> [--what <kind>] [--precision <bits>] [--out <dir>]
// Exit status: 0 all suites pass, 1 verification failure, 2 bad config or parameters.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "dmiop/dmiop.hpp"

namespace fs = std::filesystem;
using namespace dmiop;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

RunConfig load(const std::string& path, long precision, const std::string& out) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ConfigError, "cannot read config " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    fail(ErrorCode::ConfigError, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorCode::ConfigError, "config must be a JSON object");
  if (precision > 0) j["precision"] = precision;
  if (!out.empty()) j["out"] = out;
  return parse_config(j);
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::ConfigError, "cannot write " + path.string());
  f << content;
}

fs::path out_dir(const RunConfig& cfg) {
  fs::path dir(cfg.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(ErrorCode::ConfigError, "cannot create " + dir.string() + ": " + ec.message());
  return dir;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-indexed (q-)Racah verification lab"};
  app.require_subcommand(1);
  std::string config, what, out;
  long precision = 0;

  auto* verify = app.add_subcommand("verify", "run verification suites and write a JSON report");
  auto* tables = app.add_subcommand("tables", "emit CSV/JSON tables");
  for (auto* sub : {verify, tables}) {
    sub->add_option("--config", config, "JSON config file")->required();
    sub->add_option("--precision", precision, "float precision in bits (overrides config)");
    sub->add_option("--out", out, "output directory (overrides config; default stdout)");
  }
  tables->add_option("--what", what, "table kind")->required()->check(CLI::IsMember(table_kinds()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    const RunConfig cfg = load(config, precision, out);
    if (verify->parsed()) {
      const RunReport rep = run_suite(cfg);
      const std::string text = rep.json.dump(2) + "\n";
      if (cfg.out.empty()) std::cout << text;
      else write_file(out_dir(cfg) / "report.json", text);
      std::cerr << "status: " << (rep.ok ? "pass" : "fail") << "\n";
      return rep.ok ? 0 : kExitFail;
    }
    const auto files = emit_tables(cfg, what);
    if (cfg.out.empty()) {
      for (const auto& f : files) std::cout << "# " << f.name << "\n" << f.content;
    } else {
      const fs::path dir = out_dir(cfg);
      for (const auto& f : files) write_file(dir / f.name, f.content);
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return detail::is_parameter_error(e.code()) ? kExitConfig : kExitFail;
  }
}
