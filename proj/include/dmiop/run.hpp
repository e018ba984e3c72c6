#pragma once

// Batch runs: config parsing, suite orchestration, report and table output.

#include <array>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dmiop/serialize.hpp"

namespace dmiop {

inline const std::vector<std::string>& suite_order() {
  static const std::vector<std::string> s{"base", "mi",      "recurrence", "dual", "closure",
                                          "ladder", "commute", "shape",      "qlimit"};
  return s;
}

inline const std::vector<std::string>& table_kinds() {
  static const std::vector<std::string> k{"polys", "rnk", "hamiltonian", "spectrum", "dual"};
  return k;
}

struct RunConfig {
  ParamSet params;
  IndexSet D;
  PolyEta Y;
  std::vector<std::string> Y_text;  // as given, for the echo
  long precision = kDefaultPrecision;
  std::vector<std::string> suites;  // canonical order
  std::vector<SICandidate> si_candidates;
  std::string out;  // output directory, empty for stdout
  std::vector<std::string> notes;  // suites dropped from the default set

  bool wants(const std::string& suite) const { return std::find(suites.begin(), suites.end(), suite) != suites.end(); }
};

namespace detail {

inline const Json& require(const Json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorCode::ConfigError, std::string("missing key '") + key + "'");
  return j.at(key);
}

inline Rational rational_field(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) fail(ErrorCode::ConfigError, std::string("'") + key + "' must be a \"p/q\" string");
  return parse_rational(v.get<std::string>());
}

inline long integer_field(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) fail(ErrorCode::ConfigError, std::string("'") + key + "' must be an integer");
  return v.get<long>();
}

}  // namespace detail

/// Parses and validates a config; any problem raises ConfigError (or the
/// parameter-specific code for inadmissible values).
inline RunConfig parse_config(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::ConfigError, "config must be a JSON object");
  static const std::set<std::string> known{"family", "N", "b", "c", "d", "q", "D", "Y",
                                           "precision", "suites", "si_candidates", "out"};
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) fail(ErrorCode::ConfigError, "unknown key '" + key + "'");

  RunConfig cfg;
  try {
    const std::string fam = detail::require(j, "family").get<std::string>();
    if (fam != "R" && fam != "qR") fail(ErrorCode::ConfigError, "family must be \"R\" or \"qR\"");
    const Family family = fam == "R" ? Family::R : Family::qR;
    const long N = detail::integer_field(j, "N");
    std::optional<Rational> q;
    if (family == Family::qR) q = detail::rational_field(j, "q");
    else if (j.contains("q")) fail(ErrorCode::ConfigError, "'q' is only meaningful for family qR");
    cfg.params = make_params(family, N, detail::rational_field(j, "b"), detail::rational_field(j, "c"),
                             detail::rational_field(j, "d"), q);

    if (j.contains("D")) {
      if (!j["D"].is_array()) fail(ErrorCode::ConfigError, "'D' must be an integer list");
      std::vector<long> ds;
      for (const auto& v : j["D"]) {
        if (!v.is_number_integer()) fail(ErrorCode::ConfigError, "'D' must be an integer list");
        ds.push_back(v.get<long>());
      }
      cfg.D = IndexSet(ds);
    }

    std::vector<Rational> ycoef;
    if (j.contains("Y")) {
      if (!j["Y"].is_array() || j["Y"].empty()) fail(ErrorCode::ConfigError, "'Y' must be a nonempty coefficient list");
      for (const auto& v : j["Y"]) {
        if (!v.is_string() && !v.is_number_integer()) fail(ErrorCode::ConfigError, "'Y' entries must be \"p/q\" strings");
        const std::string text = v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>());
        ycoef.push_back(parse_rational(text));
        cfg.Y_text.push_back(to_string(ycoef.back()));
      }
    } else {
      ycoef.push_back(Rational(1));
      cfg.Y_text.push_back("1/1");
    }
    cfg.Y = PolyEta(ycoef);
    if (cfg.Y.is_zero()) fail(ErrorCode::ConfigError, "'Y' must be a nonzero polynomial");
    for (const auto& c : cfg.Y.coeffs())
      if (c < 0) fail(ErrorCode::ConfigError, "'Y' coefficients must be non-negative for Hamiltonian suites");

    if (j.contains("precision")) cfg.precision = detail::integer_field(j, "precision");
    if (cfg.precision < kMinPrecision)
      fail(ErrorCode::ConfigError, "precision must be at least " + std::to_string(kMinPrecision) + " bits");

    std::set<std::string> wanted;
    if (j.contains("suites")) {
      if (!j["suites"].is_array()) fail(ErrorCode::ConfigError, "'suites' must be a list");
      for (const auto& v : j["suites"]) {
        const std::string name = v.get<std::string>();
        if (std::find(suite_order().begin(), suite_order().end(), name) == suite_order().end())
          fail(ErrorCode::ConfigError, "unknown suite '" + name + "'");
        wanted.insert(name);
      }
    } else {
      wanted.insert(suite_order().begin(), suite_order().end());
      const auto& pr = cfg.params;
      if (pr.is_q() || !is_integer(pr.b) || !is_integer(pr.c) || !is_integer(pr.d)) {
        wanted.erase("qlimit");
        cfg.notes.push_back("qlimit skipped: needs family R with integer b, c, d");
      }
    }
    for (const auto& s : suite_order())
      if (wanted.count(s)) cfg.suites.push_back(s);

    if (cfg.wants("qlimit")) q_partner(cfg.params, Rational(1, 2));  // rejects non-Racah or non-integer tuples

    if (j.contains("si_candidates")) {
      for (const auto& c : j["si_candidates"]) {
        for (const auto& [key, _] : c.items())
          if (key != "id" && key != "kb" && key != "kc" && key != "kd")
            fail(ErrorCode::ConfigError, "unknown si_candidates key '" + key + "'");
        cfg.si_candidates.push_back(
            {detail::require(c, "id").get<std::string>(), detail::integer_field(c, "kb"), detail::integer_field(c, "kc"),
             detail::integer_field(c, "kd")});
      }
    }
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
  } catch (const Json::exception& e) {
    fail(ErrorCode::ConfigError, e.what());
  }
  const auto violations = validate(cfg.params, cfg.D);
  if (!violations.empty())
    fail(ErrorCode::InadmissibleParams, describe(cfg.params) + " D=" + cfg.D.to_string() + " violates " +
                                            violations.front().chain + " (" + violations.front().detail + ")");
  return cfg;
}

inline RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ConfigError, "cannot read config " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    fail(ErrorCode::ConfigError, std::string("malformed JSON: ") + e.what());
  }
  return parse_config(j);
}

inline Json config_echo(const RunConfig& cfg) {
  Json j = to_json(cfg.params);
  j["D"] = to_json(cfg.D);
  j["Y"] = cfg.Y_text;
  j["precision"] = cfg.precision;
  j["suites"] = cfg.suites;
  return j;
}

/// Id of a closed-form example matching this configuration, if any.
inline std::optional<std::string> matching_example(const RunConfig& cfg) {
  const std::string fam(to_string(cfg.params.family));
  const auto& y = cfg.Y.coeffs();
  std::string ytag;
  if (y.size() == 1 && y[0] == 1) ytag = "1";
  else if (y.size() == 2 && y[0] == 0 && y[1] == 1) ytag = "eta";
  else return std::nullopt;
  const std::string id = fam + ":" + cfg.D.to_string() + "/" + ytag;
  const auto& ids = closed_form_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) return std::nullopt;
  return id;
}

/// Every object a run may need, built once in dependency order.
struct Pipeline {
  MISystem s;
  XPoly xp;
  RecTable t;
  DualTable dual;
  DualHamiltonian h;
  ExactMatrix E;

  static Pipeline build(const RunConfig& cfg) {
    Pipeline p;
    p.s = build_mi_system(cfg.params, cfg.D);
    p.xp = build_X(p.s, cfg.Y);
    p.t = extract_r(p.s, p.xp);
    p.dual = dual_values(p.s);
    p.h = build_hamiltonians(p.s, p.xp, p.t, p.dual, cfg.precision);
    p.E = coordinate_matrix(p.s);
    return p;
  }
};

enum class SuiteStatus { pass, fail, degenerate };

inline std::string_view to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::pass: return "pass";
    case SuiteStatus::fail: return "fail";
    case SuiteStatus::degenerate: return "degenerate";
  }
  return "fail";
}

struct SuiteResult {
  std::string name;
  SuiteStatus status = SuiteStatus::pass;
  std::string note;
  Json checks = Json::array();
  Json data = Json::object();

  void add(const CheckReport& rep) {
    checks.push_back(to_json(rep));
    if (!rep.ok()) status = SuiteStatus::fail;
  }
  void require(bool cond, const std::string& what) {
    checks.push_back(Json{{"name", what}, {"checked", 1}, {"failures", cond ? 0 : 1}});
    if (!cond) status = SuiteStatus::fail;
  }
};

struct RunReport {
  Json json;
  bool ok = true;
  std::vector<SuiteResult> suites;
};

namespace detail {

inline bool is_parameter_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::ConfigError:
    case ErrorCode::InadmissibleParams:
    case ErrorCode::BadQ:
    case ErrorCode::BadN:
    case ErrorCode::BadIndexSet:
    case ErrorCode::NonMonotone:
    case ErrorCode::NonPositiveWeight:
    case ErrorCode::NegativeYCoefficient:
      return true;
    default:
      return false;
  }
}

inline SuiteResult run_base(const RunConfig& cfg) {
  SuiteResult r{"base"};
  r.add(verify_base_ortho(cfg.params));
  r.add(verify_base_duality(cfg.params));
  r.add(verify_base_routes(cfg.params));
  r.add(verify_potentials(cfg.params));
  return r;
}

inline SuiteResult run_mi(const Pipeline& p) {
  SuiteResult r{"mi"};
  r.add(verify_ortho(p.s));
  r.add(verify_difference_eq(p.s));
  r.add(verify_structure(p.s));
  r.data["ell"] = p.s.ell;
  r.data["Xi"] = to_json(p.s.xi_poly);
  return r;
}

inline SuiteResult run_recurrence(const RunConfig& cfg, const Pipeline& p) {
  SuiteResult r{"recurrence"};
  const ParamSet var = p.s.pdn_var_params();
  r.add(verify_gprime(var, std::min<long>(4, static_cast<long>(*(p.s.xi_poly * cfg.Y).degree()) + 1)));
  r.add(verify_map_I(p.s.xi_poly * cfg.Y, var));
  r.require(xhat_minus1(p.xp, p.s) == p.xp(-1), "X(-1) closed form");
  r.add(verify_recurrence(p.s, p.xp, p.t));
  const CheckReport neg = verify_recurrence(p.s, p.xp, p.t, RecMode::PolynomialEverywhere);
  r.require(!neg.ok(), "polynomial identity fails beyond n = N-L (negative control)");
  if (auto id = matching_example(cfg)) {
    const ClosedForm cf = closed_form(*id, cfg.params);
    const ClosedFormComparison cmp = compare_closed_form(cf, p.xp, p.t);
    r.add(cmp.X);
    r.add(cmp.stated_factor);
    if (cf.r) r.add(cmp.r);
    r.data["closed_form"] = Json{{"example", *id}, {"scale", to_string(cmp.scale)}};
  }
  r.data["L"] = p.xp.L;
  r.data["X"] = to_json(p.xp.poly);
  r.data["X(-1)"] = to_string(p.xp(-1));
  return r;
}

inline SuiteResult run_dual(const Pipeline& p) {
  SuiteResult r{"dual"};
  r.add(verify_dual_structure(p.dual));
  r.add(dual_ortho(p.s, p.dual));
  r.add(verify_spectrum(p.h));
  return r;
}

inline SuiteResult run_closure(const Pipeline& p, Json& evidence, const RunConfig& cfg) {
  SuiteResult r{"closure"};
  const ClosureTriple c = solve_closure(p.h, p.dual);
  const ClosureNodeReport nodes = verify_closure_nodes(p.h, p.dual, c);
  r.add(nodes.nodes);
  const CheckReport rel = verify_closure(p.h, p.E, c);
  r.add(rel);
  r.add(verify_spectral_fn(p.h, c.R0, "R0"));
  r.data["triple"] = to_json(c);
  r.data["off_grid_node_conditions_fail"] = nodes.off_grid_differs;
  evidence.push_back(Json{{"family", std::string(to_string(cfg.params.family))},
                          {"N", cfg.params.N},
                          {"D", to_json(cfg.D)},
                          {"Y", cfg.Y_text},
                          {"closure_residual_zero", rel.ok()}});
  return r;
}

inline SuiteResult run_ladder(const Pipeline& p) {
  SuiteResult r{"ladder"};
  try {
    const ClosureTriple c = solve_closure(p.h, p.dual);
    const LadderPair lp = build_ladder(p.h, p.dual, p.E, c);
    r.add(verify_ladder(p.h, p.dual, c, lp));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularR0) throw;
    r.status = SuiteStatus::degenerate;
    r.note = "R0 vanishes on the spectrum because Y(0) = 0 makes X(-1) = 0; ladder operators are undefined here (expected degenerate case)";
  }
  return r;
}

inline SuiteResult run_commute(const RunConfig& cfg, const Pipeline& p) {
  SuiteResult r{"commute"};
  std::vector<PolyEta> partners{cfg.Y * PolyEta(std::vector<Rational>{Rational(0), Rational(1)})};
  const PolyEta one(std::vector<Rational>{Rational(1)});
  if (!(cfg.Y == one)) partners.push_back(one);
  for (const auto& y2 : partners) {
    const XPoly x2 = build_X(p.s, y2);
    const RecTable t2 = extract_r(p.s, x2);
    CheckReport rep = commutator_check(p.h.h_tilde, build_hamiltonians(p.s, x2, t2, p.dual, cfg.precision).h_tilde);
    rep.name += " with Y = " + to_json(y2).dump();
    r.add(rep);
  }
  return r;
}

inline SuiteResult run_shape(const RunConfig& cfg, const Pipeline& p) {
  SuiteResult r{"shape"};
  const UpperFactor f = factor_upper(p.h.h_sym);
  const long N = p.s.N();
  const BigReal tol = BigReal::exp2(-cfg.precision / 2, cfg.precision) * max_abs(p.h.h_sym, cfg.precision);
  bool last_zero = true;
  for (long y = 0; y <= N; ++y)
    if (abs(f.A(N, y)) > tol) last_zero = false;
  r.require(last_zero, "last row of the upper factor vanishes");
  std::vector<SICandidate> cands = builtin_candidates();
  cands.insert(cands.end(), cfg.si_candidates.begin(), cfg.si_candidates.end());
  const SIReport si = si_test(p.s, p.xp, p.h, cands);
  r.data["candidates"] = to_json(si);
  if (p.s.M > 0) {
    r.require(!si.any_spectral_pass(), "no candidate satisfies the spectral condition (M >= 1)");
  } else {
    r.note = "M = 0 control";
    const auto& c = si.candidates[2];
    const Json expected = cfg.params.is_q() ? to_json(Rational(1 / cfg.params.q)) : to_json(Rational(1));
    if (cfg.Y == PolyEta(std::vector<Rational>{Rational(1)})) {
      r.require(c.spectral_ok, "delta+d candidate satisfies the spectral condition");
      r.require(to_json(c.kappa) == expected, "kappa of the control candidate");
    }
  }
  return r;
}

inline SuiteResult run_qlimit(const RunConfig& cfg) {
  SuiteResult r{"qlimit"};
  const QLimitReport q = qlimit_test(cfg.params, cfg.D, 3, 6, cfg.precision);
  r.require(q.monotone, "differences decrease monotonically in k");
  r.require(q.within_tolerance, "differences below 10^(2-k)");
  r.data = to_json(q);
  return r;
}

}  // namespace detail

/// Runs the requested suites in dependency order.  A parameter problem
/// discovered while building raises (exit 2); verification failures are
/// recorded in the report (exit 1).
inline RunReport run_suite(const RunConfig& cfg) {
  RunReport rep;
  Json evidence = Json::array();
  std::optional<Pipeline> pipe;
  const bool needs_pipeline = std::any_of(cfg.suites.begin(), cfg.suites.end(), [](const std::string& s) {
    return s != "base" && s != "qlimit";
  });
  if (needs_pipeline) pipe = Pipeline::build(cfg);

  for (const auto& name : cfg.suites) {
    SuiteResult r{name};
    try {
      if (name == "base") r = detail::run_base(cfg);
      else if (name == "mi") r = detail::run_mi(*pipe);
      else if (name == "recurrence") r = detail::run_recurrence(cfg, *pipe);
      else if (name == "dual") r = detail::run_dual(*pipe);
      else if (name == "closure") r = detail::run_closure(*pipe, evidence, cfg);
      else if (name == "ladder") r = detail::run_ladder(*pipe);
      else if (name == "commute") r = detail::run_commute(cfg, *pipe);
      else if (name == "shape") r = detail::run_shape(cfg, *pipe);
      else if (name == "qlimit") r = detail::run_qlimit(cfg);
    } catch (const Error& e) {
      if (detail::is_parameter_error(e.code())) throw;
      r.status = SuiteStatus::fail;
      r.note = e.what();
    }
    if (r.status == SuiteStatus::fail) rep.ok = false;
    rep.suites.push_back(std::move(r));
  }

  rep.json["config"] = config_echo(cfg);
  Json notes = cfg.notes;
  if (!cfg.wants("ladder") && cfg.Y.coeffs().front() == 0)
    notes.push_back("ladder not run: Y(0) = 0 makes R0 vanish on the spectrum");
  if (!notes.empty()) rep.json["notes"] = std::move(notes);
  Json suites = Json::array();
  for (const auto& r : rep.suites) {
    Json j{{"suite", r.name}, {"status", std::string(to_string(r.status))}};
    if (!r.note.empty()) j["note"] = r.note;
    j["checks"] = r.checks;
    if (!r.data.empty()) j["data"] = r.data;
    suites.push_back(std::move(j));
  }
  rep.json["suites"] = std::move(suites);
  rep.json["closure_evidence"] = std::move(evidence);
  rep.json["status"] = rep.ok ? "pass" : "fail";
  return rep;
}

struct TableFile {
  std::string name;
  std::string content;
};

/// Tables of one kind: CSV for grid values, JSON for coefficient data.
inline std::vector<TableFile> emit_tables(const RunConfig& cfg, const std::string& what) {
  if (std::find(table_kinds().begin(), table_kinds().end(), what) == table_kinds().end())
    fail(ErrorCode::ConfigError, "unknown table kind '" + what + "'");
  const Pipeline p = Pipeline::build(cfg);
  const long N = p.s.N();
  std::vector<TableFile> out;
  if (what == "polys") {
    out.push_back({"polys.csv", grid_csv("n", "x", p.s.pdn_grid)});
    Json j{{"config", config_echo(cfg)}, {"variable", "eta(x; lambda+M delta)"}, {"Xi", to_json(p.s.xi_poly)}};
    Json polys = Json::array();
    for (const auto& P : p.s.pdn_polys) polys.push_back(to_json(P));
    j["P"] = std::move(polys);
    j["d_sq"] = to_json(p.s.dDn_sq);
    out.push_back({"polys.json", j.dump(2) + "\n"});
  } else if (what == "rnk") {
    std::string csv = "n,k,r\n";
    for (const auto& [nk, r] : p.t.entries())
      csv += std::to_string(nk.first) + "," + std::to_string(nk.second) + "," + to_string(r) + "\n";
    out.push_back({"rnk.csv", csv});
    Json j{{"config", config_echo(cfg)}, {"L", p.t.L()}, {"X", to_json(p.xp.poly)}, {"rows", to_json(p.t)}};
    out.push_back({"rnk.json", j.dump(2) + "\n"});
  } else if (what == "hamiltonian") {
    Json j{{"config", config_echo(cfg)},
           {"h_tilde", to_json(p.h.h_tilde)},
           {"h_sym", to_json(p.h.h_sym, cfg.precision)}};
    out.push_back({"hamiltonian.json", j.dump(2) + "\n"});
  } else if (what == "spectrum") {
    std::string csv = "n,X\n";
    for (long n = 0; n <= N; ++n) csv += std::to_string(n) + "," + to_string(p.h.energies[n]) + "\n";
    out.push_back({"spectrum.csv", csv});
  } else {
    out.push_back({"dual.csv", grid_csv("x", "n", p.dual.q_vals)});
    std::string abc = "x,A,B,C\n";
    for (long x = 0; x <= N; ++x)
      abc += std::to_string(x) + "," + to_string(p.dual.A[x]) + "," + to_string(p.dual.B[x]) + "," +
             to_string(p.dual.C[x]) + "\n";
    out.push_back({"dual_abc.csv", abc});
  }
  return out;
}

}  // namespace dmiop
