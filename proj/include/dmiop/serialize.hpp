#pragma once

// JSON and CSV renderings.  Every exact value is a "p/q" string; real
// values are decimal strings next to their precision in bits.

#include <sstream>
#include <string>

#include <json.hpp>

#include "dmiop/closure.hpp"
#include "dmiop/comparators.hpp"
#include "dmiop/qlimit.hpp"
#include "dmiop/shape_invariance.hpp"

namespace dmiop {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(const ParamSet& p) {
  Json j;
  j["family"] = std::string(to_string(p.family));
  j["N"] = p.N;
  j["a"] = to_string(p.a);
  j["b"] = to_string(p.b);
  j["c"] = to_string(p.c);
  j["d"] = to_string(p.d);
  if (p.is_q()) j["q"] = to_string(p.q);
  return j;
}

inline Json to_json(const IndexSet& D) { return Json(D.values()); }

inline Json to_json(const PolyEta& p) { return Json(to_strings(p)); }

inline Json to_json(const GridVec& v) {
  Json j = Json::array();
  for (const auto& r : v) j.push_back(to_string(r));
  return j;
}

inline Json to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const RealMatrix& m, long precision) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return Json{{"precision", precision}, {"entries", std::move(rows)}};
}

inline Json to_json(const RecTable& t) {
  Json rows = Json::array();
  for (const auto& [nk, r] : t.entries()) rows.push_back(Json{{"n", nk.first}, {"k", nk.second}, {"r", to_string(r)}});
  return rows;
}

inline Json to_json(const CheckReport& rep) {
  Json j{{"name", rep.name}, {"checked", rep.checked}, {"failures", rep.failures.size()}};
  if (!rep.failures.empty())
    j["first_failure"] = Json{{"where", rep.failures.front().where}, {"residual", to_string(rep.failures.front().residual)}};
  return j;
}

inline Json to_json(const ClosureTriple& c) {
  return Json{{"R0", to_json(c.R0)}, {"R1", to_json(c.R1)}, {"R-1", to_json(c.Rm1)}};
}

inline Json to_json(const SIReport& rep) {
  Json out = Json::array();
  for (const auto& c : rep.candidates) {
    Json j{{"candidate", c.id},
           {"partner", to_json(c.partner)},
           {"kappa", to_string(c.kappa)},
           {"spectral_condition", c.spectral_ok}};
    if (c.first_fail_x) {
      j["first_failing_x"] = *c.first_fail_x;
      j["mismatch"] = to_string(c.mismatch);
    }
    j["matrix_residual"] = c.matrix_residual;
    j["precision"] = c.precision;
    out.push_back(std::move(j));
  }
  return out;
}

inline Json to_json(const QLimitReport& rep) {
  Json rows = Json::array();
  for (const auto& r : rep.rows)
    rows.push_back(Json{{"k", r.k},
                        {"q", to_string(r.q)},
                        {"max_diff_P", r.diff_P.to_string()},
                        {"max_diff_Q", r.diff_Q.to_string()},
                        {"tolerance", r.tolerance.to_string()}});
  return Json{{"rows", std::move(rows)}, {"monotone", rep.monotone}, {"within_tolerance", rep.within_tolerance}};
}

/// CSV with a header row; the first column holds the row index.
inline std::string grid_csv(const std::string& row_name, const std::string& col_name, const std::vector<GridVec>& rows) {
  std::ostringstream out;
  out << row_name;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols; ++c) out << ',' << col_name << '=' << c;
  out << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << r;
    for (const auto& v : rows[r]) out << ',' << to_string(v);
    out << '\n';
  }
  return out.str();
}

}  // namespace dmiop
