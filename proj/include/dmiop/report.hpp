#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dmiop/rational.hpp"

namespace dmiop {

struct Failure {
  std::string where;
  Rational residual;  // lhs - rhs
};

/// Outcome of an exact identity check: how many instances were compared
/// and which ones left a nonzero residual.
struct CheckReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }

  void expect_equal(const std::string& where, const Rational& lhs, const Rational& rhs) {
    ++checked;
    if (lhs != rhs) failures.push_back({where, Rational(lhs - rhs)});
  }
  void expect_zero(const std::string& where, const Rational& value) { expect_equal(where, value, Rational(0)); }
  void expect_true(const std::string& where, bool cond) {
    ++checked;
    if (!cond) failures.push_back({where, Rational(1)});
  }

  void absorb(const CheckReport& other) {
    checked += other.checked;
    for (const auto& f : other.failures) failures.push_back({other.name + ": " + f.where, f.residual});
  }

  std::string summary() const {
    std::string s = name + ": " + std::to_string(checked) + " checks, " + std::to_string(failures.size()) + " failures";
    if (!failures.empty()) s += " (first at " + failures.front().where + ", residual " + to_string(failures.front().residual) + ")";
    return s;
  }
};

inline std::string at(long i) { return "(" + std::to_string(i) + ")"; }
inline std::string at(long i, long j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace dmiop
