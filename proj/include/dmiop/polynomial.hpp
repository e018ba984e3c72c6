#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dmiop/rational.hpp"

namespace dmiop {

/// Dense univariate polynomial; coefficient k multiplies var^k.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and no degree.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial constant(const T& value) { return Polynomial(std::vector<T>{value}); }
  /// The monomial var^k.
  static Polynomial monomial(std::size_t k, const T& coeff = T(1)) {
    std::vector<T> c(k + 1, T(0));
    c[k] = coeff;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  std::optional<std::size_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  template <class U>
  U operator()(const U& at) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= at;
      acc += *it;
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// p(alpha * var + beta).
  Polynomial compose_affine(const T& alpha, const T& beta) const {
    Polynomial lin(std::vector<T>{beta, alpha});
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using PolyEta = Polynomial<Rational>;

/// Unique polynomial of degree < nodes.size() through (nodes[i], values[i]),
/// by Newton divided differences.  Nodes must be pairwise distinct.
inline PolyEta interpolate(std::span<const Rational> nodes, std::span<const Rational> values) {
  const std::size_t n = nodes.size();
  if (values.size() != n) fail(ErrorCode::ShapeMismatch, "interpolate: nodes/values length differ");
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational gap = nodes[i] - nodes[i - level];
      if (gap == 0) fail(ErrorCode::SingularMatrix, "interpolate: coincident nodes");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  PolyEta acc;
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * PolyEta(std::vector<Rational>{Rational(-nodes[i]), Rational(1)}) + PolyEta::constant(dd[i]);
  }
  return acc;
}

inline std::vector<std::string> to_strings(const PolyEta& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

}  // namespace dmiop
