#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmiop/rational.hpp"

namespace dmiop {

enum class Family { R, qR };

inline std::string_view to_string(Family f) { return f == Family::R ? "R" : "qR"; }

/// Parameter bundle for the Racah (R) or q-Racah (qR) family.  For R the
/// slots hold the components of lambda directly, for qR they hold q^lambda.
/// Shifted copies keep `N` and act purely as formula arguments.
struct ParamSet {
  Family family = Family::R;
  long N = 1;
  Rational a, b, c, d;
  Rational q = 1;  // meaningful for qR only

  bool is_q() const { return family == Family::qR; }

  /// d~ = a+b+c-d-1 (R) or a b c d^{-1} q^{-1} (qR).
  Rational dtilde() const {
    if (!is_q()) return Rational(a + b + c - d - 1);
    return Rational(a * b * c / (d * q));
  }

  /// q^k (qR); unused for R.
  Rational qpow(long k) const { return ipow(q, k); }

  friend bool operator==(const ParamSet& x, const ParamSet& y) {
    return x.family == y.family && x.N == y.N && x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d &&
           (!x.is_q() || x.q == y.q);
  }
};

/// Strictly increasing multi-index set {d_1 < ... < d_M}, d_j >= 1.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<long> ds) : d_(std::move(ds)) {
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (d_[i] < 1) fail(ErrorCode::BadIndexSet, "multi-index entries must be positive");
      if (i > 0 && d_[i] <= d_[i - 1]) fail(ErrorCode::BadIndexSet, "multi-index set must be strictly increasing");
    }
  }
  IndexSet(std::initializer_list<long> ds) : IndexSet(std::vector<long>(ds)) {}

  const std::vector<long>& values() const { return d_; }
  long M() const { return static_cast<long>(d_.size()); }
  bool empty() const { return d_.empty(); }
  long max() const { return d_.empty() ? 0 : d_.back(); }
  long operator[](std::size_t j) const { return d_[j]; }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < d_.size(); ++i) s += (i ? "," : "") + std::to_string(d_[i]);
    return s + "}";
  }
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<long> d_;
};

/// l_D = sum d_j - M(M-1)/2.
inline long ell(const IndexSet& D) {
  long s = 0;
  for (long v : D.values()) s += v;
  return s - D.M() * (D.M() - 1) / 2;
}

inline ParamSet make_params(Family family, long N, const Rational& b, const Rational& c, const Rational& d,
                            std::optional<Rational> q = std::nullopt) {
  if (N < 1) fail(ErrorCode::BadN, "grid size N must be >= 1");
  ParamSet p;
  p.family = family;
  p.N = N;
  p.b = b;
  p.c = c;
  p.d = d;
  if (family == Family::R) {
    p.a = -N;
  } else {
    if (!q || *q <= 0 || *q >= 1) fail(ErrorCode::BadQ, "q must lie in (0,1)");
    p.q = *q;
    p.a = ipow(*q, -N);
  }
  return p;
}

enum class ShiftKind { delta, tilde };

/// lambda + k delta  or  lambda + k delta~ (delta~ = (0,0,1,1)).
inline ParamSet shift(const ParamSet& p, long k, ShiftKind kind) {
  ParamSet s = p;
  if (!p.is_q()) {
    if (kind == ShiftKind::delta) {
      s.a += k;
      s.b += k;
    }
    s.c += k;
    s.d += k;
  } else {
    const Rational f = ipow(p.q, k);
    if (kind == ShiftKind::delta) {
      s.a *= f;
      s.b *= f;
    }
    s.c *= f;
    s.d *= f;
  }
  return s;
}

/// Twist t(lambda) = (l4-l1+1, l4-l2+1, l3, l4); the qR image is (dq/a, dq/b, c, d).
inline ParamSet twist(const ParamSet& p) {
  ParamSet t = p;
  if (!p.is_q()) {
    t.a = p.d - p.a + 1;
    t.b = p.d - p.b + 1;
  } else {
    t.a = p.d * p.q / p.a;
    t.b = p.d * p.q / p.b;
  }
  return t;
}

struct Violation {
  std::string chain;
  std::string detail;
};

/// Literal check of the admissible parameter ranges; empty result means
/// admissible.  Empty D uses max(D) = 0.
inline std::vector<Violation> validate(const ParamSet& p, const IndexSet& D) {
  std::vector<Violation> out;
  const long maxD = D.max();
  auto add = [&](std::string chain, std::string detail) { out.push_back({std::move(chain), std::move(detail)}); };
  if (!p.is_q()) {
    const Rational ab = p.a + p.b;
    if (!(0 < p.d && p.d < ab)) add("0<d<a+b", "d=" + to_string(p.d) + ", a+b=" + to_string(ab));
    if (!(0 < p.c && p.c < 1 + p.d)) add("0<c<1+d", "c=" + to_string(p.c) + ", 1+d=" + to_string(Rational(1 + p.d)));
    if (!(p.d + maxD + 1 < ab))
      add("d+max(D)+1<a+b", "d+max(D)+1=" + to_string(Rational(p.d + maxD + 1)) + ", a+b=" + to_string(ab));
  } else {
    const Rational ab = p.a * p.b;
    if (!(0 < ab && ab < p.d && p.d < 1))
      add("0<ab<d<1", "ab=" + to_string(ab) + ", d=" + to_string(p.d));
    const Rational qd = p.q * p.d;
    if (!(qd < p.c && p.c < 1)) add("qd<c<1", "qd=" + to_string(qd) + ", c=" + to_string(p.c));
    const Rational bound = p.d * ipow(p.q, maxD + 1);
    if (!(ab < bound)) add("ab<dq^(max(D)+1)", "ab=" + to_string(ab) + ", dq^(max(D)+1)=" + to_string(bound));
  }
  return out;
}

inline std::string describe(const ParamSet& p) {
  std::string s = std::string(to_string(p.family)) + "(N=" + std::to_string(p.N) + ", a=" + to_string(p.a) +
                  ", b=" + to_string(p.b) + ", c=" + to_string(p.c) + ", d=" + to_string(p.d);
  if (p.is_q()) s += ", q=" + to_string(p.q);
  return s + ")";
}

}  // namespace dmiop
