#pragma once

// Closed-form X and r_{n,k} for a handful of small examples, used as
// independent comparators for build_X and extract_r.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dmiop/recurrence.hpp"

namespace dmiop {

struct ClosedForm {
  std::string id;
  Family family = Family::R;
  IndexSet D;
  PolyEta Y;
  PolyEta X;                       // in eta(x; lambda+M delta)
  Rational factor;                 // X = factor * I[Xi_D Y]
  std::optional<RecTable> r;       // only for the two L=2 examples
};

inline const std::vector<std::string>& closed_form_ids() {
  static const std::vector<std::string> ids{"R:{1}/1", "R:{2}/1", "R:{1,2}/1", "R:{1}/eta", "qR:{1}/1", "qR:{2}/1"};
  return ids;
}

namespace detail {

inline PolyEta cubic_x(const Rational& c1, const Rational& c2, const Rational& c3) {
  return PolyEta(std::vector<Rational>{Rational(0), c1, c2, c3});
}

inline RecTable fill_band2(long N, const std::function<Rational(long, long)>& r) {
  RecTable t(N, 2);
  for (long n = 0; n <= N; ++n) {
    Rational side = 0;
    for (long k : {-2L, -1L, 1L, 2L}) {
      const Rational v = r(n, k);
      side += v;
      if (t.in_band(n, k))
        t.set(n, k, v);
      else if (v != 0)
        fail(ErrorCode::CrossCheckMismatch, "closed-form r" + at(n, k) + " nonzero outside the band");
    }
    t.set(n, 0, Rational(-side));
  }
  return t;
}

inline ClosedForm racah_ex(const std::string& id, const ParamSet& p) {
  const Rational &a = p.a, &b = p.b, &c = p.c, &d = p.d;
  const Rational s1 = a + b, s2 = a * b, t1 = c + d, t2 = c * d;
  const Rational dt = p.dtilde();
  ClosedForm cf;
  cf.id = id;
  cf.family = Family::R;
  cf.Y = PolyEta(std::vector<Rational>{Rational(1)});
  if (id == "R:{1}/1") {
    cf.D = IndexSet{1};
    const Rational lead = 2 - s1 + t1;
    const Rational lin = -s1 * (2 * c + d + 2 * t2) + 2 * s2 * c + 2 * t1 + t2 * (5 + 2 * d) + d * d;
    cf.X = PolyEta(std::vector<Rational>{Rational(0), Rational(-lin), Rational(-lead)});
    cf.factor = -2 * c * (d - a + 1) * (d - b + 1);
    auto r = [&](long n, long k) -> Rational {
      const Rational m = n;
      switch (k) {
        case 2:
          return -lead * (c + m) * (c + m + 3) * pochhammer(a + m, 2) * pochhammer(b + m, 2) *
                 pochhammer(dt + m, 2) / pochhammer(dt + 2 * m, 4);
        case -2:
          return -lead * (dt - c + m - 3) * (dt - c + m) * pochhammer(dt - a + m - 1, 2) *
                 pochhammer(dt - b + m - 1, 2) * pochhammer(m - 1, 2) / pochhammer(dt + 2 * m - 3, 4);
        case 1:
          return -2 * (a + m) * (b + m) * (c + m) * (c + m + 2) * (dt - c + m) * (dt + m) /
                 ((dt + 2 * m + 3) * pochhammer(dt + 2 * m - 1, 3)) *
                 (-2 * lead * m * (m + dt + 1) + 2 * (1 - dt) * (1 + c - s2) + d * (1 - dt * dt));
        default:
          return -2 * m * (dt - a + m) * (dt - b + m) * (c + m) * (dt - c + m - 2) * (dt - c + m) /
                 ((dt + 2 * m - 3) * pochhammer(dt + 2 * m - 1, 3)) *
                 (-2 * lead * m * (m + dt - 1) + 2 * (1 + c - s2) + 2 * (s2 + c - dt) * dt + d * (1 - dt * dt));
      }
    };
    cf.r = fill_band2(p.N, r);
  } else if (id == "R:{2}/1") {
    cf.D = IndexSet{2};
    const Rational u = s1 - t1;
    const Rational c3 = (u - 4) * (u - 3);
    const Rational c2 = -(u - 3) * (3 * (1 + c) * (d - a) * (d - b) + 2 * (5 + 6 * c) * d - 2 * s1 * (2 + 3 * c) + 4 + 10 * c);
    const Rational c1 =
        (3 * c * c + 6 * c + 2) * d * d * (d - s1) * (d - s1) + (12 + 40 * c + 21 * c * c) * d * d * d +
        (22 + 88 * c + 50 * c * c - s1 * (16 + 55 * c + 30 * c * c) + s2 * (3 + 9 * c + 6 * c * c)) * d * d +
        (12 + 70 * c + 46 * c * c - s1 * (16 + 71 * c + 45 * c * c) + s1 * s1 * (4 + 15 * c + 9 * c * c) +
         3 * s2 * (3 + 10 * c + 7 * c * c) - 3 * s1 * s2 * (1 + c) * (1 + 2 * c)) *
            d +
        3 * (a - 2) * (a - 1) * (b - 2) * (b - 1) * c * (c + 1);
    cf.X = cubic_x(c1, c2, c3);
    cf.factor = 3 * c * (1 + c) * (d - a + 1) * (d - a + 2) * (d - b + 1) * (d - b + 2);
  } else if (id == "R:{1,2}/1") {
    cf.D = IndexSet{1, 2};
    const Rational u = s1 - t1;
    const Rational c3 = (u - 3) * (u - 2);
    const Rational c2 = -(u - 3) * (3 * (1 + c) * d * (d - s1) + (7 + 9 * c) * d + 2 + 4 * c - s1 - 3 * c * (s1 - s2));
    const Rational c1 =
        (2 + 6 * c + 3 * c * c) * d * d * (d - s1) * (d - s1) + (12 + 40 * c + 21 * c * c) * d * d * d +
        (22 + 89 * c + 50 * c * c - s1 * (14 + 55 * c + 30 * c * c) + 3 * s2 * c * (3 + 2 * c)) * d * d +
        (12 + 76 * c + 47 * c * c - s1 * (10 + 73 * c + 45 * c * c) + s1 * s1 * (2 + 15 * c + 9 * c * c) -
         3 * s1 * s2 * c * (3 + 2 * c) + 3 * s2 * c * (10 + 7 * c)) *
            d -
        3 * (s1 - s2 - 1) * c * (7 + 5 * c - s1 * (3 + 2 * c) + s2 * (1 + c));
    cf.X = cubic_x(c1, c2, c3);
    cf.factor = 3 * c * (c + 1) * (d - a + 1) * (d - a + 2) * (d - b + 1) * (d - b + 2);
  } else {
    cf.D = IndexSet{1};
    cf.Y = PolyEta(std::vector<Rational>{Rational(0), Rational(1)});
    const Rational tail = 2 * c - 2 + s1 + 3 * c * (s2 - s1);
    const Rational c3 = 2 * (t1 - s1 + 2);
    const Rational c2 = 3 * d * (1 + c) * (d - s1) + (5 + 9 * c) * d + tail;
    const Rational c1 = d * (d * (1 + 3 * c) * (d - s1) + (1 + 7 * c) * d + tail);
    cf.X = cubic_x(Rational(-c1), Rational(-c2), Rational(-c3));
    cf.factor = -6 * c * (d - a + 1) * (d - b + 1);
  }
  return cf;
}

inline ClosedForm qracah_ex(const std::string& id, const ParamSet& p) {
  const Rational &a = p.a, &b = p.b, &c = p.c, &d = p.d, &q = p.q;
  const Rational s1 = a + b, s2 = a * b, t1 = c + d, t2 = c * d;
  const Rational dt = p.dtilde();
  auto qp = [&](long k) { return ipow(q, k); };
  ClosedForm cf;
  cf.id = id;
  cf.family = Family::qR;
  cf.Y = PolyEta(std::vector<Rational>{Rational(1)});
  if (id == "qR:{1}/1") {
    cf.D = IndexSet{1};
    const Rational lead = 1 - t2 * q * q / s2;
    const Rational lin = q * q * (1 + q - 2 * c * q) * d * d / s2 -
                         (s1 * q * (1 + q) * (1 - c) + (1 - q) * (s2 + c * q * q)) * d / s2 + 2 - c * (1 + q);
    cf.X = PolyEta(std::vector<Rational>{Rational(0), Rational(-lin), Rational(-lead)});
    cf.factor = -(1 + q) * (1 - c) * (1 - d * q / a) * (1 - d * q / b);
    const Rational g1 = s2 * t1 + s1 * (1 - c) * d * q - t1 * d * q * q;
    const Rational g2 = (q + 1 / q) * d * (s1 * s2 * c + s2 * (1 - c) * t1 * q - s1 * t2 * q * q);
    auto r = [&](long n, long k) -> Rational {
      switch (k) {
        case 2:
          return -lead * (1 - c * qp(n)) * (1 - c * qp(n + 3)) * qpochhammer(a * qp(n), q, 2) *
                 qpochhammer(b * qp(n), q, 2) * qpochhammer(dt * qp(n), q, 2) / qpochhammer(dt * qp(2 * n), q, 4);
        case -2:
          return -d * d * q * q * lead * (1 - dt * qp(n - 3) / c) * (1 - dt * qp(n) / c) *
                 qpochhammer(dt * qp(n - 1) / a, q, 2) * qpochhammer(dt * qp(n - 1) / b, q, 2) *
                 qpochhammer(qp(n - 1), q, 2) / qpochhammer(dt * qp(2 * n - 3), q, 4);
        case 1:
          return -(1 + q) * (1 - a * qp(n)) * (1 - b * qp(n)) * (1 - c * qp(n)) * (1 - c * qp(n + 2)) *
                 (1 - dt * qp(n) / c) * (1 - dt * qp(n)) /
                 (s2 * d * (1 - dt * qp(2 * n + 3)) * qpochhammer(dt * qp(2 * n - 1), q, 3)) *
                 (-g1 * (s2 * c * qp(2 * n) + d) + g2 * qp(n));
        default:
          return -(1 + q) * (1 - qp(n)) * (1 - dt * qp(n) / a) * (1 - dt * qp(n) / b) * (1 - c * qp(n)) *
                 (1 - dt * qp(n - 2) / c) * (1 - dt * qp(n) / c) /
                 (s2 * (1 - dt * qp(2 * n - 3)) * qpochhammer(dt * qp(2 * n - 1), q, 3)) *
                 (-g1 * (s2 * c * qp(2 * n - 1) + d * q) + g2 * qp(n));
      }
    };
    cf.r = fill_band2(p.N, r);
  } else {
    cf.D = IndexSet{2};
    const Rational q3 = 1 + q + q * q;
    const Rational e = s2 - c * d * qp(3);
    const Rational c3 = e * (s2 - c * d * qp(4));
    const Rational c2 = e * (q3 * (qp(3) * d * d - q * (1 - c * q) * s1 * d - c * s2) - 3 * c * qp(5) * d * d -
                             (1 - q) * (1 - q) * (s2 - c * qp(3)) * d + 3 * s2);
    const Rational inner =
        qp(6) * (1 - 2 * c * q) * ipow(d, 4) -
        qp(3) * (q * (1 - c * q) * (1 + q - 2 * c * q) * s1 + (1 - q) * (s2 + c * qp(3))) * ipow(d, 3) +
        q * (q * q * (1 - c) * (1 - c * q) * s1 * s1 + (1 - q) * (1 - c * q) * (s2 + c * qp(3)) * s1 +
             q * (1 + q) * (1 + c * c * q * q) * s2) *
            d * d -
        (q * (1 - c * q) * (2 - (1 + q) * c) * s1 - (1 - q) * (s2 + qp(3) * c) * c) * s2 * d -
        (2 - c * q) * c * s2 * s2;
    const Rational c1 = q3 * inner + 3 * qp(9) * c * c * ipow(d, 4) +
                        qp(4) * (1 - q) * ((2 + q) * s2 + q * q * (1 + 2 * q * q) * c) * c * ipow(d, 3) -
                        q * ((1 - q) * (1 - q) * (s2 * s2 + qp(5) * c * c) + q * (1 + q) * (1 + 4 * q * q + qp(4)) * c * s2) * d * d -
                        s2 * (1 - q) * ((2 + q * q) * s2 + qp(3) * (1 + 2 * q) * c) * d + 3 * s2 * s2;
    cf.X = cubic_x(c1, c2, c3);
    cf.factor = q3 * (1 - c) * (1 - c * q) * (a - d * q) * (a - d * q * q) * (b - d * q) * (b - d * q * q);
  }
  return cf;
}

}  // namespace detail

/// Closed forms by example id, evaluated at concrete parameters.
inline ClosedForm closed_form(const std::string& id, const ParamSet& p) {
  const auto& ids = closed_form_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) fail(ErrorCode::UnknownExample, "unknown example " + id);
  const bool q_example = id.rfind("qR:", 0) == 0;
  if (q_example != p.is_q()) fail(ErrorCode::UnknownExample, id + " does not belong to family " + std::string(to_string(p.family)));
  return q_example ? detail::qracah_ex(id, p) : detail::racah_ex(id, p);
}

struct ClosedFormComparison {
  Rational scale;   // closed-form X divided by the constructed X, fixed on the eta^1 coefficient
  CheckReport X{"closed-form X"};
  CheckReport stated_factor{"closed-form normalization"};
  CheckReport r{"closed-form r"};
};

/// Compares a closed form against the constructed X and recurrence table,
/// up to one positive scale fixed on the coefficient of eta.
inline ClosedFormComparison compare_closed_form(const ClosedForm& cf, const XPoly& xp, const RecTable& t) {
  ClosedFormComparison out;
  out.scale = checked_div(cf.X.coeff(1), xp.poly.coeff(1), "eta^1 coefficient of X");
  out.X.expect_true("positive scale", out.scale > 0);
  const std::size_t deg = std::max(cf.X.coeffs().size(), xp.poly.coeffs().size());
  for (std::size_t k = 0; k < deg; ++k)
    out.X.expect_equal("eta^" + std::to_string(k), cf.X.coeff(k), Rational(out.scale * xp.poly.coeff(k)));
  out.stated_factor.expect_equal("factor", out.scale, cf.factor);
  if (cf.r)
    for (long n = 0; n <= t.N(); ++n)
      for (long k = t.kmin(n); k <= t.kmax(n); ++k)
        out.r.expect_equal(at(n, k), cf.r->get(n, k), Rational(out.scale * t.get(n, k)));
  return out;
}

}  // namespace dmiop
