#pragma once

// Exact rational scalars backed by GMP.  Note that gmpxx arithmetic yields
// expression templates: never bind the result of an operator to `auto`.

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "dmiop/error.hpp"

namespace dmiop {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "p/q" form; integers keep their "/1".
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "p/q", "p" and optional leading sign.  Rejects q = 0 and garbage.
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto to_mpz = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) fail(ErrorCode::ConfigError, "malformed rational '" + std::string(text) + "'");
  Integer n = to_mpz(num);
  Integer d = to_mpz(den);
  if (d == 0) fail(ErrorCode::ConfigError, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// base^k for any integer k (base must be nonzero when k < 0).
inline Rational ipow(const Rational& base, long k) {
  if (k == 0) return Rational(1);
  if (base == 0) {
    if (k < 0) fail(ErrorCode::ZeroDenominator, "0 raised to a negative power");
    return Rational(0);
  }
  const unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r = k > 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

inline Rational checked_div(const Rational& num, const Rational& den, std::string_view what) {
  if (den == 0) fail(ErrorCode::ZeroDenominator, std::string(what));
  return Rational(num / den);
}

/// Rising factorial (x)_n = x (x+1) ... (x+n-1).
inline Rational pochhammer(const Rational& x, long n) {
  Rational r = 1;
  for (long k = 0; k < n; ++k) r *= x + k;
  return r;
}

/// q-shifted factorial (x; q)_n = (1-x)(1-xq)...(1-xq^{n-1}).
inline Rational qpochhammer(const Rational& x, const Rational& q, long n) {
  Rational r = 1;
  Rational t = x;
  for (long k = 0; k < n; ++k) {
    r *= 1 - t;
    t *= q;
  }
  return r;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace dmiop
