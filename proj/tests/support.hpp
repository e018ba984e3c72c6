#pragma once

// Fixed admissible tuples shared by the unit and acceptance tests.

#include <random>
#include <vector>

#include "dmiop/dmiop.hpp"

namespace fixtures {

using namespace dmiop;

inline Rational Q(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline PolyEta one() { return PolyEta(std::vector<Rational>{Q(1)}); }
inline PolyEta eta_var() { return PolyEta(std::vector<Rational>{Q(0), Q(1)}); }

// R: a+b = 14-N leaves room for max(D) = 2 up to N = 10.
inline ParamSet racah(long N, Rational b = Q(14), Rational c = Q(1, 2), Rational d = Q(2, 5)) {
  return make_params(Family::R, N, b, c, d);
}

// qR at q = 1/2: ab = 2^N/10000 stays below d q^3 = 1/20 up to N = 8; d != q
// keeps X(-1) nonzero for M = 0.
inline ParamSet qracah(long N, Rational b = Q(1, 10000), Rational c = Q(1, 3), Rational d = Q(2, 5),
                       Rational q = Q(1, 2)) {
  return make_params(Family::qR, N, b, c, d, q);
}

inline ParamSet tuple(Family f, long N) { return f == Family::R ? racah(N) : qracah(N); }

inline IndexSet D(std::vector<long> v) { return IndexSet(std::move(v)); }

/// Deterministic "random" admissible base tuples (D = {}), small denominators.
inline std::vector<ParamSet> random_tuples(Family f, long N, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(1, 9), den(2, 7);
  auto frac = [&] { return Q(num(rng), den(rng)); };
  std::vector<ParamSet> out;
  while (static_cast<int>(out.size()) < count) {
    ParamSet p;
    try {
      if (f == Family::R) {
        const Rational d = frac();
        const Rational b = N + d + 1 + frac();
        const Rational c = (1 + d) * Q(num(rng), 10);
        p = make_params(Family::R, N, b, c, d);
      } else {
        static const Rational qs[] = {Q(1, 2), Q(1, 3), Q(2, 3), Q(3, 4)};
        const Rational q = qs[num(rng) % 4];
        const Rational d = Q(num(rng), 10);
        const Rational b = d * ipow(q, N + 1) * Q(num(rng), 10);
        const Rational c = q * d + (1 - q * d) * Q(num(rng), 10);
        p = make_params(Family::qR, N, b, c, d, q);
      }
    } catch (const Error&) {
      continue;
    }
    if (validate(p, IndexSet()).empty()) out.push_back(p);
  }
  return out;
}

/// Everything downstream of one (params, D, Y) choice.
struct Built {
  MISystem s;
  XPoly xp;
  RecTable t;
  DualTable dual;
  DualHamiltonian h;

  Built(const ParamSet& p, const IndexSet& d, const PolyEta& Y, long precision = kDefaultPrecision)
      : s(build_mi_system(p, d)), xp(build_X(s, Y)), t(extract_r(s, xp)), dual(dual_values(s)),
        h(build_hamiltonians(s, xp, t, dual, precision)) {}
};

}  // namespace fixtures
