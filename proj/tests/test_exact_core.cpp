#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace dmiop;
using fixtures::Q;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), Q(3, 2));
  EXPECT_EQ(parse_rational("-7"), Q(-7));
  EXPECT_EQ(to_string(parse_rational("2/-4")), "-1/2");
  EXPECT_EQ(to_string(Q(5)), "5/1");
}

TEST(Rational, ParseRejectsMalformed) {
  for (const char* bad : {"3/0", "", "1/", "x", "1.5", "1/2/3"}) {
    try {
      parse_rational(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ConfigError) << bad;
    }
  }
}

TEST(Rational, PowersAndPochhammer) {
  EXPECT_EQ(ipow(Q(2, 3), -2), Q(9, 4));
  EXPECT_EQ(ipow(Q(0), 3), Q(0));
  EXPECT_EQ(pochhammer(Q(1, 2), 3), Q(15, 8));
  EXPECT_EQ(qpochhammer(Q(1, 2), Q(1, 2), 2), Q(3, 8));
  EXPECT_EQ(binomial(6, 2), 15);
  EXPECT_EQ(factorial(5), 120);
}

TEST(ExactSolve, Examples) {
  const std::vector<Rational> b{Q(1, 2), Q(0), Q(-3)};
  EXPECT_EQ(exact_solve(ExactMatrix::identity(3), std::span<const Rational>(b)), b);
  ExactMatrix a(2, 2);
  a(0, 0) = 1, a(0, 1) = 1, a(1, 0) = 1, a(1, 1) = 2;
  const std::vector<Rational> rhs{Q(0), Q(1)};
  EXPECT_EQ(exact_solve(a, std::span<const Rational>(rhs)), (std::vector<Rational>{Q(-1), Q(1)}));
  ExactMatrix sing(2, 2);
  sing(0, 0) = 1, sing(0, 1) = 1, sing(1, 0) = 2, sing(1, 1) = 2;
  try {
    exact_solve(sing, std::span<const Rational>(rhs));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
  }
}

TEST(ExactDet, Examples) {
  EXPECT_EQ(exact_det(ExactMatrix::identity(4)), Q(1));
  ExactMatrix p(2, 2);
  p(0, 1) = 1, p(1, 0) = 1;
  EXPECT_EQ(exact_det(p), Q(-1));
  ExactMatrix m(2, 2);
  m(0, 0) = 1, m(0, 1) = 2, m(1, 0) = 3, m(1, 1) = 4;
  EXPECT_EQ(exact_det(m), Q(-2));
}

TEST(ExactSolve, RandomRoundTrip) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> v(-9, 9), den(1, 5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 5;
    ExactMatrix a(n, n);
    std::vector<Rational> b(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = Rational(v(rng), den(rng));
      for (std::size_t j = 0; j < n; ++j) a(i, j) = Rational(v(rng), den(rng));
      a(i, i) += 40;  // diagonally dominant, hence regular
    }
    for (auto& r : b) r.canonicalize();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j).canonicalize();
    const auto x = exact_solve(a, std::span<const Rational>(b));
    EXPECT_EQ(a * std::span<const Rational>(x), b);
    const ExactMatrix inv = exact_inverse(a);
    EXPECT_EQ(a * inv, ExactMatrix::identity(n));
  }
}

TEST(Polynomial, Arithmetic) {
  const PolyEta e = fixtures::eta_var();
  EXPECT_EQ(e * e, PolyEta::monomial(2));
  const PolyEta p = PolyEta::monomial(2) - PolyEta::constant(Q(1));
  EXPECT_EQ(p(Q(3, 2)), Q(5, 4));
  EXPECT_TRUE((p + (-p)).is_zero());
  EXPECT_FALSE((p + (-p)).degree().has_value());
}

TEST(Polynomial, InterpolationRecoversCubic) {
  const PolyEta p(std::vector<Rational>{Q(1), Q(-2, 3), Q(0), Q(5, 7)});
  std::vector<Rational> nodes, values;
  for (long k = 0; k < 6; ++k) {
    nodes.push_back(Q(k * k + 1, 3));
    values.push_back(p(nodes.back()));
  }
  EXPECT_EQ(interpolate(nodes, values), p);
}

TEST(Matrix, EvalMatrixHorner) {
  ExactMatrix m(2, 2);
  m(0, 0) = 1, m(0, 1) = 2, m(1, 1) = 3;
  const PolyEta p(std::vector<Rational>{Q(1), Q(0), Q(1)});
  EXPECT_EQ(eval_matrix(p, m), m * m + ExactMatrix::identity(2));
}

TEST(BigReal, Sqrt) {
  EXPECT_TRUE(big_sqrt(BigReal(0L, 256)).is_zero());
  EXPECT_EQ(big_sqrt(BigReal(4L, 256)), BigReal(2L, 256));
  const BigReal r = big_sqrt(BigReal(2L, 256));
  EXPECT_LT(abs(r * r - BigReal(2L, 256)), BigReal::exp2(-250, 256));
  try {
    big_sqrt(BigReal(-1L, 256));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeRadicand);
  }
}
