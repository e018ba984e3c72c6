#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dmiop/bigreal.hpp"
#include "dmiop/polynomial.hpp"
#include "dmiop/rational.hpp"

namespace dmiop {

/// Dense row-major matrix.  `T` is Rational for exact work and BigReal for
/// the square-root carrying symmetric forms.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix square(std::size_t n, const T& fill = T(0)) { return Matrix(n, n, fill); }
  static Matrix identity(std::size_t n, const T& one = T(1), const T& zero = T(0)) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }
  static Matrix diagonal(std::span<const T> d, const T& zero = T(0)) {
    Matrix m(d.size(), d.size(), zero);
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Order of a square matrix.
  std::size_t order() const { return rows_; }

  T& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_like());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::ShapeMismatch, "matrix product dimensions");
    Matrix r(a.rows_, b.cols_, a.zero_like());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& v : m.a_) v *= s;
    return m;
  }
  std::vector<T> operator*(std::span<const T> v) const {
    if (v.size() != cols_) fail(ErrorCode::ShapeMismatch, "matrix-vector dimensions");
    std::vector<T> out(rows_, zero_like());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!(v == T(0))) return false;
    return true;
  }

 private:
  T zero_like() const {
    if constexpr (std::is_same_v<T, BigReal>) {
      return a_.empty() ? BigReal() : BigReal(a_.front().precision());
    } else {
      return T(0);
    }
  }
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::ShapeMismatch, "matrix dimensions differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

using ExactMatrix = Matrix<Rational>;
using RealMatrix = Matrix<BigReal>;

inline ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) { return a * b - b * a; }

/// p(m) by Horner's rule.
inline ExactMatrix eval_matrix(const PolyEta& p, const ExactMatrix& m) {
  const std::size_t n = m.order();
  ExactMatrix acc = ExactMatrix::square(n);
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[k];
  }
  return acc;
}

inline RealMatrix to_real(const ExactMatrix& m, long precision) {
  RealMatrix r(m.rows(), m.cols(), BigReal(precision));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = BigReal(m(i, j), precision);
  return r;
}

namespace detail {

/// Rows of [A | B] scaled to integers (row scaling leaves the solution set
/// unchanged).  Returns the per-row scale factors.
inline std::vector<std::vector<Integer>> integer_rows(const ExactMatrix& a, const ExactMatrix* b,
                                                      std::vector<Integer>* scales) {
  const std::size_t n = a.rows();
  const std::size_t extra = b ? b->cols() : 0;
  std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(a.cols() + extra));
  if (scales) scales->assign(n, Integer(1));
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < extra; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*b)(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
    for (std::size_t j = 0; j < extra; ++j) rows[i][a.cols() + j] = (*b)(i, j).get_num() * (l / (*b)(i, j).get_den());
    if (scales) (*scales)[i] = l;
  }
  return rows;
}

/// In-place Bareiss forward elimination on the first `n` columns.  Returns
/// the permutation sign, or 0 when a pivot column is entirely zero.
inline int bareiss_forward(std::vector<std::vector<Integer>>& m, std::size_t n) {
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < m[i].size(); ++j) {
        Integer t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign;
}

}  // namespace detail

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Rational exact_det(const ExactMatrix& a) {
  if (!a.is_square()) fail(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.order();
  if (n == 0) return Rational(1);
  std::vector<Integer> scales;
  auto m = detail::integer_rows(a, nullptr, &scales);
  const int sign = detail::bareiss_forward(m, n);
  if (sign == 0) return Rational(0);
  Integer scale = 1;
  for (const auto& s : scales) scale *= s;
  Rational det(m[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

/// Solves A X = B exactly for every column of B.
inline ExactMatrix exact_solve(const ExactMatrix& a, const ExactMatrix& b) {
  if (!a.is_square() || b.rows() != a.rows()) fail(ErrorCode::ShapeMismatch, "exact_solve dimensions");
  const std::size_t n = a.order();
  auto m = detail::integer_rows(a, &b, nullptr);
  if (detail::bareiss_forward(m, n) == 0) fail(ErrorCode::SingularMatrix, "zero pivot column in elimination");
  ExactMatrix x(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = n; i-- > 0;) {
      Rational acc(m[i][n + c]);
      for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m[i][j]) * x(j, c);
      x(i, c) = acc / Rational(m[i][i]);
    }
  }
  return x;
}

inline std::vector<Rational> exact_solve(const ExactMatrix& a, std::span<const Rational> b) {
  ExactMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  return exact_solve(a, rhs).column(0);
}

inline ExactMatrix exact_inverse(const ExactMatrix& a) { return exact_solve(a, ExactMatrix::identity(a.order())); }

}  // namespace dmiop
