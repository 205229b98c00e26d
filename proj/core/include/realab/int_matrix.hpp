#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace realab {

/// Thrown when an argument violates a documented precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over an exact scalar type (mpz_class or mpq_class).
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InputError("ragged matrix initializer");
      for (long v : row) entries_.emplace_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<T>& entries() const { return entries_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (e != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix c = a;
    for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix c = a;
    for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] -= b.entries_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a) {
    Matrix c = a;
    for (auto& e : c.entries_) e = -e;
    return c;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix c = a;
    for (auto& e : c.entries_) e *= s;
    return c;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw InputError("matrix sum: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using IntMatrix = Matrix<mpz_class>;
using RatMatrix = Matrix<mpq_class>;
using IntVector = std::vector<mpz_class>;

RatMatrix to_rational(const IntMatrix& m);

/// Returns the integer matrix equal to `m`; throws InputError on a non-integral entry.
IntMatrix to_integer(const RatMatrix& m);

/// Fraction-free (Bareiss) determinant.
mpz_class determinant(const IntMatrix& m);
mpq_class determinant(const RatMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// Rank of the reduction modulo a prime.
std::size_t rank_mod_p(const IntMatrix& m, unsigned long p);

/// Exact inverse over the rationals; throws on a singular matrix.
RatMatrix inverse(const RatMatrix& m);
RatMatrix inverse(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);
bool is_symmetric(const IntMatrix& m);
bool is_alternating(const IntMatrix& m);
bool is_symmetric(const RatMatrix& m);

/// Sylvester's criterion: symmetric with all leading principal minors positive.
bool is_positive_definite(const RatMatrix& m);

/// Pfaffian of an alternating integer matrix, normalised so that
/// Pf([[0, I], [-I, 0]]) = (-1)^(n(n-1)/2) for blocks of size n.
mpz_class pfaffian(const IntMatrix& m);

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

/// Entry-wise reduction into [0, p).
IntMatrix reduce_mod(const IntMatrix& m, unsigned long p);

/// Standard symplectic form [[0, I_g], [-I_g, 0]].
IntMatrix standard_symplectic(std::size_t g);

IntVector multiply(const IntMatrix& m, const IntVector& v);

}  // namespace realab
