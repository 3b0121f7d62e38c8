#ifndef PRYM_RATIONAL_MATRIX_HPP
#define PRYM_RATIONAL_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "prym/permutation.hpp"

namespace prym {

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational &q);

/// Dense matrix over the rationals. Row-major.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix ones(std::size_t rows, std::size_t cols);
  /// Row-vector convention: entry (x, p(x)) is 1, so `e_x * M == e_{p(x)}`
  /// and `of(p) * of(q) == of(p * q)`.
  static Matrix permutation(const Permutation &p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  Matrix pow(unsigned k) const;
  std::size_t rank() const;
  /// Basis of {v : M v = 0}, each basis vector as a column vector entry list.
  std::vector<std::vector<Rational>> kernel() const;
  Rational determinant() const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_integral() const;
  /// All leading principal minors positive (for symmetric matrices).
  bool is_positive_definite() const;
  Rational trace() const;

  /// One row per line, entries separated by single spaces.
  std::string to_string() const;

  friend Matrix operator+(const Matrix &a, const Matrix &b);
  friend Matrix operator-(const Matrix &a, const Matrix &b);
  friend Matrix operator*(const Matrix &a, const Matrix &b);
  friend Matrix operator*(const Rational &s, const Matrix &a);
  friend bool operator==(const Matrix &a, const Matrix &b);

  /// Row vector times matrix.
  std::vector<Rational> left_apply(const std::vector<Rational> &v) const;

private:
  /// Reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// `u^T G v`.
Rational bilinear(const std::vector<Rational> &u, const Matrix &gram, const std::vector<Rational> &v);

} // namespace prym

#endif // PRYM_RATIONAL_MATRIX_HPP
