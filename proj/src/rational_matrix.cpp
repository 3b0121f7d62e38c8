#include "prym/rational_matrix.hpp"

#include <stdexcept>

namespace prym {

std::string to_string(const Rational &q) { return q.get_str(); }

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw std::invalid_argument("Matrix: ragged initializer");
    for (long x : r)
      data_.emplace_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

Matrix Matrix::ones(std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (auto &x : m.data_)
    x = 1;
  return m;
}

Matrix Matrix::permutation(const Permutation &p) {
  Matrix m(p.degree(), p.degree());
  for (std::size_t x = 0; x < p.degree(); ++x)
    m(x, p(static_cast<int>(x))) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::pow(unsigned k) const {
  if (!is_square())
    throw std::invalid_argument("Matrix::pow: not square");
  Matrix result = identity(rows_);
  Matrix base = *this;
  while (k) {
    if (k & 1u)
      result = result * base;
    k >>= 1u;
    if (k)
      base = base * base;
  }
  return result;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && (*this)(p, col) == 0)
      ++p;
    if (p == rows_)
      continue;
    if (p != row)
      for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(p, c), (*this)(row, c));
    const Rational inv = 1 / (*this)(row, col);
    for (std::size_t c = col; c < cols_; ++c)
      (*this)(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || (*this)(r, col) == 0)
        continue;
      const Rational f = (*this)(r, col);
      for (std::size_t c = col; c < cols_; ++c)
        (*this)(r, c) -= f * (*this)(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.rref().size();
}

std::vector<std::vector<Rational>> Matrix::kernel() const {
  Matrix r = *this;
  const auto pivots = r.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots)
    is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational Matrix::determinant() const {
  if (!is_square())
    throw std::invalid_argument("Matrix::determinant: not square");
  Matrix m = *this;
  Rational det = 1;
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t p = col;
    while (p < rows_ && m(p, col) == 0)
      ++p;
    if (p == rows_)
      return 0;
    if (p != col) {
      for (std::size_t c = 0; c < cols_; ++c)
        std::swap(m(p, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (m(r, col) == 0)
        continue;
      const Rational f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < cols_; ++c)
        m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

bool Matrix::is_zero() const {
  for (const auto &x : data_)
    if (x != 0)
      return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square())
    return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r))
        return false;
  return true;
}

bool Matrix::is_integral() const {
  for (const auto &x : data_)
    if (x.get_den() != 1)
      return false;
  return true;
}

bool Matrix::is_positive_definite() const {
  if (!is_symmetric())
    return false;
  for (std::size_t k = 1; k <= rows_; ++k) {
    Matrix minor(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c)
        minor(r, c) = (*this)(r, c);
    if (minor.determinant() <= 0)
      return false;
  }
  return true;
}

Rational Matrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
    t += (*this)(i, i);
  return t;
}

std::string Matrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c)
        out += ' ';
      out += prym::to_string((*this)(r, c));
    }
    out += '\n';
  }
  return out;
}

Matrix operator+(const Matrix &a, const Matrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("Matrix +: shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i)
    m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix &a, const Matrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("Matrix -: shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i)
    m.data_[i] -= b.data_[i];
  return m;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("Matrix *: shape mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational &x = a(r, k);
      if (x == 0)
        continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        m(r, c) += x * b(k, c);
    }
  return m;
}

Matrix operator*(const Rational &s, const Matrix &a) {
  Matrix m = a;
  for (auto &x : m.data_)
    x *= s;
  return m;
}

bool operator==(const Matrix &a, const Matrix &b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<Rational> Matrix::left_apply(const std::vector<Rational> &v) const {
  if (v.size() != rows_)
    throw std::invalid_argument("Matrix::left_apply: length mismatch");
  std::vector<Rational> out(cols_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    if (v[r] == 0)
      continue;
    for (std::size_t c = 0; c < cols_; ++c)
      out[c] += v[r] * (*this)(r, c);
  }
  return out;
}

Rational bilinear(const std::vector<Rational> &u, const Matrix &gram,
                  const std::vector<Rational> &v) {
  if (u.size() != gram.rows() || v.size() != gram.cols())
    throw std::invalid_argument("bilinear: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      s += u[i] * gram(i, j) * v[j];
  return s;
}

} // namespace prym
