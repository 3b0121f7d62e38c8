#include "prym/correspondence.hpp"

#include <algorithm>

#include "prym/monodromy.hpp"

namespace prym {

CorrespondenceMatrix::CorrespondenceMatrix(std::size_t n, Matrix entries)
    : n_(n), entries_(std::move(entries)), bidegree_(0) {
  const std::size_t size = n * n;
  if (entries_.rows() != size || entries_.cols() != size)
    throw std::invalid_argument("correspondence matrix must be n^2 x n^2");
  if (!entries_.is_integral())
    throw std::invalid_argument("correspondence matrix must be integral");
  if (!entries_.is_symmetric())
    throw std::invalid_argument("correspondence matrix must be symmetric");
  for (std::size_t i = 0; i < size; ++i) {
    if (entries_(i, i) != 0)
      throw std::invalid_argument("correspondence matrix must have zero diagonal");
    Rational row = 0;
    for (std::size_t j = 0; j < size; ++j) {
      if (entries_(i, j) < 0)
        throw std::invalid_argument("correspondence matrix must be nonnegative");
      row += entries_(i, j);
    }
    if (i == 0)
      bidegree_ = row.get_num().get_si();
    else if (row != bidegree_)
      throw std::invalid_argument("correspondence matrix must have constant row sum");
  }
}

namespace {

template <class Pred> CorrespondenceMatrix grid_matrix(std::size_t n, Pred related) {
  if (n < 2)
    throw std::invalid_argument("grid correspondences need n >= 2");
  FiberGrid grid(n);
  Matrix m(grid.size(), grid.size());
  for (std::size_t a = 0; a < grid.size(); ++a)
    for (std::size_t b = 0; b < grid.size(); ++b)
      if (related(grid.row(a) == grid.row(b), grid.col(a) == grid.col(b)))
        m(a, b) = 1;
  return CorrespondenceMatrix(n, std::move(m));
}

Rational q(long v) { return Rational(v); }

} // namespace

CorrespondenceMatrix build_D(std::size_t n) {
  return grid_matrix(n, [](bool same_row, bool same_col) { return same_row != same_col; });
}

CorrespondenceMatrix build_Dprime(std::size_t n) {
  return grid_matrix(n, [](bool same_row, bool same_col) { return !same_row && !same_col; });
}

IdentityReport verify_quadratic_D(std::size_t n) {
  const long k = static_cast<long>(n);
  const Matrix d = build_D(n).entries();
  const std::size_t s = n * n;
  Matrix residual = d * d - q(k - 4) * d - q(2 * k - 4) * Matrix::identity(s) -
                    q(2) * Matrix::ones(s, s);
  return {"D^2 - (n-4)D - (2n-4)I = 2J at n=" + std::to_string(n), std::move(residual)};
}

IdentityReport verify_quadratic_Dprime(std::size_t n) {
  const long k = static_cast<long>(n);
  const Matrix d = build_Dprime(n).entries();
  const std::size_t s = n * n;
  Matrix residual = d * d + q(k - 2) * d - q(k - 1) * Matrix::identity(s) -
                    q((k - 1) * (k - 2)) * Matrix::ones(s, s);
  return {"D'^2 + (n-2)D' - (n-1)I = (n-1)(n-2)J at n=" + std::to_string(n),
          std::move(residual)};
}

std::optional<KanevSolution> solve_kanev(const CorrespondenceMatrix &m) {
  const Matrix &M = m.entries();
  const std::size_t s = M.rows();
  const Matrix I = Matrix::identity(s);
  // M^2 - 2M + I + e (M - I) - c J = 0, linear in (e, c).
  const Matrix constant = M * M - q(2) * M + I;
  const Matrix e_coeff = M - I;

  Matrix system(s * s, 3);
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t c = 0; c < s; ++c) {
      const std::size_t row = r * s + c;
      system(row, 0) = e_coeff(r, c);
      system(row, 1) = -1;
      system(row, 2) = constant(r, c);
    }
  // Unique solution iff rank of the coefficient part is 2 and the augmented
  // rank is also 2.
  Matrix coeff(s * s, 2);
  for (std::size_t row = 0; row < s * s; ++row) {
    coeff(row, 0) = system(row, 0);
    coeff(row, 1) = system(row, 1);
  }
  if (coeff.rank() != 2 || system.rank() != 2)
    return std::nullopt;

  // Kernel of the augmented system is one-dimensional: (e, c, 1) up to scale.
  auto kernel = system.kernel();
  const auto &v = kernel.front();
  if (v[2] == 0)
    return std::nullopt;
  return KanevSolution{v[0] / v[2], v[1] / v[2]};
}

std::vector<Eigenvalue> integer_eigen_structure(const Matrix &m) {
  if (!m.is_square())
    throw std::invalid_argument("integer_eigen_structure: matrix not square");
  if (!m.is_integral())
    throw UnsupportedSpectrum("integer_eigen_structure: matrix not integral");
  const std::size_t n = m.rows();

  Rational bound = 0;
  for (std::size_t r = 0; r < n; ++r) {
    Rational row = 0;
    for (std::size_t c = 0; c < n; ++c)
      row += abs(m(r, c));
    bound = std::max(bound, row);
  }
  const long b = bound.get_num().get_si();

  std::vector<Eigenvalue> result;
  std::size_t total = 0;
  for (long lambda = b; lambda >= -b && total < n; --lambda) {
    const Matrix shifted = m - Rational(lambda) * Matrix::identity(n);
    std::size_t rank = shifted.rank();
    if (rank == n)
      continue;
    Matrix power = shifted;
    for (;;) {
      power = power * shifted;
      std::size_t next = power.rank();
      if (next == rank)
        break;
      rank = next;
    }
    result.push_back({lambda, n - rank});
    total += n - rank;
  }
  if (total != n)
    throw UnsupportedSpectrum("integer eigenvalues account for " + std::to_string(total) +
                              " of " + std::to_string(n) + " dimensions");
  return result;
}

bool equivariance_check(const CorrespondenceMatrix &m, const GroupAction &action) {
  if (action.domain_size() != m.entries().rows())
    throw std::invalid_argument("equivariance_check: action size does not match the grid");
  const Matrix &M = m.entries();
  for (const auto &p : action.images()) {
    const Matrix P = Matrix::permutation(p);
    if (!(P * M == M * P))
      return false;
  }
  return true;
}

} // namespace prym
