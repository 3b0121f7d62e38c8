#include <doctest.h>

#include "prym/correspondence.hpp"
#include "prym/covers.hpp"
#include "prym/monodromy.hpp"

using namespace prym;

namespace {

/// Oracle: characteristic polynomial coefficients c_0..c_n (monic, c_n = 1)
/// by the Faddeev-LeVerrier recursion.
std::vector<Rational> char_poly(const Matrix &a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * Matrix::identity(n);
    c[n - k] = -(a * m).trace() / Rational(static_cast<long>(k));
  }
  return c;
}

std::vector<Rational> poly_from_roots(const std::vector<long> &roots) {
  std::vector<Rational> p{Rational(1)};
  for (long r : roots) {
    std::vector<Rational> next(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= Rational(r) * p[i];
    }
    p = next;
  }
  return p;
}

int same(std::size_t a, std::size_t b) { return a == b ? 1 : 0; }

} // namespace

TEST_CASE("exact matrix basics") {
  Matrix a{{2, -1}, {-1, 2}};
  CHECK(a.determinant() == 3);
  CHECK(a.rank() == 2);
  CHECK(a.is_symmetric());
  CHECK(a.is_positive_definite());
  CHECK_FALSE(Matrix({{1, 2}, {2, 1}}).is_positive_definite());
  CHECK(Matrix({{1, 2}, {2, 4}}).rank() == 1);
  auto k = Matrix({{1, 2}, {2, 4}}).kernel();
  REQUIRE(k.size() == 1);
  CHECK(Matrix({{1, 2}, {2, 4}}).left_apply(k[0]) == std::vector<Rational>{0, 0});
  CHECK(a.pow(0) == Matrix::identity(2));
  CHECK(a.pow(2) == a * a);
  CHECK(to_string(Rational(-2) / 4) == "-1/2");
  const auto p = parse_cycles("(1 2 3)", 3);
  CHECK(Matrix::permutation(p) * Matrix::permutation(p.inverse()) == Matrix::identity(3));
  CHECK(Matrix::permutation(p * p) == Matrix::permutation(p) * Matrix::permutation(p));
}

TEST_CASE("D and D' shapes") {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto d = build_D(n), dp = build_Dprime(n);
    CHECK(d.bidegree() == static_cast<long>(2 * n - 2));
    CHECK(dp.bidegree() == static_cast<long>((n - 1) * (n - 1)));
    CHECK(d.entries().is_symmetric());
    CHECK(d.entries() + dp.entries() + Matrix::identity(n * n) == Matrix::ones(n * n, n * n));
  }
  FiberGrid grid(3);
  auto d = build_D(3).entries();
  for (std::size_t q = 0; q < 9; ++q) {
    const bool expected = q == grid.index(0, 1) || q == grid.index(0, 2) ||
                          q == grid.index(1, 0) || q == grid.index(2, 0);
    CHECK((d(grid.index(0, 0), q) == 1) == expected);
    CHECK(d(q, q) == 0);
  }
  auto dp2 = build_Dprime(2).entries();
  FiberGrid g2(2);
  CHECK(dp2 == Matrix::permutation(Permutation(std::vector<int>{3, 2, 1, 0})));
  CHECK(dp2(g2.index(0, 0), g2.index(1, 1)) == 1);
  CHECK_THROWS_AS(CorrespondenceMatrix(2, Matrix{{1, 0}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(CorrespondenceMatrix(2, Matrix{{0, 1}, {2, 0}}), std::invalid_argument);
}

TEST_CASE("quadratic identities match brute-force path counts") {
  for (std::size_t n = 2; n <= 6; ++n) {
    CHECK(verify_quadratic_D(n).holds());
    CHECK(verify_quadratic_Dprime(n).holds());

    // Oracle: count two-step paths directly from the index conditions.
    const long k = static_cast<long>(n);
    auto adjacent = [](std::size_t i, std::size_t j, std::size_t a, std::size_t b) {
      return (i == a) != (j == b);
    };
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        for (std::size_t a = 0; a < n && ok; ++a)
          for (std::size_t b = 0; b < n && ok; ++b) {
            long paths = 0;
            for (std::size_t x = 0; x < n; ++x)
              for (std::size_t y = 0; y < n; ++y)
                paths += adjacent(i, j, x, y) && adjacent(x, y, a, b);
            const long rhs = (k - 4) * adjacent(i, j, a, b) +
                             (2 * k - 4) * same(i, a) * same(j, b) + 2;
            ok = paths == rhs;
          }
    CHECK(ok);
  }
}

TEST_CASE("Kanev solver") {
  auto s = solve_kanev(build_D(3));
  REQUIRE(s);
  CHECK(s->exponent == 3);
  CHECK(s->j_coefficient == 2);
  for (std::size_t n : {2, 4, 5, 6})
    CHECK_FALSE(solve_kanev(build_D(n)));
}

TEST_CASE("integer eigenstructure") {
  auto d = build_D(3).entries();
  CHECK(integer_eigen_structure(d) == std::vector<Eigenvalue>{{4, 1}, {1, 4}, {-2, 4}});
  CHECK(char_poly(d) == poly_from_roots({4, 1, 1, 1, 1, -2, -2, -2, -2}));
  CHECK(integer_eigen_structure(Matrix::ones(9, 9)) == std::vector<Eigenvalue>{{9, 1}, {0, 8}});
  auto dp = build_Dprime(3).entries();
  CHECK(integer_eigen_structure(dp) == std::vector<Eigenvalue>{{4, 1}, {1, 4}, {-2, 4}});
  CHECK(char_poly(dp) == poly_from_roots({4, 1, 1, 1, 1, -2, -2, -2, -2}));
  for (std::size_t n = 2; n <= 5; ++n) {
    // Rook graph spectrum: 2n-2 once, n-2 with multiplicity 2(n-1), -2 the rest.
    std::vector<long> roots{static_cast<long>(2 * n - 2)};
    for (std::size_t i = 0; i < 2 * (n - 1); ++i)
      roots.push_back(static_cast<long>(n) - 2);
    for (std::size_t i = 0; i < (n - 1) * (n - 1); ++i)
      roots.push_back(-2);
    CHECK(char_poly(build_D(n).entries()) == poly_from_roots(roots));
  }
  CHECK_THROWS_AS(integer_eigen_structure(Matrix{{0, 1}, {2, 0}}), UnsupportedSpectrum);
  // A nontrivial Jordan block still reports algebraic multiplicity.
  CHECK(integer_eigen_structure(Matrix{{1, 1}, {0, 1}}) == std::vector<Eigenvalue>{{1, 2}});
}

TEST_CASE("equivariance with the nine-point action") {
  auto act = pair_group_action();
  CHECK(equivariance_check(build_D(3), act));
  CHECK(equivariance_check(build_Dprime(3), act));
  auto d = genus_three_sample();
  auto pairs = pair_curve_action(d);
  for (const auto &p : pairs.monodromy) {
    const auto m = Matrix::permutation(p);
    CHECK(m * build_D(3).entries() == build_D(3).entries() * m);
    CHECK(m * Matrix::ones(9, 9) == Matrix::ones(9, 9) * m);
  }
  CHECK_THROWS(equivariance_check(build_D(2), act));
}
