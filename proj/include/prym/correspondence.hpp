#ifndef PRYM_CORRESPONDENCE_HPP
#define PRYM_CORRESPONDENCE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prym/group.hpp"
#include "prym/rational_matrix.hpp"

namespace prym {

/// A correspondence restricted to a generic fiber of the n x n grid: a
/// symmetric, zero-diagonal, nonnegative integer matrix with constant row
/// sum, indexed by FiberGrid labels.
///
/// Zero diagonal is the generic-fiber statement only. D' does acquire fixed
/// points, but over branch points, which this model does not see.
class CorrespondenceMatrix {
public:
  /// Checks every invariant; throws std::invalid_argument on failure.
  CorrespondenceMatrix(std::size_t n, Matrix entries);

  std::size_t n() const { return n_; }
  const Matrix &entries() const { return entries_; }
  /// Common row sum.
  long bidegree() const { return bidegree_; }

private:
  std::size_t n_;
  Matrix entries_;
  long bidegree_;
};

/// Entry (P_ij, P_kl) is 1 iff exactly one of i == k, j == l holds.
CorrespondenceMatrix build_D(std::size_t n);
/// Entry (P_ij, P_kl) is 1 iff i != k and j != l.
CorrespondenceMatrix build_Dprime(std::size_t n);

struct IdentityReport {
  std::string statement;
  Matrix residual;

  bool holds() const { return residual.is_zero(); }
};

/// D^2 - (n-4) D - (2n-4) I - 2 J.
IdentityReport verify_quadratic_D(std::size_t n);
/// D'^2 + (n-2) D' - (n-1) I - (n-1)(n-2) J.
IdentityReport verify_quadratic_Dprime(std::size_t n);

struct KanevSolution {
  Rational exponent;
  Rational j_coefficient;
};

/// The unique (e, c) with M^2 + (e-2) M - (e-1) I = c J, or nullopt when no
/// such pair exists or it is not unique.
std::optional<KanevSolution> solve_kanev(const CorrespondenceMatrix &m);

struct Eigenvalue {
  long value;
  std::size_t multiplicity;

  friend bool operator==(const Eigenvalue &, const Eigenvalue &) = default;
};

class UnsupportedSpectrum : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Integer eigenvalues with algebraic multiplicities, largest first. Every
/// integer in the row-sum bound is tried; the multiplicity of lambda is the
/// stable nullity of powers of (M - lambda I). Throws UnsupportedSpectrum if
/// the multiplicities found do not fill the dimension.
std::vector<Eigenvalue> integer_eigen_structure(const Matrix &m);

/// Whether every group element's permutation matrix commutes with M.
bool equivariance_check(const CorrespondenceMatrix &m, const GroupAction &action);

} // namespace prym

#endif // PRYM_CORRESPONDENCE_HPP
