#ifndef PRYM_REPTHEORY_HPP
#define PRYM_REPTHEORY_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prym/group.hpp"
#include "prym/monodromy.hpp"
#include "prym/rational_matrix.hpp"

namespace prym {

using Vector = std::vector<Rational>;

/// A rational class function, stored per element so that evaluation does not
/// need the class partition.
class ClassFunction {
public:
  /// Throws std::invalid_argument if `values` is not constant on classes.
  ClassFunction(GroupPtr group, std::vector<Rational> values);

  const GroupPtr &group() const { return group_; }
  const Rational &operator()(std::size_t element_index) const { return values_[element_index]; }
  const Rational &at(const Permutation &g) const { return values_[group_->index_of(g)]; }
  const std::vector<Rational> &values() const { return values_; }

  friend bool operator==(const ClassFunction &a, const ClassFunction &b) {
    return a.values_ == b.values_ && a.group_->elements() == b.group_->elements();
  }

private:
  GroupPtr group_;
  std::vector<Rational> values_;
};

/// (1/|G|) sum chi(g) psi(g^-1).
Rational inner_product(const ClassFunction &chi, const ClassFunction &psi);

struct Irreducible {
  std::string label; // "V⊗1" style
  ClassFunction character;
};

/// The nine irreducible characters a⊗b, a, b in {1, U, V}, of the type III
/// group, read through the factor coordinates and the S3 table.
std::vector<Irreducible> g_character_table();

/// Fixed-point counts.
ClassFunction permutation_character(const GroupAction &action);

class NotACharacter : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Nonzero multiplicities in table order. Throws NotACharacter when some
/// inner product is not a nonnegative integer.
std::vector<std::pair<std::string, long>> decompose(const ClassFunction &chi);

/// A matrix representation acting on row vectors from the right:
/// `v -> v * matrix(g)`, so `matrix(g * h) == matrix(g) * matrix(h)`.
class MatrixRep {
public:
  MatrixRep(GroupPtr group, std::size_t dim, std::vector<Matrix> matrices);

  const GroupPtr &group() const { return group_; }
  std::size_t dim() const { return dim_; }
  const Matrix &matrix(std::size_t element_index) const { return matrices_[element_index]; }
  const Matrix &of(const Permutation &g) const { return matrices_[group_->index_of(g)]; }
  Vector act(const Vector &v, const Permutation &g) const { return of(g).left_apply(v); }

  bool is_homomorphism() const;
  ClassFunction character() const;

private:
  GroupPtr group_;
  std::size_t dim_;
  std::vector<Matrix> matrices_;
};

/// The action on three cosets v1, v2, v3 (given by representatives, first
/// one in the subgroup) restricted to e1 = v1 - v2, e2 = v2 - v3.
MatrixRep coset_difference_rep(GroupPtr group, const FiniteGroupTable &subgroup,
                               const std::array<Permutation, 3> &representatives);

/// V⊗1 from the cosets H1, (2 4 6)H1, (1 3 5)H1.
MatrixRep first_factor_rep();
/// 1⊗V from the cosets H2, (1 3 5)H2, (1 5 3)H2.
MatrixRep second_factor_rep();

/// Symmetric positive-definite Gram matrix.
class BilinearForm {
public:
  explicit BilinearForm(Matrix gram);

  std::size_t dim() const { return gram_.rows(); }
  const Matrix &gram() const { return gram_; }
  Rational operator()(const Vector &u, const Vector &v) const { return bilinear(u, gram_, v); }

private:
  Matrix gram_;
};

/// `M G M^T == G` for every element (row-vector convention).
bool invariant_form_check(const MatrixRep &rep, const BilinearForm &form);
/// Group average of the standard form, scaled to a primitive integral matrix.
BilinearForm averaged_invariant_form(const MatrixRep &rep);

/// Basis of {v : v * matrix(s) == v for all s in subgroup}.
std::vector<Vector> fixed_vectors(const MatrixRep &rep, const FiniteGroupTable &subgroup);

/// Sum of a(g) g with exact rational coefficients.
class GroupAlgebraElement {
public:
  explicit GroupAlgebraElement(GroupPtr group);
  GroupAlgebraElement(GroupPtr group, std::vector<Rational> coeffs);

  static GroupAlgebraElement delta(GroupPtr group, const Permutation &g);
  /// Sum of the elements of `subset`, each with coefficient 1.
  static GroupAlgebraElement indicator(GroupPtr group, const FiniteGroupTable &subset);

  const GroupPtr &group() const { return group_; }
  const std::vector<Rational> &coeffs() const { return coeffs_; }
  const Rational &coefficient(const Permutation &g) const {
    return coeffs_[group_->index_of(g)];
  }
  Rational &operator[](std::size_t element_index) { return coeffs_[element_index]; }
  const Rational &operator[](std::size_t element_index) const { return coeffs_[element_index]; }

  /// Lines "(cycle) coefficient" in element order, zeros omitted.
  std::string to_string() const;

  friend GroupAlgebraElement operator+(const GroupAlgebraElement &a, const GroupAlgebraElement &b);
  friend GroupAlgebraElement operator*(const Rational &s, const GroupAlgebraElement &a);
  friend bool operator==(const GroupAlgebraElement &a, const GroupAlgebraElement &b);

private:
  GroupPtr group_;
  std::vector<Rational> coeffs_;
};

/// p_w = dim / (|G| |w|^2) * sum (w, g w) g. Throws std::invalid_argument
/// for the zero vector or a non-invariant form.
GroupAlgebraElement projector(const Vector &w, const MatrixRep &rep, const BilinearForm &form);

/// (a * b)(g) = sum over x * y == g of a(x) b(y).
GroupAlgebraElement convolve(const GroupAlgebraElement &a, const GroupAlgebraElement &b);

/// sum a(g) P(g) with P(g) the row-convention permutation matrix of g.
Matrix represent(const GroupAlgebraElement &a, const GroupAction &action);

/// Identification of the cosets H*g with grid labels.
struct CosetDictionary {
  CosetAction cosets;
  /// Grid label of each coset.
  std::vector<std::size_t> label;
};

/// Labels the coset H*g by the image of P11 under g in the nine-point
/// action. Throws std::logic_error if this is not an equivariant bijection.
CosetDictionary pair_dictionary(const FiniteGroupTable &h);

class DescentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The endomorphism of the free module on the fiber labels induced by
/// `a` through x -> sum_g a(g) g~(x), g~(x) = sum_{h in H} [H*g*h*k] for
/// x = [H*k]. Divided by |H|^2 so that each coset enters once. Requires
/// a(h g) == a(g) for h in H; every choice of k is checked to give the same
/// image. Rows are indexed by source label.
Matrix descend(const GroupAlgebraElement &a, const FiniteGroupTable &h,
               const CosetDictionary &dictionary);

/// The H-fixed generators used for the projectors: w1 = (2, 1) in V⊗1 and
/// the primitive integral H-fixed vector of 1⊗V.
Vector first_fixed_vector();
Vector second_fixed_vector();
/// The invariant Gram matrix [[2, -1], [-1, 2]].
BilinearForm hexagonal_form();

struct Theorem52Report {
  bool dictionary_matches = false;   // displayed images of P11 under 8 elements
  bool left_coset_constant = false;  // p(g h) == p(g)
  bool right_coset_constant = false; // p(h g) == p(g)
  bool brace_matches = false;        // 108 (p1 + p2) has coefficients 12, -6, 3
  Matrix lhs;                        // 36 descend(p1 + p2)
  Matrix rhs;                        // 3 (I - D) + J

  bool identity_holds() const { return lhs == rhs; }
  bool holds() const {
    return dictionary_matches && left_coset_constant && right_coset_constant && brace_matches &&
           identity_holds();
  }
};

/// Builds p_{w1} + p_{w2} over the monodromy group of `d` (which must be the
/// type III group), descends it to the nine-point fiber and compares with
/// 3 (I - D) + J.
Theorem52Report theorem52_identity_check(const MonodromyDatum &d);

} // namespace prym

#endif // PRYM_REPTHEORY_HPP
