#include "prym/reptheory.hpp"

#include <algorithm>

#include "prym/correspondence.hpp"
#include "prym/covers.hpp"

namespace prym {

namespace {

Permutation cyc(const char *text) { return parse_cycles(text, sheet_degree); }

void require_same_group(const GroupPtr &a, const GroupPtr &b, const char *where) {
  if (a != b && a->elements() != b->elements())
    throw std::invalid_argument(std::string(where) + ": objects over different groups");
}

/// Scales to integer entries with gcd 1 and a positive leading entry.
Vector primitive_integral(Vector v) {
  mpz_class den = 1, num = 0;
  for (const auto &x : v)
    den = lcm(den, mpz_class(x.get_den()));
  for (auto &x : v) {
    x *= den;
    num = gcd(num, mpz_class(x.get_num()));
  }
  if (num == 0)
    return v;
  auto lead = std::find_if(v.begin(), v.end(), [](const Rational &x) { return x != 0; });
  if (*lead < 0)
    num = -num;
  for (auto &x : v)
    x /= Rational(num);
  return v;
}

} // namespace

ClassFunction::ClassFunction(GroupPtr group, std::vector<Rational> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->order())
    throw std::invalid_argument("ClassFunction: one value per element required");
  for (const auto &cls : conjugacy_classes(*group_))
    for (auto i : cls)
      if (values_[i] != values_[cls.front()])
        throw std::invalid_argument("ClassFunction: not constant on a conjugacy class");
}

Rational inner_product(const ClassFunction &chi, const ClassFunction &psi) {
  require_same_group(chi.group(), psi.group(), "inner_product");
  const auto &G = *chi.group();
  Rational sum = 0;
  for (std::size_t i = 0; i < G.order(); ++i)
    sum += chi(i) * psi(G.inverse(i));
  return sum / Rational(static_cast<long>(G.order()));
}

std::vector<Irreducible> g_character_table() {
  const GroupPtr G = type_three_group_ptr();
  const FactorDecomposition factors(*G);

  // S3 table on identity / transposition / 3-cycle.
  struct S3Char {
    const char *label;
    long values[3];
  };
  static const S3Char s3[] = {{"1", {1, 1, 1}}, {"U", {1, -1, 1}}, {"V", {2, 0, -1}}};
  auto s3_class = [](const Permutation &s) {
    switch (s.order()) {
    case 1:
      return 0;
    case 2:
      return 1;
    default:
      return 2;
    }
  };

  std::vector<std::pair<int, int>> classes;
  for (const auto &g : G->elements()) {
    auto [a, b] = factors.coordinates(g);
    classes.emplace_back(s3_class(factors.to_s3(1, a)), s3_class(factors.to_s3(2, b)));
  }

  std::vector<Irreducible> table;
  for (const auto &left : s3)
    for (const auto &right : s3) {
      std::vector<Rational> values;
      for (const auto &[ca, cb] : classes)
        values.emplace_back(left.values[ca] * right.values[cb]);
      table.push_back({std::string(left.label) + "⊗" + right.label,
                       ClassFunction(G, std::move(values))});
    }
  return table;
}

ClassFunction permutation_character(const GroupAction &action) {
  std::vector<Rational> values;
  for (const auto &p : action.images()) {
    long fixed = 0;
    for (std::size_t x = 0; x < p.degree(); ++x)
      fixed += p(static_cast<int>(x)) == static_cast<int>(x);
    values.emplace_back(fixed);
  }
  return ClassFunction(action.group(), std::move(values));
}

std::vector<std::pair<std::string, long>> decompose(const ClassFunction &chi) {
  std::vector<std::pair<std::string, long>> result;
  Rational accounted = 0;
  for (const auto &irr : g_character_table()) {
    Rational m = inner_product(chi, irr.character);
    if (m.get_den() != 1 || m < 0)
      throw NotACharacter("multiplicity of " + irr.label + " is " + prym::to_string(m));
    if (m != 0)
      result.emplace_back(irr.label, m.get_num().get_si());
    accounted += m * irr.character(0);
  }
  if (accounted != chi(0))
    throw NotACharacter("irreducible constituents do not add up to the degree");
  return result;
}

// ---------------------------------------------------------------------------

MatrixRep::MatrixRep(GroupPtr group, std::size_t dim, std::vector<Matrix> matrices)
    : group_(std::move(group)), dim_(dim), matrices_(std::move(matrices)) {
  if (matrices_.size() != group_->order())
    throw std::invalid_argument("MatrixRep: one matrix per element required");
  for (const auto &m : matrices_)
    if (m.rows() != dim_ || m.cols() != dim_)
      throw std::invalid_argument("MatrixRep: matrix of wrong size");
}

bool MatrixRep::is_homomorphism() const {
  const auto &G = *group_;
  if (!(matrices_[0] == Matrix::identity(dim_)))
    return false;
  for (std::size_t i = 0; i < G.order(); ++i)
    for (std::size_t j = 0; j < G.order(); ++j)
      if (!(matrices_[G.multiply(i, j)] == matrices_[i] * matrices_[j]))
        return false;
  return true;
}

ClassFunction MatrixRep::character() const {
  std::vector<Rational> values;
  for (const auto &m : matrices_)
    values.push_back(m.trace());
  return ClassFunction(group_, std::move(values));
}

MatrixRep coset_difference_rep(GroupPtr group, const FiniteGroupTable &subgroup,
                               const std::array<Permutation, 3> &representatives) {
  if (!subgroup.contains(representatives[0]))
    throw std::invalid_argument("coset_difference_rep: first coset must be the subgroup");
  auto cosets = coset_action(group, subgroup,
                             std::vector<Permutation>(representatives.begin(), representatives.end()));
  if (cosets.index() != 3)
    throw std::invalid_argument("coset_difference_rep: subgroup must have index 3");

  std::vector<Matrix> matrices;
  for (const auto &p : cosets.action.images()) {
    // e1 = v1 - v2 and e2 = v2 - v3 in the permutation module; a vector
    // (u0, u1, u2) with zero sum equals u0 e1 - u2 e2.
    Matrix m(2, 2);
    for (int row = 0; row < 2; ++row) {
      Vector u(3, Rational(0));
      u[p(row)] += 1;
      u[p(row + 1)] -= 1;
      m(row, 0) = u[0];
      m(row, 1) = -u[2];
    }
    matrices.push_back(std::move(m));
  }
  return MatrixRep(std::move(group), 2, std::move(matrices));
}

MatrixRep first_factor_rep() {
  return coset_difference_rep(type_three_group_ptr(), standard_subgroups().H1,
                              {Permutation(sheet_degree), cyc("(2 4 6)"), cyc("(1 3 5)")});
}

MatrixRep second_factor_rep() {
  return coset_difference_rep(type_three_group_ptr(), standard_subgroups().H2,
                              {Permutation(sheet_degree), cyc("(1 3 5)"), cyc("(1 5 3)")});
}

BilinearForm::BilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_positive_definite())
    throw std::invalid_argument("BilinearForm: Gram matrix must be symmetric positive-definite");
}

bool invariant_form_check(const MatrixRep &rep, const BilinearForm &form) {
  if (rep.dim() != form.dim())
    throw std::invalid_argument("invariant_form_check: dimension mismatch");
  for (std::size_t i = 0; i < rep.group()->order(); ++i) {
    const Matrix &m = rep.matrix(i);
    if (!(m * form.gram() * m.transpose() == form.gram()))
      return false;
  }
  return true;
}

BilinearForm averaged_invariant_form(const MatrixRep &rep) {
  Matrix sum(rep.dim(), rep.dim());
  for (std::size_t i = 0; i < rep.group()->order(); ++i)
    sum = sum + rep.matrix(i) * rep.matrix(i).transpose();
  if (sum.determinant() == 0)
    throw std::logic_error("averaged form is degenerate");
  // Rescale the entries, read as one vector, to a primitive integral one.
  Vector flat;
  for (std::size_t r = 0; r < sum.rows(); ++r)
    for (std::size_t c = 0; c < sum.cols(); ++c)
      flat.push_back(sum(r, c));
  flat = primitive_integral(std::move(flat));
  Matrix gram(rep.dim(), rep.dim());
  for (std::size_t r = 0; r < sum.rows(); ++r)
    for (std::size_t c = 0; c < sum.cols(); ++c)
      gram(r, c) = flat[r * sum.cols() + c];
  return BilinearForm(std::move(gram));
}

std::vector<Vector> fixed_vectors(const MatrixRep &rep, const FiniteGroupTable &subgroup) {
  if (!subgroup.is_subgroup_of(*rep.group()))
    throw std::invalid_argument("fixed_vectors: not a subgroup");
  // v (M - I) = 0 for all s  <=>  (M - I)^T v^T = 0, stacked.
  const std::size_t d = rep.dim();
  Matrix stacked(d * subgroup.order(), d);
  std::size_t block = 0;
  for (const auto &s : subgroup.elements()) {
    const Matrix shifted = (rep.of(s) - Matrix::identity(d)).transpose();
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        stacked(block * d + r, c) = shifted(r, c);
    ++block;
  }
  auto basis = stacked.kernel();
  for (auto &v : basis)
    v = primitive_integral(std::move(v));
  return basis;
}

// ---------------------------------------------------------------------------

GroupAlgebraElement::GroupAlgebraElement(GroupPtr group)
    : group_(std::move(group)), coeffs_(group_->order(), Rational(0)) {}

GroupAlgebraElement::GroupAlgebraElement(GroupPtr group, std::vector<Rational> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != group_->order())
    throw std::invalid_argument("GroupAlgebraElement: one coefficient per element required");
}

GroupAlgebraElement GroupAlgebraElement::delta(GroupPtr group, const Permutation &g) {
  GroupAlgebraElement e(group);
  e.coeffs_[group->index_of(g)] = 1;
  return e;
}

GroupAlgebraElement GroupAlgebraElement::indicator(GroupPtr group, const FiniteGroupTable &subset) {
  GroupAlgebraElement e(group);
  for (const auto &s : subset.elements())
    e.coeffs_[group->index_of(s)] = 1;
  return e;
}

std::string GroupAlgebraElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      out += group_->element(i).to_string() + " " + prym::to_string(coeffs_[i]) + "\n";
  return out;
}

GroupAlgebraElement operator+(const GroupAlgebraElement &a, const GroupAlgebraElement &b) {
  require_same_group(a.group_, b.group_, "group algebra +");
  GroupAlgebraElement r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
    r.coeffs_[i] += b.coeffs_[i];
  return r;
}

GroupAlgebraElement operator*(const Rational &s, const GroupAlgebraElement &a) {
  GroupAlgebraElement r = a;
  for (auto &c : r.coeffs_)
    c *= s;
  return r;
}

bool operator==(const GroupAlgebraElement &a, const GroupAlgebraElement &b) {
  return a.coeffs_ == b.coeffs_ && a.group_->elements() == b.group_->elements();
}

GroupAlgebraElement projector(const Vector &w, const MatrixRep &rep, const BilinearForm &form) {
  if (w.size() != rep.dim())
    throw std::invalid_argument("projector: vector of wrong dimension");
  if (std::all_of(w.begin(), w.end(), [](const Rational &x) { return x == 0; }))
    throw std::invalid_argument("projector: zero vector");
  if (!invariant_form_check(rep, form))
    throw std::invalid_argument("projector: form is not invariant");

  const auto &G = *rep.group();
  const Rational scale = Rational(static_cast<long>(rep.dim())) /
                         (Rational(static_cast<long>(G.order())) * form(w, w));
  GroupAlgebraElement p(rep.group());
  for (std::size_t i = 0; i < G.order(); ++i)
    p[i] = scale * form(w, rep.matrix(i).left_apply(w));
  return p;
}

GroupAlgebraElement convolve(const GroupAlgebraElement &a, const GroupAlgebraElement &b) {
  require_same_group(a.group(), b.group(), "convolve");
  const auto &G = *a.group();
  GroupAlgebraElement r(a.group());
  for (std::size_t x = 0; x < G.order(); ++x) {
    if (a[x] == 0)
      continue;
    for (std::size_t y = 0; y < G.order(); ++y)
      if (b[y] != 0)
        r[G.multiply(x, y)] += a[x] * b[y];
  }
  return r;
}

Matrix represent(const GroupAlgebraElement &a, const GroupAction &action) {
  require_same_group(a.group(), action.group(), "represent");
  const std::size_t n = action.domain_size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a[i] == 0)
      continue;
    const Permutation &p = action.image(i);
    for (std::size_t x = 0; x < n; ++x)
      m(x, p(static_cast<int>(x))) += a[i];
  }
  return m;
}

// ---------------------------------------------------------------------------

CosetDictionary pair_dictionary(const FiniteGroupTable &h) {
  const GroupPtr G = type_three_group_ptr();
  CosetDictionary dict{coset_action(G, h), {}};
  constexpr int p11 = 0;
  for (const auto &r : dict.cosets.representatives)
    dict.label.push_back(static_cast<std::size_t>(pair_permutation(r)(p11)));

  std::vector<std::size_t> sorted = dict.label;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != k)
      throw std::logic_error("coset dictionary is not a bijection onto the grid");
  for (const auto &g : G->elements()) {
    const auto on_cosets = dict.cosets.action.image_of(g);
    const auto on_grid = pair_permutation(g);
    for (std::size_t c = 0; c < dict.label.size(); ++c)
      if (dict.label[on_cosets(static_cast<int>(c))] !=
          static_cast<std::size_t>(on_grid(static_cast<int>(dict.label[c]))))
        throw std::logic_error("coset dictionary is not equivariant");
  }
  return dict;
}

Matrix descend(const GroupAlgebraElement &a, const FiniteGroupTable &h,
               const CosetDictionary &dictionary) {
  const GroupPtr &G = a.group();
  require_same_group(G, dictionary.cosets.action.group(), "descend");
  if (!h.is_subgroup_of(*G))
    throw DescentError("descend: H is not a subgroup");

  for (const auto &hh : h.elements())
    for (std::size_t i = 0; i < G->order(); ++i)
      if (a[G->index_of(hh * G->element(i))] != a[i])
        throw DescentError("descend: coefficients are not invariant under left H-translation (at " +
                           G->element(i).to_string() + ")");

  const std::size_t n = dictionary.label.size();
  {
    std::vector<bool> hit(n, false);
    for (auto l : dictionary.label) {
      if (l >= n || hit[l])
        throw DescentError("descend: dictionary is not a bijection");
      hit[l] = true;
    }
  }

  const Rational norm = 1 / Rational(static_cast<long>(h.order() * h.order()));
  Matrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::optional<Vector> row;
    // Every lift k of the point H*k must give the same image.
    for (std::size_t k = 0; k < G->order(); ++k) {
      if (dictionary.cosets.coset_of(G->element(k)) != c)
        continue;
      Vector image(n, Rational(0));
      for (std::size_t g = 0; g < G->order(); ++g) {
        if (a[g] == 0)
          continue;
        for (const auto &hh : h.elements()) {
          const Permutation y = G->element(g) * hh * G->element(k);
          image[dictionary.label[dictionary.cosets.coset_of(y)]] += a[g];
        }
      }
      if (row && *row != image)
        throw DescentError("descend: image depends on the chosen lift");
      row = std::move(image);
    }
    for (std::size_t t = 0; t < n; ++t)
      m(dictionary.label[c], t) = norm * (*row)[t];
  }
  return m;
}

Vector first_fixed_vector() { return {Rational(2), Rational(1)}; }

Vector second_fixed_vector() {
  auto basis = fixed_vectors(second_factor_rep(), standard_subgroups().H);
  if (basis.size() != 1)
    throw std::logic_error("H-fixed subspace of 1⊗V is not one-dimensional");
  return basis.front();
}

BilinearForm hexagonal_form() { return BilinearForm(Matrix{{2, -1}, {-1, 2}}); }

Theorem52Report theorem52_identity_check(const MonodromyDatum &d) {
  require_type_three(d);
  const GroupPtr G = type_three_group_ptr();
  const auto &H = standard_subgroups().H;
  const auto form = hexagonal_form();

  const auto p1 = projector(first_fixed_vector(), first_factor_rep(), form);
  const auto p2 = projector(second_fixed_vector(), second_factor_rep(), form);
  const auto sum = p1 + p2;
  const auto dict = pair_dictionary(H);

  Theorem52Report r;

  // Coset representatives with the displayed image of P11 and the displayed
  // coefficient of 108 (p1 + p2) on the coset.
  struct Family {
    const char *rep;
    std::size_t label;
    long coefficient;
  };
  const FiberGrid grid(sheets_per_side);
  const Family families[] = {
      {"()", grid.index(0, 0), 12},
      {"(1 3 5)", grid.index(1, 0), -6},
      {"(1 5 3)", grid.index(2, 0), -6},
      {"(2 4 6)", grid.index(0, 1), -6},
      {"(2 6 4)", grid.index(0, 2), -6},
      {"(1 3 5)(2 4 6)", grid.index(1, 1), 3},
      {"(1 3 5)(2 6 4)", grid.index(1, 2), 3},
      {"(1 5 3)(2 4 6)", grid.index(2, 1), 3},
      {"(1 5 3)(2 6 4)", grid.index(2, 2), 3},
  };

  r.dictionary_matches = true;
  for (const auto &f : families)
    r.dictionary_matches =
        r.dictionary_matches && dict.label[dict.cosets.coset_of(cyc(f.rep))] == f.label;

  r.left_coset_constant = r.right_coset_constant = true;
  for (const auto &hh : H.elements())
    for (std::size_t i = 0; i < G->order(); ++i) {
      const Permutation &g = G->element(i);
      r.left_coset_constant = r.left_coset_constant && sum.coefficient(g * hh) == sum[i];
      r.right_coset_constant = r.right_coset_constant && sum.coefficient(hh * g) == sum[i];
    }

  r.brace_matches = true;
  const auto scaled = Rational(108) * sum;
  for (std::size_t i = 0; i < G->order(); ++i) {
    const Permutation &g = G->element(i);
    const Family *family = nullptr;
    for (const auto &f : families)
      if (H.contains(g * cyc(f.rep).inverse()))
        family = &f;
    r.brace_matches = r.brace_matches && family && scaled[i] == family->coefficient;
  }

  r.lhs = Rational(36) * descend(sum, H, dict);
  const std::size_t n = grid.size();
  r.rhs = Rational(3) * (Matrix::identity(n) - build_D(sheets_per_side).entries()) +
          Matrix::ones(n, n);
  return r;
}

} // namespace prym
