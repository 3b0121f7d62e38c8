#ifndef PRYM_COVERS_HPP
#define PRYM_COVERS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prym/group.hpp"
#include "prym/monodromy.hpp"

namespace prym {

// Sheets of the composed degree-6 cover: symbols 1, 3, 5 lie over x and
// 2, 4, 6 over the conjugate point. The fiber point P_ij = x_i + y_j is the
// unordered pair {2i-1, 2j}. Every sheet-dependent construction below goes
// through these helpers.

inline constexpr std::size_t sheet_degree = 6;
inline constexpr std::size_t sheets_per_side = 3;

/// 0-based symbol of x_i / y_j (i, j 0-based).
inline int x_symbol(std::size_t i) { return static_cast<int>(2 * i); }
inline int y_symbol(std::size_t j) { return static_cast<int>(2 * j + 1); }

/// Products of three disjoint transpositions, each pairing an x-sheet with a
/// y-sheet. Sorted by image sequence.
std::vector<Permutation> admissible_involutions();
bool is_admissible(const Permutation &p);

/// The group generated by all admissible involutions (order 36).
const FiniteGroupTable &type_three_group();
GroupPtr type_three_group_ptr();

/// The named subgroups of the type III group.
struct StandardSubgroups {
  FiniteGroupTable H;  // stabilizer of the set {1, 2}
  FiniteGroupTable H1; // <(1 2)(3 4)(5 6), C2>
  FiniteGroupTable H2; // <(1 2)(3 6)(4 5), C1>
  FiniteGroupTable K;  // <(2 4 6), (1 3 5), (1 5)(2 4)>
  FiniteGroupTable L;  // stabilizer of the symbol 1
  FiniteGroupTable M;  // stabilizer of the ordered pair (1, 2)
};
const StandardSubgroups &standard_subgroups();

struct TypeClass {
  std::string label; // "I", "II", "III"
  std::size_t order;
  /// A smallest generating subset of admissible involutions.
  std::vector<Permutation> representative_generators;
  /// Distinct groups in the class arising from subsets.
  std::size_t member_count;
  /// Subsets of the admissible set generating a group in this class.
  std::size_t subset_count;
};

/// Runs over all nonempty subsets of the admissible involutions, keeps the
/// transitive generated groups and sorts them into S6-conjugacy classes,
/// labelled I, II, III by increasing order.
std::vector<TypeClass> classify_generated_types();

/// The type label of a degree-6 group, if it is transitive and conjugate in
/// S6 to one of the classified types.
std::optional<std::string> monodromy_type(const FiniteGroupTable &group);

/// The action of a sheet-respecting permutation of {1..6} on the nine
/// points P_ij (FiberGrid order). Throws std::invalid_argument if some
/// x-y pair is not sent to an x-y pair.
Permutation pair_permutation(const Permutation &g);

/// The action on the two sides {x-sheets, y-sheets}: the swap exactly when
/// `g` exchanges them. Throws std::invalid_argument if `g` mixes sides.
Permutation side_permutation(const Permutation &g);

/// The monodromy of X -> P^1: each entry pushed to the nine-point fiber.
/// Entries must be admissible.
MonodromyDatum pair_curve_action(const MonodromyDatum &d);

/// Ordered pairs (a, b) of symbols on opposite sheets, lexicographic.
const std::vector<std::pair<int, int>> &ordered_pair_points();
/// Triples (a, b, c): b != c both on the sheet opposite to a. These index
/// the fiber of Y as ((a, b), (a, c)).
const std::vector<std::array<int, 3>> &y_fiber_points();

Permutation ordered_pair_permutation(const Permutation &g);
Permutation y_fiber_permutation(const Permutation &g);

/// Monodromy on ordered pairs (degree 18); needs a type III datum.
MonodromyDatum ordered_pair_action(const MonodromyDatum &d);
/// Monodromy on the Y fiber (degree 36); needs a type III datum.
MonodromyDatum y_closure_action(const MonodromyDatum &d);

/// Monodromy of the hyperelliptic quotient C (degree 2).
MonodromyDatum side_action(const MonodromyDatum &d);

/// Group actions of the type III group realising the fibers of C, X, X~, Y.
GroupAction side_group_action();
GroupAction pair_group_action();
GroupAction ordered_pair_group_action();
GroupAction y_fiber_group_action();

/// Throws InvalidDatum unless `d` is valid with the type III group as its
/// monodromy group.
void require_type_three(const MonodromyDatum &d);

/// The splitting of the type III group as <C1> x <C2> with each factor
/// identified with S3 through fixed isomorphisms:
///   (1 2) -> (1 2)(3 4)(5 6), (1 3) -> (1 4)(2 5)(3 6)   onto <C1>
///   (1 2) -> (1 2)(3 6)(4 5), (1 3) -> (1 4)(2 3)(5 6)   onto <C2>
class FactorDecomposition {
public:
  /// Throws std::invalid_argument unless `group` is the type III group.
  explicit FactorDecomposition(const FiniteGroupTable &group);

  /// The conjugacy class containing (1 2)(3 4)(5 6) resp. (1 2)(3 6)(4 5).
  const std::vector<Permutation> &class_one() const { return c1_; }
  const std::vector<Permutation> &class_two() const { return c2_; }
  const FiniteGroupTable &factor_one() const { return f1_; }
  const FiniteGroupTable &factor_two() const { return f2_; }

  /// The unique (a, b), a in <C1>, b in <C2>, with g = a * b.
  std::pair<Permutation, Permutation> coordinates(const Permutation &g) const;
  /// Swaps the two coordinates through the fixed isomorphisms.
  Permutation tau(const Permutation &g) const;

  /// factor is 1 or 2. Maps a factor element to S3 (degree 3) and back.
  Permutation to_s3(int factor, const Permutation &x) const;
  Permutation from_s3(int factor, const Permutation &s) const;

private:
  std::vector<Permutation> c1_, c2_;
  FiniteGroupTable f1_, f2_;
  std::vector<std::pair<Permutation, Permutation>> iso1_, iso2_; // (s3, factor)
};

struct YDBijectionReport {
  std::size_t y_fiber_size = 0;
  std::size_t incidence_size = 0;
  bool bijective = false;
  bool equivariant = false;

  bool holds() const { return bijective && equivariant && y_fiber_size == incidence_size; }
};

/// Sends ((a, b), (a, c)) to (P_{ab}, P_{ac}) and checks this is a bijection
/// onto {(P, Q) : D(P, Q) = 1} commuting with every entry of `d`.
YDBijectionReport y_d_bijection_check(const MonodromyDatum &d);

/// The explicit (4, 4) datum over eight branch points used throughout:
/// two copies each of (1 2)(3 4)(5 6), (1 4)(2 5)(3 6), (1 2)(3 6)(4 5),
/// (1 4)(2 3)(5 6). Its base curve has genus 3.
MonodromyDatum genus_three_sample();

} // namespace prym

#endif // PRYM_COVERS_HPP
