#ifndef PRYM_MODULI_HPP
#define PRYM_MODULI_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prym/monodromy.hpp"

namespace prym {

/// Type (alpha, beta) of a type III datum: how many entries fall in the
/// class C1 of (1 2)(3 4)(5 6) and in the class C2 of (1 2)(3 6)(4 5).
struct CoveringType {
  long alpha = 0;
  long beta = 0;
  long genus = 0; // of the hyperelliptic base, 2 genus + 2 = alpha + beta
  /// 1 or 2 per entry of the datum.
  std::vector<int> factor_of_entry;
};

/// Throws InvalidDatum unless `d` is type III with every entry in C1 or
/// C2, the entries of each class multiply to one in order, and alpha, beta
/// are even and at least 4.
CoveringType covering_type(const MonodromyDatum &d);

/// Two simply ramified connected triple covers with disjoint branch labels.
struct TrigonalPair {
  MonodromyDatum first;
  MonodromyDatum second;

  friend bool operator==(const TrigonalPair &, const TrigonalPair &) = default;
};

/// Throws InvalidDatum unless `d` is a valid transitive degree-3 datum whose
/// entries are all transpositions.
void require_trigonal(const MonodromyDatum &d);

/// Sends the C1 entries through <C1> -> S3 and the C2 entries through
/// <C2> -> S3, keeping labels and relative order.
TrigonalPair split(const MonodromyDatum &d);

/// Inverse of split. `interleaving` lists every label of both factors once;
/// by default all first labels, then all second labels.
MonodromyDatum merge(const TrigonalPair &pair,
                     const std::optional<std::vector<std::string>> &interleaving = std::nullopt);

/// Deterministic for (alpha, beta, seed): random transposition tuples with
/// product one and full image in each factor, merged with labels a1..a{alpha}
/// for the first factor and the following ones for the second.
/// Throws std::invalid_argument unless alpha, beta are even and >= 4.
MonodromyDatum sample(long alpha, long beta, std::uint64_t seed);

struct GenusRow {
  std::string curve;
  std::size_t degree; // of the cover of the line used for Riemann-Hurwitz
  long riemann_hurwitz;
  long closed_form;
};

struct GenusTable {
  CoveringType type;
  std::vector<GenusRow> rows; // C, C~, X, X1, X2, X~, Y
  long dim_prym = 0;          // g - 3
  long weil_trace_dim = 0;

  bool consistent() const;
  long genus_of(const std::string &curve) const;
};

/// Genera of C, C~, X, X1, X2, X~, Y by Riemann-Hurwitz on the constructed
/// actions next to the closed formulas g, 3g-2, 3g-5, a/2-2, b/2-2, 9g-8,
/// 18g-17.
GenusTable genus_table(const MonodromyDatum &d);

/// (2 g(X) - Tr(gamma_D)) / 6 with Tr(gamma_D) = 8 and g(X) = 3g - 5.
/// Throws std::invalid_argument for g < 3 and std::logic_error if the
/// division is not exact or the result is not g - 3.
long dim_from_weil_trace(long g);

/// alpha + beta - 3.
long moduli_dimension(long alpha, long beta);

struct SubgroupGenus {
  std::size_t order;
  std::size_t class_size;
  std::string name; // standard subgroup conjugate to it, or empty
  std::vector<Permutation> generators;
  long quotient_genus;
  bool equals_dim_prym;
};

/// One row per conjugacy class of subgroups of the type III group.
std::vector<SubgroupGenus> subgroup_genus_report(const MonodromyDatum &d);

} // namespace prym

#endif // PRYM_MODULI_HPP
