#ifndef PRYM_MONODROMY_HPP
#define PRYM_MONODROMY_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prym/group.hpp"
#include "prym/permutation.hpp"

namespace prym {

/// A branched cover of the line, given by its local monodromies around each
/// branch point. Valid data multiply to the identity left to right and have
/// no trivial entry.
struct MonodromyDatum {
  std::size_t degree = 0;
  std::vector<std::string> branch_labels;
  std::vector<Permutation> monodromy;

  friend bool operator==(const MonodromyDatum &, const MonodromyDatum &) = default;
};

/// Thrown when an operation receives a datum that fails validation.
class InvalidDatum : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by the genus computation for disconnected covers.
class DisconnectedCover : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::size_t group_order = 0;
  bool transitive = false;

  bool valid() const { return violations.empty(); }
};

/// Reports every violated invariant separately; never throws.
ValidationReport validate(const MonodromyDatum &d);
/// Throws InvalidDatum carrying all violations.
void require_valid(const MonodromyDatum &d);

FiniteGroupTable monodromy_group(const MonodromyDatum &d);

/// 2g - 2 = -2 n + sum (n - #cycles(sigma_i)). Requires a valid, transitive
/// datum; throws DisconnectedCover otherwise and std::domain_error on a
/// parity failure or negative genus.
int riemann_hurwitz_genus(const MonodromyDatum &d);

struct ComponentGenus {
  std::vector<int> orbit;
  int genus;
};

/// One genus per connected component (monodromy orbit).
std::vector<ComponentGenus> component_genera(const MonodromyDatum &d);

/// Pushes each entry of `d` through `action` (whose group must contain
/// every entry); labels are kept.
MonodromyDatum transport(const MonodromyDatum &d, const GroupAction &action);

/// Regular action of the monodromy group on its elements (sorted by image
/// sequence), each entry acting by right translation.
MonodromyDatum galois_closure(const MonodromyDatum &d);

/// Monodromy on the cosets of `subgroup`, i.e. the intermediate cover, with
/// the points over which it is unbranched dropped. Throws
/// std::invalid_argument if `subgroup` is not inside the monodromy group.
MonodromyDatum quotient_cover(const MonodromyDatum &d, const FiniteGroupTable &subgroup);

/// Removes identity entries together with their labels.
MonodromyDatum strip_unbranched(const MonodromyDatum &d);

/// A relabelling `phi` of points with `phi(a_i(x)) == b_i(phi(x))` for every
/// entry, given equal degrees and labels; nullopt otherwise. Throws
/// DisconnectedCover unless `a` is transitive.
std::optional<Permutation> data_equivalent(const MonodromyDatum &a, const MonodromyDatum &b);

/// The n x n grid of fiber points P_ij in row-major order.
class FiberGrid {
public:
  explicit FiberGrid(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t size() const { return n_ * n_; }
  /// 0-based (i, j) to row-major index.
  std::size_t index(std::size_t i, std::size_t j) const;
  std::size_t row(std::size_t k) const { return k / n_; }
  std::size_t col(std::size_t k) const { return k % n_; }
  /// "P11" style, 1-based.
  std::string label(std::size_t k) const;

private:
  std::size_t n_;
};

} // namespace prym

#endif // PRYM_MONODROMY_HPP
