#ifndef PRYM_GROUP_HPP
#define PRYM_GROUP_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "prym/permutation.hpp"

namespace prym {

/// Thrown when closure outgrows the configured element cap.
class GroupTooLarge : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A permutation group with every element enumerated.
///
/// Elements are stored sorted by image sequence, so the identity is always
/// element 0 and any two tables over the same element set are identical.
class FiniteGroupTable {
public:
  static constexpr std::size_t default_element_cap = 10000;

  /// Closure of the generators. Throws std::invalid_argument on an empty
  /// list or mixed degrees, GroupTooLarge past `cap` elements.
  static FiniteGroupTable generate(std::vector<Permutation> generators,
                                   std::size_t cap = default_element_cap);

  /// Wraps an element set that must already be a group (checked).
  static FiniteGroupTable from_elements(std::size_t degree, std::vector<Permutation> elements);

  static FiniteGroupTable trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation> &generators() const { return generators_; }
  const std::vector<Permutation> &elements() const { return elements_; }
  const Permutation &element(std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> find(const Permutation &g) const;
  /// Index of `g`; throws std::out_of_range if absent.
  std::size_t index_of(const Permutation &g) const;
  bool contains(const Permutation &g) const { return find(g).has_value(); }

  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const;

  /// Element-set containment.
  bool is_subgroup_of(const FiniteGroupTable &other) const;
  std::size_t exponent() const;

  friend bool operator==(const FiniteGroupTable &a, const FiniteGroupTable &b) {
    return a.elements_ == b.elements_;
  }

private:
  FiniteGroupTable(std::size_t degree, std::vector<Permutation> generators,
                   std::vector<Permutation> elements);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t> index_;
};

using GroupPtr = std::shared_ptr<const FiniteGroupTable>;

inline GroupPtr share(FiniteGroupTable g) {
  return std::make_shared<const FiniteGroupTable>(std::move(g));
}

/// A right action of an enumerated group on {0, ..., domain_size-1}: the
/// permutation attached to `g * h` is `action(g) * action(h)`.
class GroupAction {
public:
  /// `images[i]` is the permutation of element i of the group.
  GroupAction(GroupPtr group, std::size_t domain_size, std::vector<Permutation> images);

  /// Builds the action by evaluating `f` on every element.
  static GroupAction induced(GroupPtr group, std::size_t domain_size,
                             const std::function<Permutation(const Permutation &)> &f);

  /// The group acting on its own points.
  static GroupAction natural(GroupPtr group);

  const GroupPtr &group() const { return group_; }
  std::size_t domain_size() const { return domain_size_; }
  const Permutation &image(std::size_t element_index) const { return images_[element_index]; }
  const Permutation &image_of(const Permutation &g) const;
  const std::vector<Permutation> &images() const { return images_; }

  /// Exhaustive homomorphism check over all pairs of elements.
  bool is_homomorphism() const;
  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const { return orbits().size() == 1; }
  /// Elements acting trivially.
  FiniteGroupTable kernel() const;
  FiniteGroupTable point_stabilizer(int point) const;

private:
  GroupPtr group_;
  std::size_t domain_size_;
  std::vector<Permutation> images_;
};

/// Orbit partition of `domain` under the group's natural action. Each orbit
/// is sorted; orbits are ordered by their smallest point.
std::vector<std::vector<int>> orbits(const FiniteGroupTable &group, const std::vector<int> &domain);
bool is_transitive(const FiniteGroupTable &group, const std::vector<int> &domain);
/// {0, ..., n-1}.
std::vector<int> full_domain(std::size_t n);

FiniteGroupTable point_stabilizer(const FiniteGroupTable &group, int point);
FiniteGroupTable set_stabilizer(const FiniteGroupTable &group, const std::vector<int> &set);
FiniteGroupTable tuple_stabilizer(const FiniteGroupTable &group, const std::vector<int> &tuple);

/// Element-index classes, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroupTable &group);

/// `g^-1 S g`.
FiniteGroupTable conjugate_subgroup(const FiniteGroupTable &subgroup, const Permutation &g);
bool subgroups_conjugate(const FiniteGroupTable &group, const FiniteGroupTable &a,
                         const FiniteGroupTable &b);

/// Every subgroup exactly once, sorted by (order, elements). Built by joining
/// cyclic subgroups until nothing new appears. Throws GroupTooLarge above
/// `order_cap`.
std::vector<FiniteGroupTable> all_subgroups(const FiniteGroupTable &group,
                                            std::size_t order_cap = 100);

/// Partition of `subgroups` (indices) into classes under conjugation by `group`.
std::vector<std::vector<std::size_t>>
subgroup_conjugacy_classes(const FiniteGroupTable &group,
                           const std::vector<FiniteGroupTable> &subgroups);

/// The action on right cosets S*g by right multiplication. In function-
/// composition notation these are the left cosets g∘S acted on from the left.
struct CosetAction {
  GroupAction action;
  /// One representative per coset; coset 0 is the subgroup itself.
  std::vector<Permutation> representatives;
  std::shared_ptr<const std::vector<std::size_t>> coset_of_element;

  std::size_t coset_of(const Permutation &g) const;
  std::size_t index() const { return representatives.size(); }
};

/// Cosets indexed in order of their first element. Throws
/// std::invalid_argument if `subgroup` is not contained in the group.
CosetAction coset_action(GroupPtr group, const FiniteGroupTable &subgroup);

/// Same, but cosets in the order given by `representatives`, which must hit
/// every coset exactly once.
CosetAction coset_action(GroupPtr group, const FiniteGroupTable &subgroup,
                         const std::vector<Permutation> &representatives);

/// A bijection `phi` of domains with `phi(x^a(g)) == phi(x)^b(g)` for all g,
/// returned as a permutation mapping a-points to b-points, or nullopt.
/// Both actions must be over the same element list.
std::optional<Permutation> actions_equivalent(const GroupAction &a, const GroupAction &b);

} // namespace prym

#endif // PRYM_GROUP_HPP
