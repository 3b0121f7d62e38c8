#include "prym/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace prym {

namespace {

std::vector<Permutation> greedy_generators(const std::vector<Permutation> &elements,
                                           std::size_t degree) {
  // Add elements in order until they generate everything.
  std::vector<Permutation> gens;
  std::unordered_map<Permutation, bool> span{{Permutation(degree), true}};
  for (const auto &g : elements) {
    if (span.count(g))
      continue;
    gens.push_back(g);
    std::vector<Permutation> frontier;
    for (const auto &[p, _] : span)
      frontier.push_back(p);
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto &p : frontier)
        for (const auto &s : gens) {
          Permutation q = p * s;
          if (span.emplace(q, true).second)
            next.push_back(std::move(q));
        }
      frontier = std::move(next);
    }
    if (span.size() == elements.size())
      break;
  }
  return gens;
}

} // namespace

FiniteGroupTable::FiniteGroupTable(std::size_t degree, std::vector<Permutation> generators,
                                   std::vector<Permutation> elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    index_.emplace(elements_[i], i);
}

FiniteGroupTable FiniteGroupTable::generate(std::vector<Permutation> generators,
                                            std::size_t cap) {
  if (generators.empty())
    throw std::invalid_argument("generate: empty generator list");
  const std::size_t degree = generators.front().degree();
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generate: generators of different degrees");

  std::unordered_map<Permutation, bool> seen;
  std::vector<Permutation> elements{Permutation(degree)};
  seen.emplace(elements.front(), true);
  std::vector<Permutation> frontier = elements;
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto &p : frontier)
      for (const auto &s : generators) {
        Permutation q = p * s;
        if (seen.emplace(q, true).second) {
          if (elements.size() >= cap)
            throw GroupTooLarge("generate: closure exceeds " + std::to_string(cap) + " elements");
          elements.push_back(q);
          next.push_back(std::move(q));
        }
      }
    frontier = std::move(next);
  }
  return FiniteGroupTable(degree, std::move(generators), std::move(elements));
}

FiniteGroupTable FiniteGroupTable::from_elements(std::size_t degree,
                                                 std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::unordered_map<Permutation, bool> members;
  for (const auto &g : elements) {
    if (g.degree() != degree)
      throw std::invalid_argument("from_elements: degree mismatch");
    members.emplace(g, true);
  }
  if (!members.count(Permutation(degree)))
    throw std::invalid_argument("from_elements: identity missing");
  for (const auto &a : elements)
    for (const auto &b : elements)
      if (!members.count(a * b))
        throw std::invalid_argument("from_elements: not closed under composition");
  auto gens = greedy_generators(elements, degree);
  if (gens.empty())
    gens.push_back(Permutation(degree));
  return FiniteGroupTable(degree, std::move(gens), std::move(elements));
}

FiniteGroupTable FiniteGroupTable::trivial(std::size_t degree) {
  return FiniteGroupTable(degree, {Permutation(degree)}, {Permutation(degree)});
}

std::optional<std::size_t> FiniteGroupTable::find(const Permutation &g) const {
  auto it = index_.find(g);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

std::size_t FiniteGroupTable::index_of(const Permutation &g) const {
  auto it = index_.find(g);
  if (it == index_.end())
    throw std::out_of_range("element " + g.to_string() + " not in group");
  return it->second;
}

std::size_t FiniteGroupTable::multiply(std::size_t i, std::size_t j) const {
  return index_of(elements_[i] * elements_[j]);
}

std::size_t FiniteGroupTable::inverse(std::size_t i) const {
  return index_of(elements_[i].inverse());
}

bool FiniteGroupTable::is_subgroup_of(const FiniteGroupTable &other) const {
  if (degree_ != other.degree_)
    return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Permutation &g) { return other.contains(g); });
}

std::size_t FiniteGroupTable::exponent() const {
  std::size_t e = 1;
  for (const auto &g : elements_)
    e = std::lcm(e, g.order());
  return e;
}

// ---------------------------------------------------------------------------

GroupAction::GroupAction(GroupPtr group, std::size_t domain_size, std::vector<Permutation> images)
    : group_(std::move(group)), domain_size_(domain_size), images_(std::move(images)) {
  if (!group_)
    throw std::invalid_argument("GroupAction: null group");
  if (images_.size() != group_->order())
    throw std::invalid_argument("GroupAction: need one image per group element");
  for (const auto &p : images_)
    if (p.degree() != domain_size_)
      throw std::invalid_argument("GroupAction: image of wrong degree");
}

GroupAction GroupAction::induced(GroupPtr group, std::size_t domain_size,
                                 const std::function<Permutation(const Permutation &)> &f) {
  std::vector<Permutation> images;
  images.reserve(group->order());
  for (const auto &g : group->elements())
    images.push_back(f(g));
  return GroupAction(std::move(group), domain_size, std::move(images));
}

GroupAction GroupAction::natural(GroupPtr group) {
  const std::size_t n = group->degree();
  return induced(std::move(group), n, [](const Permutation &g) { return g; });
}

const Permutation &GroupAction::image_of(const Permutation &g) const {
  return images_[group_->index_of(g)];
}

bool GroupAction::is_homomorphism() const {
  const auto &G = *group_;
  for (std::size_t i = 0; i < G.order(); ++i)
    for (std::size_t j = 0; j < G.order(); ++j)
      if (images_[G.multiply(i, j)] != images_[i] * images_[j])
        return false;
  return true;
}

std::vector<std::vector<int>> GroupAction::orbits() const {
  std::vector<int> label(domain_size_, -1);
  std::vector<std::vector<int>> result;
  for (std::size_t x = 0; x < domain_size_; ++x) {
    if (label[x] >= 0)
      continue;
    std::vector<int> orbit;
    for (const auto &p : images_) {
      int y = p(static_cast<int>(x));
      if (label[y] < 0) {
        label[y] = static_cast<int>(result.size());
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

FiniteGroupTable GroupAction::kernel() const {
  std::vector<Permutation> k;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i].is_identity())
      k.push_back(group_->element(i));
  return FiniteGroupTable::from_elements(group_->degree(), std::move(k));
}

FiniteGroupTable GroupAction::point_stabilizer(int point) const {
  std::vector<Permutation> k;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i](point) == point)
      k.push_back(group_->element(i));
  return FiniteGroupTable::from_elements(group_->degree(), std::move(k));
}

// ---------------------------------------------------------------------------

std::vector<int> full_domain(std::size_t n) {
  std::vector<int> d(n);
  std::iota(d.begin(), d.end(), 0);
  return d;
}

std::vector<std::vector<int>> orbits(const FiniteGroupTable &group,
                                     const std::vector<int> &domain) {
  std::set<int> remaining(domain.begin(), domain.end());
  for (int x : remaining)
    if (x < 0 || static_cast<std::size_t>(x) >= group.degree())
      throw std::invalid_argument("orbits: point outside the group's degree");
  std::vector<std::vector<int>> result;
  while (!remaining.empty()) {
    int x = *remaining.begin();
    std::set<int> orbit;
    for (const auto &g : group.elements())
      orbit.insert(g(x));
    for (int y : orbit)
      remaining.erase(y);
    result.emplace_back(orbit.begin(), orbit.end());
  }
  return result;
}

bool is_transitive(const FiniteGroupTable &group, const std::vector<int> &domain) {
  return orbits(group, domain).size() == 1;
}

namespace {

FiniteGroupTable filter(const FiniteGroupTable &group,
                        const std::function<bool(const Permutation &)> &keep) {
  std::vector<Permutation> kept;
  for (const auto &g : group.elements())
    if (keep(g))
      kept.push_back(g);
  return FiniteGroupTable::from_elements(group.degree(), std::move(kept));
}

} // namespace

FiniteGroupTable point_stabilizer(const FiniteGroupTable &group, int point) {
  return filter(group, [point](const Permutation &g) { return g(point) == point; });
}

FiniteGroupTable set_stabilizer(const FiniteGroupTable &group, const std::vector<int> &set) {
  std::set<int> target(set.begin(), set.end());
  return filter(group, [&](const Permutation &g) {
    return std::all_of(target.begin(), target.end(), [&](int x) { return target.count(g(x)) > 0; });
  });
}

FiniteGroupTable tuple_stabilizer(const FiniteGroupTable &group, const std::vector<int> &tuple) {
  return filter(group, [&](const Permutation &g) {
    return std::all_of(tuple.begin(), tuple.end(), [&](int x) { return g(x) == x; });
  });
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroupTable &group) {
  const std::size_t n = group.order();
  std::vector<bool> done(n, false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i])
      continue;
    std::set<std::size_t> cls;
    for (const auto &g : group.elements())
      cls.insert(group.index_of(conjugate(group.element(i), g)));
    for (auto j : cls)
      done[j] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

FiniteGroupTable conjugate_subgroup(const FiniteGroupTable &subgroup, const Permutation &g) {
  std::vector<Permutation> conj;
  conj.reserve(subgroup.order());
  for (const auto &s : subgroup.elements())
    conj.push_back(conjugate(s, g));
  return FiniteGroupTable::from_elements(subgroup.degree(), std::move(conj));
}

bool subgroups_conjugate(const FiniteGroupTable &group, const FiniteGroupTable &a,
                         const FiniteGroupTable &b) {
  if (a.order() != b.order())
    return false;
  for (const auto &g : group.elements()) {
    bool ok = std::all_of(a.elements().begin(), a.elements().end(),
                          [&](const Permutation &s) { return b.contains(conjugate(s, g)); });
    if (ok)
      return true;
  }
  return false;
}

namespace {

using Mask = std::vector<bool>;

Mask closure(const FiniteGroupTable &group, const std::vector<std::size_t> &gens) {
  Mask in(group.order(), false);
  in[0] = true; // identity sorts first
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto x : frontier)
      for (auto s : gens) {
        auto y = group.multiply(x, s);
        if (!in[y]) {
          in[y] = true;
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return in;
}

FiniteGroupTable to_table(const FiniteGroupTable &group, const Mask &mask) {
  std::vector<Permutation> el;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i])
      el.push_back(group.element(i));
  return FiniteGroupTable::from_elements(group.degree(), std::move(el));
}

} // namespace

std::vector<FiniteGroupTable> all_subgroups(const FiniteGroupTable &group, std::size_t order_cap) {
  if (group.order() > order_cap)
    throw GroupTooLarge("all_subgroups: group order " + std::to_string(group.order()) +
                        " exceeds cap " + std::to_string(order_cap));

  std::set<Mask> cyclic;
  for (std::size_t i = 0; i < group.order(); ++i)
    cyclic.insert(closure(group, {i}));

  // Each subgroup is the join of the cyclic subgroups it contains, so joining
  // known subgroups with cyclic ones reaches every subgroup.
  std::set<Mask> found(cyclic.begin(), cyclic.end());
  std::vector<Mask> queue(found.begin(), found.end());
  while (!queue.empty()) {
    Mask current = std::move(queue.back());
    queue.pop_back();
    for (const auto &c : cyclic) {
      std::vector<std::size_t> gens;
      for (std::size_t i = 0; i < current.size(); ++i)
        if (current[i] || c[i])
          gens.push_back(i);
      Mask joined = closure(group, gens);
      if (found.insert(joined).second)
        queue.push_back(std::move(joined));
    }
  }

  std::vector<FiniteGroupTable> result;
  result.reserve(found.size());
  for (const auto &m : found)
    result.push_back(to_table(group, m));
  std::sort(result.begin(), result.end(), [](const auto &a, const auto &b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return result;
}

std::vector<std::vector<std::size_t>>
subgroup_conjugacy_classes(const FiniteGroupTable &group,
                           const std::vector<FiniteGroupTable> &subgroups) {
  std::map<std::vector<Permutation>, std::size_t> lookup;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    lookup.emplace(subgroups[i].elements(), i);

  std::vector<bool> done(subgroups.size(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (done[i])
      continue;
    std::set<std::size_t> cls;
    for (const auto &g : group.elements()) {
      auto it = lookup.find(conjugate_subgroup(subgroups[i], g).elements());
      if (it == lookup.end())
        throw std::invalid_argument("subgroup list not closed under conjugation");
      cls.insert(it->second);
    }
    for (auto j : cls)
      done[j] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

// ---------------------------------------------------------------------------

std::size_t CosetAction::coset_of(const Permutation &g) const {
  return (*coset_of_element)[action.group()->index_of(g)];
}

namespace {

CosetAction build_cosets(GroupPtr group, const FiniteGroupTable &subgroup,
                         const std::vector<Permutation> &seed_reps) {
  if (!subgroup.is_subgroup_of(*group))
    throw std::invalid_argument("coset_action: not a subgroup");
  const auto &G = *group;
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset(G.order(), unassigned);
  std::vector<Permutation> reps;

  auto add_coset = [&](const Permutation &r) {
    const std::size_t id = reps.size();
    for (const auto &s : subgroup.elements()) {
      auto k = G.index_of(s * r);
      if (coset[k] != unassigned)
        throw std::invalid_argument("coset_action: representatives " + r.to_string() +
                                    " and " + reps[coset[k]].to_string() + " share a coset");
      coset[k] = id;
    }
    reps.push_back(r);
  };

  for (const auto &r : seed_reps)
    add_coset(r);
  for (std::size_t i = 0; i < G.order(); ++i)
    if (coset[i] == unassigned) {
      if (!seed_reps.empty())
        throw std::invalid_argument("coset_action: representatives miss a coset");
      add_coset(G.element(i));
    }

  const std::size_t index = reps.size();
  std::vector<Permutation> images;
  images.reserve(G.order());
  for (const auto &g : G.elements()) {
    std::vector<int> img(index);
    for (std::size_t c = 0; c < index; ++c)
      img[c] = static_cast<int>(coset[G.index_of(reps[c] * g)]);
    images.emplace_back(std::move(img));
  }
  return CosetAction{GroupAction(std::move(group), index, std::move(images)), std::move(reps),
                     std::make_shared<const std::vector<std::size_t>>(std::move(coset))};
}

} // namespace

CosetAction coset_action(GroupPtr group, const FiniteGroupTable &subgroup) {
  return build_cosets(std::move(group), subgroup, {});
}

CosetAction coset_action(GroupPtr group, const FiniteGroupTable &subgroup,
                         const std::vector<Permutation> &representatives) {
  if (representatives.empty())
    throw std::invalid_argument("coset_action: empty representative list");
  return build_cosets(std::move(group), subgroup, representatives);
}

// ---------------------------------------------------------------------------

namespace {

struct EquivalenceSearch {
  const GroupAction &a;
  const GroupAction &b;
  std::vector<std::vector<int>> orbits_a;
  std::vector<std::vector<int>> orbits_b;
  std::vector<int> phi;
  std::vector<bool> orbit_used;

  std::vector<std::size_t> stabilizer_indices(const GroupAction &act, int x) const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < act.images().size(); ++i)
      if (act.image(i)(x) == x)
        s.push_back(i);
    return s;
  }

  bool search(std::size_t k) {
    if (k == orbits_a.size())
      return true;
    const int x0 = orbits_a[k].front();
    const auto stab_a = stabilizer_indices(a, x0);
    for (std::size_t ob = 0; ob < orbits_b.size(); ++ob) {
      if (orbit_used[ob] || orbits_b[ob].size() != orbits_a[k].size())
        continue;
      for (int y : orbits_b[ob]) {
        // phi(x0^g) = y^g is well defined iff the point stabilizers agree.
        if (stabilizer_indices(b, y) != stab_a)
          continue;
        for (std::size_t i = 0; i < a.images().size(); ++i)
          phi[a.image(i)(x0)] = b.image(i)(y);
        orbit_used[ob] = true;
        if (search(k + 1))
          return true;
        orbit_used[ob] = false;
        for (int x : orbits_a[k])
          phi[x] = -1;
      }
    }
    return false;
  }
};

} // namespace

std::optional<Permutation> actions_equivalent(const GroupAction &a, const GroupAction &b) {
  if (a.group()->elements() != b.group()->elements())
    throw std::invalid_argument("actions_equivalent: actions of different groups");
  if (a.domain_size() != b.domain_size())
    return std::nullopt;

  EquivalenceSearch s{a, b, a.orbits(), b.orbits(),
                      std::vector<int>(a.domain_size(), -1), {}};
  s.orbit_used.assign(s.orbits_b.size(), false);
  if (s.orbits_a.size() != s.orbits_b.size() || !s.search(0))
    return std::nullopt;

  Permutation phi(s.phi);
  for (std::size_t i = 0; i < a.images().size(); ++i)
    for (std::size_t x = 0; x < a.domain_size(); ++x)
      if (phi(a.image(i)(static_cast<int>(x))) != b.image(i)(phi(static_cast<int>(x))))
        return std::nullopt;
  return phi;
}

} // namespace prym
