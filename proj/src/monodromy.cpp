#include "prym/monodromy.hpp"

#include <set>

namespace prym {

ValidationReport validate(const MonodromyDatum &d) {
  ValidationReport r;
  if (d.degree == 0)
    r.violations.push_back("degree must be positive");
  if (d.branch_labels.size() != d.monodromy.size())
    r.violations.push_back("branch label count " + std::to_string(d.branch_labels.size()) +
                           " differs from monodromy count " + std::to_string(d.monodromy.size()));

  std::set<std::string> labels;
  for (const auto &l : d.branch_labels)
    if (!labels.insert(l).second)
      r.violations.push_back("duplicate branch label \"" + l + "\"");

  bool degrees_ok = d.degree > 0;
  for (std::size_t i = 0; i < d.monodromy.size(); ++i)
    if (d.monodromy[i].degree() != d.degree) {
      r.violations.push_back("entry " + std::to_string(i + 1) + " has degree " +
                             std::to_string(d.monodromy[i].degree()));
      degrees_ok = false;
    }
  if (!degrees_ok)
    return r;

  for (std::size_t i = 0; i < d.monodromy.size(); ++i)
    if (d.monodromy[i].is_identity())
      r.violations.push_back("entry " + std::to_string(i + 1) + " is the identity");
  Permutation prod = product(d.monodromy, d.degree);
  if (!prod.is_identity())
    r.violations.push_back("product of monodromy is " + prod.to_string() + ", not the identity");

  try {
    auto group = monodromy_group(d);
    r.group_order = group.order();
    r.transitive = is_transitive(group, full_domain(d.degree));
  } catch (const GroupTooLarge &e) {
    r.violations.push_back(e.what());
  }
  return r;
}

void require_valid(const MonodromyDatum &d) {
  auto r = validate(d);
  if (r.valid())
    return;
  std::string msg = "invalid monodromy datum:";
  for (const auto &v : r.violations)
    msg += " " + v + ";";
  throw InvalidDatum(msg);
}

FiniteGroupTable monodromy_group(const MonodromyDatum &d) {
  std::vector<Permutation> gens = d.monodromy;
  if (gens.empty())
    gens.push_back(Permutation(d.degree));
  return FiniteGroupTable::generate(std::move(gens));
}

namespace {

int genus_from_ramification(std::size_t degree, long ramification) {
  // 2g - 2 = -2 degree + ramification
  const long twice = ramification - 2 * static_cast<long>(degree) + 2;
  if (twice % 2 != 0)
    throw std::domain_error("Riemann-Hurwitz parity violation: total ramification " +
                            std::to_string(ramification) + " is odd");
  if (twice < 0)
    throw std::domain_error("Riemann-Hurwitz gives negative genus");
  return static_cast<int>(twice / 2);
}

} // namespace

int riemann_hurwitz_genus(const MonodromyDatum &d) {
  require_valid(d);
  if (!is_transitive(monodromy_group(d), full_domain(d.degree)))
    throw DisconnectedCover("cover is disconnected; use component_genera");
  long ramification = 0;
  for (const auto &s : d.monodromy)
    ramification += static_cast<long>(d.degree - s.cycle_count());
  return genus_from_ramification(d.degree, ramification);
}

std::vector<ComponentGenus> component_genera(const MonodromyDatum &d) {
  require_valid(d);
  std::vector<ComponentGenus> result;
  for (auto &orbit : orbits(monodromy_group(d), full_domain(d.degree))) {
    std::set<int> members(orbit.begin(), orbit.end());
    long ramification = 0;
    for (const auto &s : d.monodromy) {
      // points minus cycles, counted inside this orbit
      std::set<int> seen;
      long cycles = 0;
      for (int x : orbit) {
        if (seen.count(x))
          continue;
        ++cycles;
        for (int y = x; !seen.count(y); y = s(y))
          seen.insert(y);
      }
      ramification += static_cast<long>(orbit.size()) - cycles;
    }
    int g = genus_from_ramification(orbit.size(), ramification);
    result.push_back({std::move(orbit), g});
  }
  return result;
}

MonodromyDatum transport(const MonodromyDatum &d, const GroupAction &action) {
  MonodromyDatum out;
  out.degree = action.domain_size();
  out.branch_labels = d.branch_labels;
  for (const auto &s : d.monodromy)
    out.monodromy.push_back(action.image_of(s));
  return out;
}

MonodromyDatum galois_closure(const MonodromyDatum &d) {
  require_valid(d);
  auto group = share(monodromy_group(d));
  return transport(d, coset_action(group, FiniteGroupTable::trivial(d.degree)).action);
}

MonodromyDatum quotient_cover(const MonodromyDatum &d, const FiniteGroupTable &subgroup) {
  require_valid(d);
  auto group = share(monodromy_group(d));
  return strip_unbranched(transport(d, coset_action(group, subgroup).action));
}

MonodromyDatum strip_unbranched(const MonodromyDatum &d) {
  MonodromyDatum out{d.degree, {}, {}};
  for (std::size_t i = 0; i < d.monodromy.size(); ++i)
    if (!d.monodromy[i].is_identity()) {
      out.branch_labels.push_back(d.branch_labels.at(i));
      out.monodromy.push_back(d.monodromy[i]);
    }
  return out;
}

std::optional<Permutation> data_equivalent(const MonodromyDatum &a, const MonodromyDatum &b) {
  if (a.degree != b.degree || a.branch_labels != b.branch_labels ||
      a.monodromy.size() != b.monodromy.size())
    return std::nullopt;
  if (!is_transitive(monodromy_group(a), full_domain(a.degree)))
    throw DisconnectedCover("data_equivalent: first datum is disconnected");

  // A transitive datum pins phi down once phi(0) is chosen.
  const int n = static_cast<int>(a.degree);
  for (int start = 0; start < n; ++start) {
    std::vector<int> phi(a.degree, -1);
    phi[0] = start;
    std::vector<int> stack{0};
    bool ok = true;
    while (ok && !stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; ok && i < a.monodromy.size(); ++i) {
        const int y = a.monodromy[i](x), target = b.monodromy[i](phi[x]);
        if (phi[y] < 0) {
          phi[y] = target;
          stack.push_back(y);
        } else {
          ok = phi[y] == target;
        }
      }
    }
    if (!ok || std::set<int>(phi.begin(), phi.end()).size() != a.degree)
      continue;
    return Permutation(std::move(phi));
  }
  return std::nullopt;
}

FiberGrid::FiberGrid(std::size_t n) : n_(n) {
  if (n == 0)
    throw std::invalid_argument("FiberGrid: n must be positive");
}

std::size_t FiberGrid::index(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_)
    throw std::out_of_range("FiberGrid: index out of range");
  return i * n_ + j;
}

std::string FiberGrid::label(std::size_t k) const {
  if (k >= size())
    throw std::out_of_range("FiberGrid: label out of range");
  if (n_ < 10)
    return "P" + std::to_string(row(k) + 1) + std::to_string(col(k) + 1);
  return "P" + std::to_string(row(k) + 1) + "," + std::to_string(col(k) + 1);
}

} // namespace prym
