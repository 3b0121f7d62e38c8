#include "prym/covers.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "prym/correspondence.hpp"

namespace prym {

namespace {

bool on_x_sheet(int symbol) { return symbol % 2 == 0; }

Permutation cyc(const char *text) { return parse_cycles(text, sheet_degree); }

/// Grid index of the unordered pair {a, b} with a, b on opposite sheets.
std::size_t pair_index(int a, int b) {
  if (on_x_sheet(a) == on_x_sheet(b))
    throw std::invalid_argument("pair of symbols on the same sheet");
  const int x = on_x_sheet(a) ? a : b;
  const int y = on_x_sheet(a) ? b : a;
  return FiberGrid(sheets_per_side).index(static_cast<std::size_t>(x / 2),
                                          static_cast<std::size_t>(y / 2));
}

const FiniteGroupTable &symmetric_group_six() {
  static const FiniteGroupTable s6 =
      FiniteGroupTable::generate({cyc("(1 2)"), cyc("(1 2 3 4 5 6)")});
  return s6;
}

bool conjugate_in_s6(const FiniteGroupTable &a, const FiniteGroupTable &b) {
  return subgroups_conjugate(symmetric_group_six(), a, b);
}

struct Classification {
  std::vector<TypeClass> classes;
  std::vector<FiniteGroupTable> representatives;
};

const Classification &classification() {
  static const Classification result = [] {
    const auto adm = admissible_involutions();
    const unsigned full = (1u << adm.size()) - 1;
    std::vector<unsigned> masks;
    for (unsigned m = 1; m <= full; ++m)
      masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
      return std::popcount(a) < std::popcount(b);
    });

    Classification c;
    std::vector<std::set<std::vector<Permutation>>> members;
    for (unsigned m : masks) {
      std::vector<Permutation> gens;
      for (std::size_t i = 0; i < adm.size(); ++i)
        if (m & (1u << i))
          gens.push_back(adm[i]);
      auto group = FiniteGroupTable::generate(gens);
      if (!is_transitive(group, full_domain(sheet_degree)))
        continue;
      std::size_t k = 0;
      while (k < c.representatives.size() && !conjugate_in_s6(c.representatives[k], group))
        ++k;
      if (k == c.representatives.size()) {
        c.representatives.push_back(group);
        c.classes.push_back({"", group.order(), gens, 0, 0});
        members.emplace_back();
      }
      members[k].insert(group.elements());
      ++c.classes[k].subset_count;
    }
    for (std::size_t k = 0; k < c.classes.size(); ++k)
      c.classes[k].member_count = members[k].size();

    std::vector<std::size_t> order(c.classes.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return c.classes[a].order < c.classes[b].order;
    });
    static const char *const numerals[] = {"I", "II", "III", "IV", "V", "VI", "VII", "VIII"};
    Classification sorted;
    for (std::size_t i = 0; i < order.size(); ++i) {
      sorted.classes.push_back(c.classes[order[i]]);
      sorted.classes.back().label = i < 8 ? numerals[i] : std::to_string(i + 1);
      sorted.representatives.push_back(c.representatives[order[i]]);
    }
    return sorted;
  }();
  return result;
}

template <class Point>
Permutation permute_points(const std::vector<Point> &points, const std::map<Point, int> &index,
                           const std::function<Point(const Point &)> &move) {
  std::vector<int> images;
  images.reserve(points.size());
  for (const auto &p : points) {
    auto it = index.find(move(p));
    if (it == index.end())
      throw std::invalid_argument("permutation does not respect the sheets");
    images.push_back(it->second);
  }
  return Permutation(std::move(images));
}

template <class Point> std::map<Point, int> index_points(const std::vector<Point> &points) {
  std::map<Point, int> index;
  for (std::size_t i = 0; i < points.size(); ++i)
    index.emplace(points[i], static_cast<int>(i));
  return index;
}

} // namespace

std::vector<Permutation> admissible_involutions() {
  std::vector<Permutation> result;
  std::vector<int> ys{1, 3, 5};
  do {
    std::vector<int> images(sheet_degree);
    for (std::size_t i = 0; i < sheets_per_side; ++i) {
      images[x_symbol(i)] = ys[i];
      images[ys[i]] = x_symbol(i);
    }
    result.emplace_back(std::move(images));
  } while (std::next_permutation(ys.begin(), ys.end()));
  std::sort(result.begin(), result.end());
  return result;
}

bool is_admissible(const Permutation &p) {
  if (p.degree() != sheet_degree)
    return false;
  for (int s = 0; s < static_cast<int>(sheet_degree); ++s)
    if (on_x_sheet(p(s)) == on_x_sheet(s) || p(p(s)) != s)
      return false;
  return true;
}

const FiniteGroupTable &type_three_group() { return *type_three_group_ptr(); }

GroupPtr type_three_group_ptr() {
  static const GroupPtr g =
      share(FiniteGroupTable::generate({cyc("(2 4 6)"), cyc("(1 5)(2 4)"), cyc("(1 4)(2 5)(3 6)")}));
  return g;
}

const StandardSubgroups &standard_subgroups() {
  static const StandardSubgroups s = [] {
    auto gen = [](std::initializer_list<const char *> texts) {
      std::vector<Permutation> g;
      for (auto t : texts)
        g.push_back(cyc(t));
      return FiniteGroupTable::generate(g);
    };
    StandardSubgroups r{
        gen({"(1 2)(3 4)(5 6)", "(3 5)(4 6)"}),
        gen({"(1 2)(3 4)(5 6)", "(3 5)(4 6)", "(1 3 5)(2 4 6)"}),
        gen({"(1 2)(3 4)(5 6)", "(3 5)(4 6)", "(1 3 5)(2 6 4)"}),
        gen({"(2 4 6)", "(1 3 5)", "(1 5)(2 4)"}),
        gen({"(2 4 6)", "(3 5)(4 6)"}),
        gen({"(3 5)(4 6)"}),
    };
    for (const auto *sub : {&r.H, &r.H1, &r.H2, &r.K, &r.L, &r.M})
      if (!sub->is_subgroup_of(type_three_group()))
        throw std::logic_error("standard subgroup outside the type III group");
    return r;
  }();
  return s;
}

std::vector<TypeClass> classify_generated_types() { return classification().classes; }

std::optional<std::string> monodromy_type(const FiniteGroupTable &group) {
  if (group.degree() != sheet_degree || !is_transitive(group, full_domain(sheet_degree)))
    return std::nullopt;
  const auto &c = classification();
  for (std::size_t k = 0; k < c.classes.size(); ++k)
    if (conjugate_in_s6(c.representatives[k], group))
      return c.classes[k].label;
  return std::nullopt;
}

Permutation pair_permutation(const Permutation &g) {
  if (g.degree() != sheet_degree)
    throw std::invalid_argument("pair_permutation: degree must be 6");
  FiberGrid grid(sheets_per_side);
  std::vector<int> images(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const int a = g(x_symbol(grid.row(k)));
    const int b = g(y_symbol(grid.col(k)));
    if (on_x_sheet(a) == on_x_sheet(b))
      throw std::invalid_argument("pair_permutation: " + g.to_string() +
                                  " does not respect the sheets");
    images[k] = static_cast<int>(pair_index(a, b));
  }
  return Permutation(std::move(images));
}

Permutation side_permutation(const Permutation &g) {
  if (g.degree() != sheet_degree)
    throw std::invalid_argument("side_permutation: degree must be 6");
  const bool swaps = !on_x_sheet(g(x_symbol(0)));
  for (int s = 0; s < static_cast<int>(sheet_degree); ++s)
    if (on_x_sheet(g(s)) != (on_x_sheet(s) != swaps))
      throw std::invalid_argument("side_permutation: " + g.to_string() +
                                  " does not respect the sheets");
  return swaps ? Permutation(std::vector<int>{1, 0}) : Permutation(2);
}

MonodromyDatum side_action(const MonodromyDatum &d) {
  require_valid(d);
  MonodromyDatum out{2, d.branch_labels, {}};
  for (const auto &s : d.monodromy)
    out.monodromy.push_back(side_permutation(s));
  return out;
}

MonodromyDatum pair_curve_action(const MonodromyDatum &d) {
  require_valid(d);
  MonodromyDatum out{sheets_per_side * sheets_per_side, d.branch_labels, {}};
  for (const auto &s : d.monodromy) {
    if (!is_admissible(s))
      throw InvalidDatum("pair_curve_action: entry " + s.to_string() + " is not admissible");
    out.monodromy.push_back(pair_permutation(s));
  }
  return out;
}

const std::vector<std::pair<int, int>> &ordered_pair_points() {
  static const std::vector<std::pair<int, int>> points = [] {
    std::vector<std::pair<int, int>> p;
    for (int a = 0; a < static_cast<int>(sheet_degree); ++a)
      for (int b = 0; b < static_cast<int>(sheet_degree); ++b)
        if (on_x_sheet(a) != on_x_sheet(b))
          p.emplace_back(a, b);
    return p;
  }();
  return points;
}

const std::vector<std::array<int, 3>> &y_fiber_points() {
  static const std::vector<std::array<int, 3>> points = [] {
    std::vector<std::array<int, 3>> p;
    const int n = static_cast<int>(sheet_degree);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (b != c && on_x_sheet(b) != on_x_sheet(a) && on_x_sheet(c) != on_x_sheet(a))
            p.push_back({a, b, c});
    return p;
  }();
  return points;
}

Permutation ordered_pair_permutation(const Permutation &g) {
  static const auto index = index_points(ordered_pair_points());
  return permute_points<std::pair<int, int>>(
      ordered_pair_points(), index,
      [&](const std::pair<int, int> &p) { return std::pair<int, int>{g(p.first), g(p.second)}; });
}

Permutation y_fiber_permutation(const Permutation &g) {
  static const auto index = index_points(y_fiber_points());
  return permute_points<std::array<int, 3>>(
      y_fiber_points(), index,
      [&](const std::array<int, 3> &p) { return std::array<int, 3>{g(p[0]), g(p[1]), g(p[2])}; });
}

void require_type_three(const MonodromyDatum &d) {
  require_valid(d);
  if (d.degree != sheet_degree || !(monodromy_group(d) == type_three_group()))
    throw InvalidDatum("monodromy group is not the type III group");
}

MonodromyDatum ordered_pair_action(const MonodromyDatum &d) {
  require_type_three(d);
  MonodromyDatum out{ordered_pair_points().size(), d.branch_labels, {}};
  for (const auto &s : d.monodromy)
    out.monodromy.push_back(ordered_pair_permutation(s));
  return out;
}

MonodromyDatum y_closure_action(const MonodromyDatum &d) {
  require_type_three(d);
  MonodromyDatum out{y_fiber_points().size(), d.branch_labels, {}};
  for (const auto &s : d.monodromy)
    out.monodromy.push_back(y_fiber_permutation(s));
  return out;
}

GroupAction side_group_action() {
  return GroupAction::induced(type_three_group_ptr(), 2, side_permutation);
}

GroupAction pair_group_action() {
  return GroupAction::induced(type_three_group_ptr(), sheets_per_side * sheets_per_side,
                              pair_permutation);
}

GroupAction ordered_pair_group_action() {
  return GroupAction::induced(type_three_group_ptr(), ordered_pair_points().size(),
                              ordered_pair_permutation);
}

GroupAction y_fiber_group_action() {
  return GroupAction::induced(type_three_group_ptr(), y_fiber_points().size(),
                              y_fiber_permutation);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::pair<Permutation, Permutation>>
build_isomorphism(const Permutation &image12, const Permutation &image13) {
  const Permutation s12 = parse_cycles("(1 2)", 3);
  const Permutation s13 = parse_cycles("(1 3)", 3);
  std::map<Permutation, Permutation> map{{Permutation(3), Permutation(image12.degree())}};
  std::vector<Permutation> frontier{Permutation(3)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto &x : frontier)
      for (const auto &[s, t] : {std::pair{s12, image12}, std::pair{s13, image13}}) {
        Permutation y = x * s;
        if (!map.count(y)) {
          map.emplace(y, map.at(x) * t);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  std::set<Permutation> targets;
  for (const auto &[s, t] : map)
    targets.insert(t);
  if (map.size() != 6 || targets.size() != 6)
    throw std::logic_error("factor isomorphism is not bijective");
  for (const auto &[a, ta] : map)
    for (const auto &[b, tb] : map)
      if (map.at(a * b) != ta * tb)
        throw std::logic_error("factor isomorphism is not a homomorphism");
  return {map.begin(), map.end()};
}

} // namespace

FactorDecomposition::FactorDecomposition(const FiniteGroupTable &group)
    : f1_(FiniteGroupTable::trivial(sheet_degree)), f2_(FiniteGroupTable::trivial(sheet_degree)) {
  if (!(group == type_three_group()))
    throw std::invalid_argument("factor decomposition needs the type III group");
  const Permutation t1 = cyc("(1 2)(3 4)(5 6)");
  const Permutation t2 = cyc("(1 2)(3 6)(4 5)");
  for (const auto &cls : conjugacy_classes(group)) {
    std::vector<Permutation> members;
    for (auto i : cls)
      members.push_back(group.element(i));
    if (std::find(members.begin(), members.end(), t1) != members.end())
      c1_ = members;
    if (std::find(members.begin(), members.end(), t2) != members.end())
      c2_ = members;
  }
  for (const auto *c : {&c1_, &c2_})
    if (c->size() != 3 || !std::all_of(c->begin(), c->end(), is_admissible))
      throw std::logic_error("admissible involution classes have unexpected shape");

  f1_ = FiniteGroupTable::generate(c1_);
  f2_ = FiniteGroupTable::generate(c2_);
  if (f1_.order() * f2_.order() != group.order())
    throw std::logic_error("<C1> x <C2> does not fill the group");
  for (const auto &a : f1_.elements())
    for (const auto &b : f2_.elements())
      if (a * b != b * a || (a == b && !a.is_identity()))
        throw std::logic_error("<C1> and <C2> are not commuting complementary factors");

  iso1_ = build_isomorphism(cyc("(1 2)(3 4)(5 6)"), cyc("(1 4)(2 5)(3 6)"));
  iso2_ = build_isomorphism(cyc("(1 2)(3 6)(4 5)"), cyc("(1 4)(2 3)(5 6)"));
  for (const auto &[s, t] : iso1_)
    if (!f1_.contains(t))
      throw std::logic_error("first isomorphism leaves <C1>");
  for (const auto &[s, t] : iso2_)
    if (!f2_.contains(t))
      throw std::logic_error("second isomorphism leaves <C2>");
}

std::pair<Permutation, Permutation> FactorDecomposition::coordinates(const Permutation &g) const {
  for (const auto &a : f1_.elements()) {
    Permutation b = a.inverse() * g;
    if (f2_.contains(b))
      return {a, b};
  }
  throw std::invalid_argument("coordinates: " + g.to_string() + " is not in the group");
}

Permutation FactorDecomposition::to_s3(int factor, const Permutation &x) const {
  const auto &iso = factor == 1 ? iso1_ : iso2_;
  for (const auto &[s, t] : iso)
    if (t == x)
      return s;
  throw std::invalid_argument("to_s3: " + x.to_string() + " is not in factor " +
                              std::to_string(factor));
}

Permutation FactorDecomposition::from_s3(int factor, const Permutation &s) const {
  const auto &iso = factor == 1 ? iso1_ : iso2_;
  for (const auto &[a, t] : iso)
    if (a == s)
      return t;
  throw std::invalid_argument("from_s3: not an element of S3");
}

Permutation FactorDecomposition::tau(const Permutation &g) const {
  auto [a, b] = coordinates(g);
  return from_s3(1, to_s3(2, b)) * from_s3(2, to_s3(1, a));
}

// ---------------------------------------------------------------------------

YDBijectionReport y_d_bijection_check(const MonodromyDatum &d) {
  require_type_three(d);
  const auto D = build_D(sheets_per_side);
  const std::size_t nine = sheets_per_side * sheets_per_side;

  YDBijectionReport r;
  const auto &points = y_fiber_points();
  r.y_fiber_size = points.size();
  for (std::size_t p = 0; p < nine; ++p)
    for (std::size_t q = 0; q < nine; ++q)
      if (D.entries()(p, q) == 1)
        ++r.incidence_size;

  auto to_incidence = [](const std::array<int, 3> &t) {
    return std::pair{pair_index(t[0], t[1]), pair_index(t[0], t[2])};
  };

  std::set<std::pair<std::size_t, std::size_t>> image;
  bool lands_in_D = true;
  for (const auto &t : points) {
    auto pq = to_incidence(t);
    lands_in_D = lands_in_D && D.entries()(pq.first, pq.second) == 1;
    image.insert(pq);
  }
  r.bijective = lands_in_D && image.size() == points.size() && image.size() == r.incidence_size;

  r.equivariant = true;
  for (const auto &s : d.monodromy) {
    const Permutation on_y = y_fiber_permutation(s);
    const Permutation on_x = pair_permutation(s);
    for (std::size_t k = 0; k < points.size(); ++k) {
      auto moved = to_incidence(points[on_y(static_cast<int>(k))]);
      auto [p, q] = to_incidence(points[k]);
      if (moved != std::pair<std::size_t, std::size_t>{static_cast<std::size_t>(on_x(p)),
                                                       static_cast<std::size_t>(on_x(q))})
        r.equivariant = false;
    }
  }
  return r;
}

MonodromyDatum genus_three_sample() {
  MonodromyDatum d;
  d.degree = sheet_degree;
  for (const char *t : {"(1 2)(3 4)(5 6)", "(1 4)(2 5)(3 6)", "(1 2)(3 6)(4 5)", "(1 4)(2 3)(5 6)"})
    for (int copy = 0; copy < 2; ++copy)
      d.monodromy.push_back(cyc(t));
  for (std::size_t i = 0; i < d.monodromy.size(); ++i)
    d.branch_labels.push_back("a" + std::to_string(i + 1));
  return d;
}

} // namespace prym
