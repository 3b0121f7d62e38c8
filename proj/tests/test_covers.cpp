#include <doctest.h>

#include <set>

#include "prym/correspondence.hpp"
#include "prym/covers.hpp"
#include "prym/monodromy.hpp"

using namespace prym;

namespace {

Permutation cyc(const char *text, std::size_t degree = 6) { return parse_cycles(text, degree); }

MonodromyDatum datum(std::size_t degree, std::vector<const char *> cycles) {
  MonodromyDatum d{degree, {}, {}};
  for (const char *c : cycles) {
    d.branch_labels.push_back("b" + std::to_string(d.monodromy.size() + 1));
    d.monodromy.push_back(cyc(c, degree));
  }
  return d;
}

MonodromyDatum type_one_datum() {
  return datum(6, {"(1 2)(3 4)(5 6)", "(1 2)(3 4)(5 6)", "(1 4)(2 5)(3 6)", "(1 4)(2 5)(3 6)"});
}

} // namespace

TEST_CASE("validation") {
  auto d = genus_three_sample();
  auto r = validate(d);
  CHECK(r.valid());
  CHECK(r.group_order == 36);
  CHECK(r.transitive);

  auto broken = d;
  broken.monodromy.pop_back();
  broken.branch_labels.pop_back();
  r = validate(broken);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].find("product") != std::string::npos);

  auto with_identity = datum(2, {"(1 2)", "()", "(1 2)"});
  CHECK_FALSE(validate(with_identity).valid());

  auto duplicate = d;
  duplicate.branch_labels[1] = duplicate.branch_labels[0];
  CHECK_FALSE(validate(duplicate).valid());
  CHECK_THROWS_AS(require_valid(duplicate), InvalidDatum);

  auto several = datum(3, {"(1 2)", "()"});
  several.branch_labels.push_back("extra");
  CHECK(validate(several).violations.size() == 3);
}

TEST_CASE("Riemann-Hurwitz genus") {
  auto hyper = datum(2, {"(1 2)", "(1 2)", "(1 2)", "(1 2)", "(1 2)", "(1 2)", "(1 2)", "(1 2)"});
  CHECK(riemann_hurwitz_genus(hyper) == 3);
  auto d = genus_three_sample();
  CHECK(riemann_hurwitz_genus(d) == 7);
  auto x = pair_curve_action(d);
  for (const auto &s : x.monodromy)
    CHECK(s.cycle_type() == std::vector<std::size_t>{2, 2, 2, 1, 1, 1});
  CHECK(riemann_hurwitz_genus(x) == 4);
  CHECK(riemann_hurwitz_genus(ordered_pair_action(d)) == 19);
  CHECK(riemann_hurwitz_genus(y_closure_action(d)) == 37);
  CHECK(riemann_hurwitz_genus(side_action(d)) == 3);

  auto disconnected = datum(4, {"(1 2)", "(1 2)", "(3 4)", "(3 4)"});
  CHECK_THROWS_AS(riemann_hurwitz_genus(disconnected), DisconnectedCover);
  auto parts = component_genera(disconnected);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].genus == 0);
  CHECK(parts[1].genus == 0);
  CHECK(component_genera(pair_curve_action(type_one_datum())).size() == 3);
}

TEST_CASE("Riemann-Hurwitz parity on valid transitive data") {
  for (const auto &d : {genus_three_sample(), pair_curve_action(genus_three_sample()),
                        ordered_pair_action(genus_three_sample())}) {
    long total = 0;
    for (const auto &s : d.monodromy)
      total += static_cast<long>(d.degree - s.cycle_count());
    CHECK(total % 2 == 0);
  }
}

TEST_CASE("admissible involutions") {
  auto adm = admissible_involutions();
  CHECK(adm.size() == 6);
  std::set<Permutation> set(adm.begin(), adm.end());
  CHECK(set.count(cyc("(1 2)(3 4)(5 6)")));
  CHECK_FALSE(set.count(cyc("(1 3)(2 4)(5 6)")));
  CHECK_FALSE(is_admissible(cyc("(1 3)(2 4)(5 6)")));
  CHECK_FALSE(is_admissible(cyc("(1 2)")));
}

TEST_CASE("type classification") {
  auto types = classify_generated_types();
  REQUIRE(types.size() == 3);
  CHECK(types[0].order == 6);
  CHECK(types[1].order == 12);
  CHECK(types[2].order == 36);
  std::size_t subsets = 0;
  for (const auto &t : types)
    subsets += t.subset_count;
  CHECK(subsets <= 63);

  auto type_one = FiniteGroupTable::generate({cyc("(1 2)(3 4)(5 6)"), cyc("(1 4)(2 5)(3 6)")});
  CHECK(monodromy_type(type_one) == std::optional<std::string>("I"));
  auto all = FiniteGroupTable::generate(admissible_involutions());
  CHECK(monodromy_type(all) == std::optional<std::string>("III"));
  CHECK_FALSE(monodromy_type(FiniteGroupTable::generate({cyc("(1 2)")})));
}

TEST_CASE("pair actions") {
  auto d = genus_three_sample();
  auto x = pair_curve_action(d);
  CHECK(x.degree == 9);
  CHECK(validate(x).valid());
  CHECK(validate(x).transitive);
  auto image = monodromy_group(x);
  auto stab = point_stabilizer(image, 0);
  CHECK(stab.order() == 4);
  CHECK(stab.exponent() == 2);

  CHECK_FALSE(validate(pair_curve_action(type_one_datum())).transitive);
  CHECK_THROWS_AS(pair_curve_action(datum(6, {"(1 3)", "(1 3)"})), InvalidDatum);
  CHECK_THROWS_AS(ordered_pair_action(type_one_datum()), InvalidDatum);
  CHECK(ordered_pair_points().size() == 18);
  CHECK(y_fiber_points().size() == 36);
}

TEST_CASE("quotient identifications as group actions") {
  const GroupPtr g = type_three_group_ptr();
  const auto &s = standard_subgroups();
  CHECK(actions_equivalent(coset_action(g, s.L).action, GroupAction::natural(g)));
  CHECK(actions_equivalent(coset_action(g, s.K).action, side_group_action()));
  CHECK(actions_equivalent(coset_action(g, s.H).action, pair_group_action()));
  CHECK(actions_equivalent(coset_action(g, s.M).action, ordered_pair_group_action()));
  CHECK(actions_equivalent(coset_action(g, FiniteGroupTable::trivial(6)).action,
                           y_fiber_group_action()));
  auto y = y_fiber_group_action();
  for (int p = 0; p < 36; ++p)
    CHECK(y.point_stabilizer(p).order() == 1);
}

TEST_CASE("galois closure") {
  auto d = genus_three_sample();
  auto closure = galois_closure(d);
  CHECK(closure.degree == 36);
  CHECK(riemann_hurwitz_genus(closure) == 37);
  CHECK(data_equivalent(closure, y_closure_action(d)));

  auto hyper = datum(2, {"(1 2)", "(1 2)", "(1 2)", "(1 2)"});
  CHECK(galois_closure(hyper) == hyper);

  auto one = galois_closure(type_one_datum());
  CHECK(one.degree == 6);
  CHECK(data_equivalent(one, type_one_datum()));
}

TEST_CASE("quotient covers") {
  auto d = genus_three_sample();
  const auto &s = standard_subgroups();
  auto by_l = quotient_cover(d, s.L);
  CHECK(by_l.degree == 6);
  CHECK(data_equivalent(by_l, d));
  CHECK(riemann_hurwitz_genus(by_l) == 7);
  auto by_k = quotient_cover(d, s.K);
  CHECK(by_k.degree == 2);
  CHECK(riemann_hurwitz_genus(by_k) == 3);
  auto by_h1 = quotient_cover(d, s.H1);
  CHECK(by_h1.degree == 3);
  CHECK(by_h1.monodromy.size() == 4);
  for (const auto &p : by_h1.monodromy)
    CHECK(p.cycle_type() == std::vector<std::size_t>{2, 1});
  CHECK(riemann_hurwitz_genus(by_h1) == 0);
  CHECK_THROWS_AS(quotient_cover(d, FiniteGroupTable::generate({cyc("(1 2)")})),
                  std::invalid_argument);

  // Conjugate subgroups give equivalent covers.
  for (const auto &x : {cyc("(1 3 5)"), cyc("(1 4)(2 5)(3 6)"), cyc("(2 4 6)")})
    for (const auto *sub : {&s.H, &s.H1, &s.M})
      CHECK(data_equivalent(quotient_cover(d, *sub),
                            quotient_cover(d, conjugate_subgroup(*sub, x))));
}

TEST_CASE("strip and equivalence helpers") {
  auto d = datum(3, {"(1 2)", "()", "(1 2)"});
  auto stripped = strip_unbranched(d);
  CHECK(stripped.monodromy.size() == 2);
  CHECK(stripped.branch_labels == std::vector<std::string>{"b1", "b3"});
  auto a = datum(3, {"(1 2)", "(1 2)", "(2 3)", "(2 3)"});
  auto b = datum(3, {"(1 3)", "(1 3)", "(2 3)", "(2 3)"});
  auto phi = data_equivalent(a, b);
  REQUIRE(phi);
  auto c = datum(3, {"(1 2)", "(1 3)", "(1 3)", "(1 2)"});
  CHECK_FALSE(data_equivalent(c, a));
  CHECK_FALSE(data_equivalent(datum(3, {"(1 2)", "(1 2)"}), a));
  CHECK_THROWS_AS(data_equivalent(datum(3, {"(1 2)", "(1 2)", "(1 2)", "(1 2)"}), a),
                  DisconnectedCover);
}

TEST_CASE("standard subgroups") {
  const auto &s = standard_subgroups();
  CHECK(s.H.order() == 4);
  CHECK(s.H1.order() == 12);
  CHECK(s.H2.order() == 12);
  CHECK(s.K.order() == 18);
  CHECK(s.L.order() == 6);
  CHECK(s.M.order() == 2);
  std::vector<Permutation> both = s.H1.elements();
  both.insert(both.end(), s.H2.elements().begin(), s.H2.elements().end());
  CHECK(FiniteGroupTable::generate(both) == type_three_group());
  std::vector<Permutation> common;
  for (const auto &g : s.H1.elements())
    if (s.H2.contains(g))
      common.push_back(g);
  CHECK(common == s.H.elements());
}

TEST_CASE("factor decomposition") {
  FactorDecomposition f(type_three_group());
  std::set<Permutation> c1(f.class_one().begin(), f.class_one().end());
  CHECK(c1 == std::set<Permutation>{cyc("(1 2)(3 4)(5 6)"), cyc("(1 4)(2 5)(3 6)"),
                                    cyc("(1 6)(2 3)(4 5)")});
  auto [a, b] = f.coordinates(Permutation(6));
  CHECK(a.is_identity());
  CHECK(b.is_identity());
  for (const auto &g : type_three_group().elements()) {
    CHECK(f.tau(f.tau(g)) == g);
    auto [x, y] = f.coordinates(g);
    CHECK(x * y == g);
    for (const auto &h : type_three_group().elements())
      CHECK(f.tau(g * h) == f.tau(g) * f.tau(h));
  }
  CHECK(f.from_s3(1, parse_cycles("(1 2)", 3)) == cyc("(1 2)(3 4)(5 6)"));
  CHECK(f.from_s3(2, parse_cycles("(1 3)", 3)) == cyc("(1 4)(2 3)(5 6)"));
  CHECK_THROWS_AS(FactorDecomposition(FiniteGroupTable::trivial(6)), std::invalid_argument);

  // tau swaps the classes of H1 and H2 and fixes those of H and K.
  const auto &g = type_three_group();
  auto image = [&](const FiniteGroupTable &sub) {
    std::vector<Permutation> moved;
    for (const auto &x : sub.elements())
      moved.push_back(f.tau(x));
    return FiniteGroupTable::from_elements(6, moved);
  };
  const auto &s = standard_subgroups();
  CHECK(subgroups_conjugate(g, image(s.H1), s.H2));
  CHECK(subgroups_conjugate(g, image(s.H), s.H));
  CHECK(subgroups_conjugate(g, image(s.K), s.K));
}

TEST_CASE("Y-D bijection") {
  auto r = y_d_bijection_check(genus_three_sample());
  CHECK(r.holds());
  CHECK(r.y_fiber_size == 36);
  CHECK(r.incidence_size == 36);
}

TEST_CASE("fiber grid") {
  FiberGrid grid(3);
  CHECK(grid.size() == 9);
  CHECK(grid.label(grid.index(1, 2)) == "P23");
  CHECK(grid.row(5) == 1);
  CHECK(grid.col(5) == 2);
  CHECK_THROWS_AS(grid.index(3, 0), std::out_of_range);
  CHECK(FiberGrid(12).label(13) == "P2,2");
}
