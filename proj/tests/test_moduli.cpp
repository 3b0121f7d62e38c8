#include <doctest.h>

#include <set>

#include "prym/covers.hpp"
#include "prym/moduli.hpp"

using namespace prym;

namespace {

Permutation cyc(const char *text, std::size_t degree = 6) { return parse_cycles(text, degree); }

MonodromyDatum trigonal(std::vector<const char *> cycles, const std::string &prefix) {
  MonodromyDatum d{3, {}, {}};
  for (const char *c : cycles) {
    d.branch_labels.push_back(prefix + std::to_string(d.monodromy.size() + 1));
    d.monodromy.push_back(cyc(c, 3));
  }
  return d;
}

} // namespace

TEST_CASE("covering type") {
  auto t = covering_type(genus_three_sample());
  CHECK(t.alpha == 4);
  CHECK(t.beta == 4);
  CHECK(t.genus == 3);
  CHECK(t.factor_of_entry == std::vector<int>{1, 1, 1, 1, 2, 2, 2, 2});

  MonodromyDatum only_c1{6, {"a", "b", "c", "d"}, {}};
  for (const char *s : {"(1 2)(3 4)(5 6)", "(1 2)(3 4)(5 6)", "(1 4)(2 5)(3 6)", "(1 4)(2 5)(3 6)"})
    only_c1.monodromy.push_back(cyc(s));
  CHECK_THROWS_AS(covering_type(only_c1), InvalidDatum);
}

TEST_CASE("split and merge") {
  auto d = genus_three_sample();
  auto pair = split(d);
  CHECK(pair.first.monodromy.size() == 4);
  CHECK(pair.second.monodromy.size() == 4);
  CHECK(riemann_hurwitz_genus(pair.first) == 0);
  CHECK(riemann_hurwitz_genus(pair.second) == 0);
  CHECK(merge(pair) == d);
  CHECK(split(merge(pair)) == pair);

  // Merging two genus-0 factors gives a (4, 4) datum over a genus-3 base.
  TrigonalPair fresh{trigonal({"(1 2)", "(1 2)", "(2 3)", "(2 3)"}, "p"),
                     trigonal({"(1 3)", "(1 2)", "(1 2)", "(1 3)"}, "q")};
  auto merged = merge(fresh);
  CHECK(covering_type(merged).genus == 3);
  CHECK(riemann_hurwitz_genus(side_action(merged)) == 3);

  // A custom interleaving keeps each factor's order.
  auto mixed = merge(fresh, std::vector<std::string>{"p1", "q1", "p2", "q2", "p3", "q3", "p4", "q4"});
  CHECK(split(mixed) == fresh);
  CHECK(merge(split(mixed), mixed.branch_labels) == mixed);
  CHECK_THROWS_AS(merge(fresh, std::vector<std::string>{"p2", "p1", "p3", "p4", "q1", "q2", "q3", "q4"}),
                  InvalidDatum);
  CHECK_THROWS_AS(merge(fresh, std::vector<std::string>{"p1", "p2", "p3", "p4", "q1", "q2", "q3"}),
                  InvalidDatum);

  TrigonalPair flat{trigonal({"(1 2)", "(1 2)", "(1 2)", "(1 2)"}, "p"), fresh.second};
  CHECK_THROWS_AS(merge(flat), InvalidDatum);
  TrigonalPair clash{fresh.first, trigonal({"(1 3)", "(1 2)", "(1 2)", "(1 3)"}, "p")};
  CHECK_THROWS_AS(merge(clash), InvalidDatum);
  TrigonalPair not_simple{trigonal({"(1 2 3)", "(1 3 2)", "(1 2)", "(1 2)"}, "p"), fresh.second};
  CHECK_THROWS_AS(merge(not_simple), InvalidDatum);
}

TEST_CASE("sampling is deterministic and well-typed") {
  CHECK(sample(4, 4, 7) == sample(4, 4, 7));
  std::set<std::vector<Permutation>> seen;
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    seen.insert(sample(6, 6, seed).monodromy);
  CHECK(seen.size() > 1);
  auto d = sample(4, 4, 123);
  CHECK(covering_type(d).alpha == 4);
  CHECK(riemann_hurwitz_genus(side_action(d)) == 3);
  CHECK(d.branch_labels.front() == "a1");
  CHECK(d.branch_labels.back() == "a8");
  CHECK_THROWS_AS(sample(5, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample(2, 4, 1), std::invalid_argument);
  CHECK_NOTHROW(sample(4, 4, UINT64_MAX));
}

TEST_CASE("genus table") {
  auto t = genus_table(genus_three_sample());
  CHECK(t.consistent());
  CHECK(t.genus_of("C") == 3);
  CHECK(t.genus_of("C~") == 7);
  CHECK(t.genus_of("X") == 4);
  CHECK(t.genus_of("X~") == 19);
  CHECK(t.genus_of("Y") == 37);
  CHECK(t.dim_prym == 0);
  CHECK_THROWS_AS(t.genus_of("Z"), std::out_of_range);

  auto six = genus_table(sample(6, 6, 1));
  CHECK(six.genus_of("X1") == 1);
  CHECK(six.genus_of("X2") == 1);
  CHECK(six.dim_prym == 2);
}

TEST_CASE("dimension formulas") {
  CHECK(dim_from_weil_trace(3) == 0);
  CHECK(dim_from_weil_trace(6) == 3);
  for (long g = 3; g < 40; ++g) {
    CHECK(dim_from_weil_trace(g) == g - 3);
    CHECK((2 * g - 2) + (g - 3) == 3 * g - 5);
  }
  CHECK_THROWS_AS(dim_from_weil_trace(2), std::invalid_argument);
  CHECK(moduli_dimension(4, 4) == 5);
  CHECK(moduli_dimension(6, 6) == 9);
  for (long a = 4; a <= 12; a += 2)
    for (long b = 4; b <= 12; b += 2)
      CHECK(moduli_dimension(a, b) == 2 * ((a + b - 2) / 2) - 1);
}

TEST_CASE("subgroup genus report") {
  auto d = sample(6, 6, 3);
  auto report = subgroup_genus_report(d);
  CHECK(report.size() == 22);
  std::size_t total = 0;
  for (const auto &r : report) {
    total += r.class_size;
    if (r.name == "H")
      CHECK(r.quotient_genus == 10);
    if (r.name == "L")
      CHECK(r.quotient_genus == 13);
    if (r.order == 36)
      CHECK(r.quotient_genus == 0);
    if (r.order == 1)
      CHECK(r.quotient_genus == 73);
  }
  CHECK(total == 60);
}

TEST_CASE("properties over sampled data") {
  for (long alpha : {4, 6, 8})
    for (long beta : {4, 6, 8})
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        CAPTURE(alpha);
        CAPTURE(beta);
        CAPTURE(seed);
        auto d = sample(alpha, beta, seed);
        auto t = covering_type(d);
        CHECK(t.alpha == alpha);
        CHECK(t.beta == beta);
        CHECK(genus_table(d).consistent());
        auto pair = split(d);
        CHECK(merge(pair) == d);
        CHECK(split(merge(pair)) == pair);
        for (const auto &l : pair.first.branch_labels)
          CHECK(std::find(pair.second.branch_labels.begin(), pair.second.branch_labels.end(), l) ==
                pair.second.branch_labels.end());
        CHECK_NOTHROW(require_trigonal(pair.first));
        CHECK_NOTHROW(require_trigonal(pair.second));
        CHECK(moduli_dimension(alpha, beta) == 2 * t.genus - 1);
      }
}
