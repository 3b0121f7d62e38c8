#include "prym/verification.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "prym/correspondence.hpp"
#include "prym/covers.hpp"
#include "prym/moduli.hpp"
#include "prym/reptheory.hpp"

namespace prym {

void VerificationReport::add(std::string name, bool pass, std::string detail) {
  for (const auto &c : checks)
    if (c.name == name)
      throw std::logic_error("duplicate check name " + name);
  checks.push_back({std::move(name), pass, std::move(detail)});
}

bool VerificationReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

std::string VerificationReport::to_text() const {
  std::string out = "input_digest=" + input_digest + "\n";
  out += "seed=" + (seed ? std::to_string(*seed) : std::string("none")) + "\n";
  for (const auto &c : checks)
    out += "check=" + c.name + " status=" + (c.pass ? "pass" : "fail") +
           " detail=" + nlohmann::json(c.detail).dump() + "\n";
  out += std::string("overall=") + (overall() ? "pass" : "fail") + "\n";
  return out;
}

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

namespace {

using Checks = std::vector<Check>;
using Outcome = std::pair<bool, std::string>;

Permutation cyc(const char *text) { return parse_cycles(text, sheet_degree); }

/// Runs one check; an exception counts as a failure carrying its message.
void run(Checks &out, std::string name, const std::function<Outcome()> &body) {
  try {
    auto [pass, detail] = body();
    out.push_back({std::move(name), pass, std::move(detail)});
  } catch (const std::exception &e) {
    out.push_back({std::move(name), false, std::string("exception: ") + e.what()});
  }
}

bool all_pass(const Checks &checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

std::string summary(const Checks &checks) {
  for (const auto &c : checks)
    if (!c.pass)
      return c.name + ": " + c.detail;
  return std::to_string(checks.size()) + " checks passed";
}

std::string decomposition_text(const std::vector<std::pair<std::string, long>> &parts) {
  std::string out;
  for (const auto &[label, m] : parts)
    out += (out.empty() ? "" : " + ") + (m == 1 ? "" : std::to_string(m) + " ") + label;
  return out;
}

bool decomposes_as(const GroupAction &action, const std::vector<std::string> &labels,
                   std::string &text) {
  const auto parts = decompose(permutation_character(action));
  text = decomposition_text(parts);
  if (parts.size() != labels.size())
    return false;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].first != labels[i] || parts[i].second != 1)
      return false;
  return true;
}

// -- datum-independent groups of checks --------------------------------------

Checks admissible_checks() {
  Checks out;
  run(out, "admissible.set", [] {
    std::set<Permutation> expected;
    for (const char *t : {"(1 2)(3 4)(5 6)", "(1 4)(2 5)(3 6)", "(1 6)(2 3)(4 5)",
                          "(1 2)(3 6)(4 5)", "(1 4)(2 3)(5 6)", "(1 6)(2 5)(3 4)"})
      expected.insert(cyc(t));
    const auto adm = admissible_involutions();
    const std::set<Permutation> got(adm.begin(), adm.end());
    return Outcome{got == expected && adm.size() == 6,
                   std::to_string(adm.size()) + " admissible involutions"};
  });
  return out;
}

Checks type_checks() {
  Checks out;
  run(out, "types.orders", [] {
    std::vector<std::size_t> orders;
    std::string detail;
    for (const auto &t : classify_generated_types()) {
      orders.push_back(t.order);
      detail += (detail.empty() ? "" : ", ") + t.label + ":" + std::to_string(t.order);
    }
    return Outcome{orders == std::vector<std::size_t>{6, 12, 36}, detail};
  });
  return out;
}

Checks correspondence_checks(const std::vector<std::size_t> &sizes) {
  Checks out;
  for (auto n : sizes) {
    const std::string suffix = ".n" + std::to_string(n);
    run(out, "correspondence.D_quadratic" + suffix, [n] {
      auto r = verify_quadratic_D(n);
      return Outcome{r.holds(), r.statement};
    });
    run(out, "correspondence.Dprime_quadratic" + suffix, [n] {
      auto r = verify_quadratic_Dprime(n);
      return Outcome{r.holds(), r.statement};
    });
    run(out, "correspondence.kanev" + suffix, [n] {
      auto s = solve_kanev(build_D(n));
      const bool is_32 = s && s->exponent == 3 && s->j_coefficient == 2;
      std::string detail = s ? "exponent " + to_string(s->exponent) + ", J coefficient " +
                                   to_string(s->j_coefficient)
                             : "no solution";
      return Outcome{is_32 == (n == 3) && (n == 3 || !s), detail};
    });
  }
  run(out, "correspondence.D_equivariant", [] {
    return Outcome{equivariance_check(build_D(sheets_per_side), pair_group_action()),
                   "D commutes with the 9-point action"};
  });
  return out;
}

Checks eigen_checks() {
  Checks out;
  const Matrix D = build_D(sheets_per_side).entries();
  run(out, "eigen.D3_spectrum", [&] {
    auto eig = integer_eigen_structure(D);
    const std::vector<Eigenvalue> expected{{4, 1}, {1, 4}, {-2, 4}};
    std::string detail;
    for (const auto &e : eig)
      detail += (detail.empty() ? "" : ", ") + std::to_string(e.value) + ":" +
                std::to_string(e.multiplicity);
    return Outcome{eig == expected, detail};
  });
  run(out, "eigen.pair_character", [] {
    std::string text;
    bool ok = decomposes_as(pair_group_action(), {"1⊗1", "1⊗V", "V⊗1", "V⊗V"}, text);
    return Outcome{ok, text};
  });
  run(out, "eigen.isotypic_components", [&] {
    // Central idempotents e_chi act on the 9-point module; D must act on the
    // image of e_chi by one eigenvalue. The two factor components carry -2
    // (the Prym part, where gamma_D = 1 - e) and V⊗V carries 1.
    const std::map<std::string, long> eigenvalue{
        {"1⊗1", 4}, {"V⊗1", -2}, {"1⊗V", -2}, {"V⊗V", 1}};
    const auto action = pair_group_action();
    const auto &G = *action.group();
    std::map<long, std::size_t> dims;
    for (const auto &irr : g_character_table()) {
      GroupAlgebraElement e(action.group());
      for (std::size_t i = 0; i < G.order(); ++i)
        e[i] = irr.character(0) * irr.character(G.inverse(i)) /
               Rational(static_cast<long>(G.order()));
      const Matrix E = represent(e, action);
      const std::size_t rank = E.rank();
      if (rank == 0)
        continue;
      auto it = eigenvalue.find(irr.label);
      if (it == eigenvalue.end() || !(E * D == Rational(it->second) * E))
        return Outcome{false, irr.label + " component is not an eigenspace of D"};
      dims[it->second] += rank;
    }
    const bool ok = dims == std::map<long, std::size_t>{{4, 1}, {1, 4}, {-2, 4}};
    return Outcome{ok, "isotypic ranks 4:" + std::to_string(dims[4]) + ", 1:" +
                           std::to_string(dims[1]) + ", -2:" + std::to_string(dims[-2])};
  });
  return out;
}

Checks quotient_checks() {
  Checks out;
  const GroupPtr G = type_three_group_ptr();
  const auto &s = standard_subgroups();
  struct Pair {
    const char *name;
    const FiniteGroupTable *sub;
    std::function<GroupAction()> constructed;
  };
  const Pair pairs[] = {
      {"quotient.L_sheets", &s.L, [G] { return GroupAction::natural(G); }},
      {"quotient.K_sides", &s.K, side_group_action},
      {"quotient.H_pairs", &s.H, pair_group_action},
      {"quotient.M_ordered_pairs", &s.M, ordered_pair_group_action},
  };
  for (const auto &p : pairs)
    run(out, p.name, [&] {
      auto cosets = coset_action(G, *p.sub);
      auto built = p.constructed();
      bool ok = cosets.index() == built.domain_size() && built.is_homomorphism() &&
                actions_equivalent(cosets.action, built).has_value();
      return Outcome{ok, std::to_string(cosets.index()) + " cosets"};
    });
  run(out, "quotient.y_regular", [G] {
    auto y = y_fiber_group_action();
    auto regular = coset_action(G, FiniteGroupTable::trivial(sheet_degree)).action;
    bool free = true;
    for (std::size_t x = 0; x < y.domain_size(); ++x)
      free = free && y.point_stabilizer(static_cast<int>(x)).order() == 1;
    bool ok = free && y.domain_size() == G->order() && actions_equivalent(y, regular).has_value();
    return Outcome{ok, std::to_string(y.domain_size()) + " points, stabilizers trivial: " +
                           (free ? "yes" : "no")};
  });
  run(out, "quotient.pair_stabilizer_klein", [&s] {
    auto stab = pair_group_action().point_stabilizer(0);
    bool ok = stab.order() == 4 && stab.exponent() == 2 && stab == s.H;
    return Outcome{ok, "order " + std::to_string(stab.order()) + ", exponent " +
                           std::to_string(stab.exponent())};
  });
  return out;
}

Checks representation_checks() {
  Checks out;
  const GroupPtr G = type_three_group_ptr();
  const auto &s = standard_subgroups();
  run(out, "rep.H1_cosets", [&] {
    std::string text;
    bool ok = decomposes_as(coset_action(G, s.H1).action, {"1⊗1", "V⊗1"}, text);
    return Outcome{ok, text};
  });
  run(out, "rep.H2_cosets", [&] {
    std::string text;
    bool ok = decomposes_as(coset_action(G, s.H2).action, {"1⊗1", "1⊗V"}, text);
    return Outcome{ok, text};
  });
  run(out, "rep.factor_characters", [] {
    auto table = g_character_table();
    auto find = [&](const std::string &l) {
      return std::find_if(table.begin(), table.end(), [&](auto &i) { return i.label == l; })
          ->character;
    };
    auto r1 = first_factor_rep(), r2 = second_factor_rep();
    bool ok = r1.is_homomorphism() && r2.is_homomorphism() && r1.character() == find("V⊗1") &&
              r2.character() == find("1⊗V");
    return Outcome{ok, "coset-difference representations realise V⊗1 and 1⊗V"};
  });
  run(out, "rep.invariant_form", [] {
    auto form = hexagonal_form();
    bool ok = invariant_form_check(first_factor_rep(), form) &&
              invariant_form_check(second_factor_rep(), form);
    return Outcome{ok, "[[2,-1],[-1,2]]"};
  });
  run(out, "rep.fixed_vector", [&] {
    auto basis = fixed_vectors(first_factor_rep(), s.H);
    bool ok = basis.size() == 1 && basis[0] == first_fixed_vector();
    std::string detail = std::to_string(basis.size()) + "-dimensional";
    if (basis.size() == 1)
      detail += ", spanned by (" + to_string(basis[0][0]) + ", " + to_string(basis[0][1]) + ")";
    return Outcome{ok, detail};
  });
  run(out, "rep.projector_coefficient", [] {
    auto p1 = projector(first_fixed_vector(), first_factor_rep(), hexagonal_form());
    Rational c = p1.coefficient(cyc("(2 4)(3 5)"));
    return Outcome{c == Rational(-1, 36), "coefficient of (2 4)(3 5) is " + to_string(c)};
  });
  run(out, "rep.projector_idempotent", [G] {
    auto regular = coset_action(G, FiniteGroupTable::trivial(sheet_degree)).action;
    std::string detail;
    bool ok = true;
    for (auto [w, rep] : {std::pair{first_fixed_vector(), first_factor_rep()},
                          std::pair{second_fixed_vector(), second_factor_rep()}}) {
      auto p = projector(w, rep, hexagonal_form());
      const std::size_t rank = represent(p, regular).rank();
      ok = ok && convolve(p, p) == p && rank == 2;
      detail += (detail.empty() ? "" : ", ") + std::string("regular rank ") + std::to_string(rank);
    }
    return Outcome{ok, detail};
  });
  return out;
}

Checks census_checks() {
  Checks out;
  run(out, "census.tau_permutes_classes", [] {
    auto c = subgroup_census();
    return Outcome{c.tau_permutes_classes && c.tau_fixed_classes + c.tau_swapped_classes ==
                                                 c.class_count,
                   std::to_string(c.subgroup_count) + " subgroups, " +
                       std::to_string(c.class_count) + " classes, " +
                       std::to_string(c.tau_fixed_classes) + " fixed by tau, " +
                       std::to_string(c.tau_pairs()) + " swapped pairs"};
  });
  return out;
}

// -- datum-dependent groups --------------------------------------------------

Checks shape_checks(const MonodromyDatum &d, bool &type_three) {
  Checks out;
  const auto validation = validate(d);
  std::string violations;
  for (const auto &v : validation.violations)
    violations += (violations.empty() ? "" : "; ") + v;
  out.push_back({"datum.valid", validation.valid(),
                 validation.valid() ? "monodromy group of order " +
                                          std::to_string(validation.group_order)
                                    : violations});
  type_three = false;
  if (!validation.valid())
    return out;

  const bool admissible = d.degree == sheet_degree &&
                          std::all_of(d.monodromy.begin(), d.monodromy.end(), is_admissible);
  out.push_back({"datum.admissible", admissible,
                 admissible ? "every entry is an admissible involution"
                            : "some entry is not an admissible involution"});
  if (!admissible)
    return out;

  run(out, "datum.type", [&] {
    auto label = monodromy_type(monodromy_group(d));
    type_three = label && *label == "III" && monodromy_group(d) == type_three_group();
    return Outcome{type_three, "type " + label.value_or("unknown")};
  });
  run(out, "x.irreducible", [&] {
    auto orbits = component_genera(pair_curve_action(d));
    return Outcome{orbits.size() == 1,
                   "pair curve has " + std::to_string(orbits.size()) + " component(s)"};
  });
  if (!all_pass(out))
    type_three = false;
  return out;
}

Checks genus_checks(const MonodromyDatum &d, const std::string &prefix) {
  Checks out;
  GenusTable table;
  run(out, prefix + "genus.table", [&] {
    table = genus_table(d);
    return Outcome{true, "alpha " + std::to_string(table.type.alpha) + ", beta " +
                             std::to_string(table.type.beta) + ", g " +
                             std::to_string(table.type.genus)};
  });
  if (!out.back().pass)
    return out;
  for (const auto &r : table.rows)
    out.push_back({prefix + "genus." + r.curve, r.riemann_hurwitz == r.closed_form,
                   "Riemann-Hurwitz " + std::to_string(r.riemann_hurwitz) + ", formula " +
                       std::to_string(r.closed_form)});
  out.push_back({prefix + "genus.dim_prym", table.consistent(),
                 "dim P " + std::to_string(table.dim_prym) + ", trace " +
                     std::to_string(table.weil_trace_dim) + ", g(X1)+g(X2) " +
                     std::to_string(table.genus_of("X1") + table.genus_of("X2"))});
  return out;
}

Checks bijection_checks(const MonodromyDatum &d, const std::string &prefix) {
  Checks out;
  run(out, prefix + "moduli.merge_split", [&] {
    auto pair = split(d);
    return Outcome{merge(pair, d.branch_labels) == d && split(merge(pair)) == pair,
                   "factors with " + std::to_string(pair.first.monodromy.size()) + " and " +
                       std::to_string(pair.second.monodromy.size()) + " transpositions"};
  });
  run(out, prefix + "moduli.factor_quotients", [&] {
    // X_i = Y / H_i, with H_i carried into the regular representation.
    auto pair = split(d);
    auto closure = galois_closure(d);
    const GroupPtr G = share(monodromy_group(d));
    auto regular = coset_action(G, FiniteGroupTable::trivial(d.degree)).action;
    const auto &s = standard_subgroups();
    bool ok = true;
    for (auto [sub, factor] : {std::pair{&s.H1, &pair.first}, std::pair{&s.H2, &pair.second}}) {
      std::vector<Permutation> gens;
      for (const auto &h : sub->generators())
        gens.push_back(regular.image_of(h));
      auto quotient = quotient_cover(closure, FiniteGroupTable::generate(gens));
      ok = ok && data_equivalent(quotient, *factor).has_value();
    }
    return Outcome{ok, "Y/H1 and Y/H2 match the split factors"};
  });
  run(out, prefix + "moduli.dimension", [&] {
    auto t = covering_type(d);
    long dim = moduli_dimension(t.alpha, t.beta);
    return Outcome{dim == 2 * t.genus - 1, std::to_string(dim)};
  });
  return out;
}

void append(Checks &to, Checks from) {
  to.insert(to.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

} // namespace

VerificationReport verify(const MonodromyDatum &d, std::string digest) {
  VerificationReport report;
  report.input_digest = std::move(digest);
  bool type_three = false;
  Checks all = shape_checks(d, type_three);
  if (type_three) {
    run(all, "type.alpha_beta", [&] {
      auto t = covering_type(d);
      return Outcome{true, "(" + std::to_string(t.alpha) + ", " + std::to_string(t.beta) + ")"};
    });
    append(all, genus_checks(d, ""));
    append(all, correspondence_checks({sheets_per_side}));
    append(all, quotient_checks());
    run(all, "y.d_bijection", [&] {
      auto r = y_d_bijection_check(d);
      return Outcome{r.holds(), std::to_string(r.y_fiber_size) + " Y-fiber points, " +
                                    std::to_string(r.incidence_size) + " incidences"};
    });
    append(all, representation_checks());
    run(all, "theorem.descended_projector", [&] {
      auto r = theorem52_identity_check(d);
      return Outcome{r.holds(), r.identity_holds() ? "36 descend(p1 + p2) = 3(I - D) + J"
                                                   : "identity fails"};
    });
    append(all, bijection_checks(d, ""));
  }
  for (auto &c : all)
    report.add(std::move(c.name), c.pass, std::move(c.detail));
  return report;
}

std::string classification_text() {
  std::string out;
  const auto adm = admissible_involutions();
  out += "admissible involutions: " + std::to_string(adm.size()) + "\n";
  for (const auto &p : adm)
    out += "  " + p.to_string() + "\n";
  const auto types = classify_generated_types();
  out += "transitive types: " + std::to_string(types.size()) + "\n";
  for (const auto &t : types) {
    out += "  type " + t.label + ": order " + std::to_string(t.order) + ", generated by";
    for (const auto &g : t.representative_generators)
      out += " " + g.to_string();
    out += "; " + std::to_string(t.member_count) + " groups from " +
           std::to_string(t.subset_count) + " subsets\n";
  }
  return out;
}

CensusReport subgroup_census() {
  const auto &G = type_three_group();
  const FactorDecomposition factors(G);
  const auto subgroups = all_subgroups(G);
  const auto classes = subgroup_conjugacy_classes(G, subgroups);

  CensusReport r;
  r.subgroup_count = subgroups.size();
  r.class_count = classes.size();

  std::map<std::vector<Permutation>, std::size_t> class_of;
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto i : classes[c])
      class_of[subgroups[i].elements()] = c;

  r.tau_permutes_classes = true;
  std::vector<std::size_t> image(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::set<std::size_t> targets;
    for (auto i : classes[c]) {
      std::vector<Permutation> moved;
      for (const auto &g : subgroups[i].elements())
        moved.push_back(factors.tau(g));
      std::sort(moved.begin(), moved.end());
      auto it = class_of.find(moved);
      if (it == class_of.end()) {
        r.tau_permutes_classes = false;
        continue;
      }
      targets.insert(it->second);
    }
    if (targets.size() != 1)
      r.tau_permutes_classes = false;
    image[c] = targets.empty() ? c : *targets.begin();
  }
  std::set<std::size_t> hit(image.begin(), image.end());
  if (hit.size() != classes.size())
    r.tau_permutes_classes = false;

  for (std::size_t c = 0; c < classes.size(); ++c) {
    r.classes.push_back({subgroups[classes[c].front()].order(), classes[c].size(), image[c]});
    if (image[c] == c)
      ++r.tau_fixed_classes;
    else
      ++r.tau_swapped_classes;
  }
  return r;
}

std::string CensusReport::to_text() const {
  constexpr std::size_t stated_fixed = 8, stated_pairs = 14;
  std::string out;
  out += "subgroups: " + std::to_string(subgroup_count) + "\n";
  out += "conjugacy classes: " + std::to_string(class_count) + "\n";
  out += std::string("tau permutes classes: ") + (tau_permutes_classes ? "yes" : "no") + "\n";
  out += "classes fixed by tau: " + std::to_string(tau_fixed_classes) + "\n";
  out += "classes moved by tau: " + std::to_string(tau_swapped_classes) + " (" +
         std::to_string(tau_pairs()) + " pairs)\n";
  out += "stated invariant classes: " + std::to_string(stated_fixed) + ", computed " +
         std::to_string(tau_fixed_classes) + ": " +
         (tau_fixed_classes == stated_fixed ? "agree" : "disagree") + "\n";
  out += "stated pairs: " + std::to_string(stated_pairs) + ", computed " +
         std::to_string(tau_pairs()) + ": ";
  if (tau_pairs() == stated_pairs)
    out += "agree\n";
  else if (tau_swapped_classes == stated_pairs)
    out += "disagree; " + std::to_string(stated_pairs) + " is the number of moved classes, " +
           "which form " + std::to_string(tau_pairs()) + " pairs\n";
  else
    out += "disagree\n";
  for (std::size_t c = 0; c < classes.size(); ++c)
    out += "class " + std::to_string(c + 1) + ": order " + std::to_string(classes[c].order) +
           ", size " + std::to_string(classes[c].size) + ", tau -> " +
           std::to_string(classes[c].tau_image + 1) + "\n";
  return out;
}

std::string genus_text(const MonodromyDatum &d) {
  const auto t = genus_table(d);
  std::string out;
  out += "type (alpha, beta) = (" + std::to_string(t.type.alpha) + ", " +
         std::to_string(t.type.beta) + ")\n";
  out += "g = " + std::to_string(t.type.genus) + "\n";
  for (const auto &r : t.rows)
    out += "g(" + r.curve + ") = " + std::to_string(r.riemann_hurwitz) + " [formula " +
           std::to_string(r.closed_form) + ", degree " + std::to_string(r.degree) + "]\n";
  out += "dim P = " + std::to_string(t.dim_prym) + "\n";
  out += "dim P from Weil trace = " + std::to_string(t.weil_trace_dim) + "\n";
  out += "g(X1) + g(X2) = " + std::to_string(t.genus_of("X1") + t.genus_of("X2")) + "\n";
  out += "moduli dimension = " + std::to_string(moduli_dimension(t.type.alpha, t.type.beta)) +
         "\n";
  out += std::string("consistent = ") + (t.consistent() ? "yes" : "no") + "\n";
  return out;
}

std::vector<CriterionResult> run_paper_suite() {
  const MonodromyDatum sample3 = genus_three_sample();
  std::vector<MonodromyDatum> sampled;
  for (auto [a, b] : {std::pair{4L, 4L}, {4L, 6L}, {6L, 6L}, {6L, 8L}})
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
      sampled.push_back(sample(a, b, seed));

  std::vector<CriterionResult> results;
  auto record = [&](int number, std::string title, const Checks &checks) {
    results.push_back({number, std::move(title), all_pass(checks), summary(checks)});
  };

  record(1, "admissible involutions", admissible_checks());
  record(2, "type classification", type_checks());
  record(3, "correspondence identities", correspondence_checks({2, 3, 4, 5, 6}));
  record(4, "eigenstructure and characters", eigen_checks());

  {
    Checks checks;
    run(checks, "genus.sample3_values", [&] {
      auto t = genus_table(sample3);
      std::vector<long> got;
      for (const char *c : {"C", "C~", "X", "X~", "Y"})
        got.push_back(t.genus_of(c));
      return Outcome{got == std::vector<long>{3, 7, 4, 19, 37} && t.dim_prym == 0,
                     "g = 3 sample"};
    });
    append(checks, genus_checks(sample3, "sample3."));
    for (std::size_t i = 0; i < sampled.size(); ++i)
      append(checks, genus_checks(sampled[i], "sampled" + std::to_string(i) + "."));
    record(5, "genus suite", checks);
  }

  record(6, "quotient identifications", quotient_checks());

  {
    Checks checks;
    run(checks, "y.d_bijection", [&] {
      auto r = y_d_bijection_check(sample3);
      return Outcome{r.holds() && r.y_fiber_size == 36,
                     std::to_string(r.y_fiber_size) + " = " + std::to_string(r.incidence_size)};
    });
    record(7, "Y-D bijection", checks);
  }

  record(8, "representation suite", representation_checks());

  {
    Checks checks;
    run(checks, "theorem.descended_projector", [&] {
      auto r = theorem52_identity_check(sample3);
      return Outcome{r.holds(), std::string("identity ") + (r.identity_holds() ? "holds" : "fails") +
                                    ", coset constancy " +
                                    (r.left_coset_constant && r.right_coset_constant ? "yes" : "no")};
    });
    record(9, "descended projector identity", checks);
  }

  {
    Checks checks = bijection_checks(sample3, "sample3.");
    for (std::size_t i = 0; i < sampled.size(); ++i)
      append(checks, bijection_checks(sampled[i], "sampled" + std::to_string(i) + "."));
    record(10, "trigonal pair bijection", checks);
  }

  record(11, "subgroup census", census_checks());
  return results;
}

} // namespace prym
