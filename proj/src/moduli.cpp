#include "prym/moduli.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "prym/covers.hpp"

namespace prym {

namespace {

const FactorDecomposition &factors() {
  static const FactorDecomposition f(type_three_group());
  return f;
}

bool in_class(const std::vector<Permutation> &cls, const Permutation &p) {
  return std::find(cls.begin(), cls.end(), p) != cls.end();
}

/// Uniform in [0, n) without relying on a library distribution, whose
/// output is not fixed across standard library implementations.
std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t n) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  std::uint64_t x;
  do
    x = rng();
  while (x >= limit);
  return x % n;
}

std::vector<Permutation> random_trigonal_tuple(long count, std::mt19937_64 &rng) {
  static const std::vector<Permutation> transpositions{
      parse_cycles("(1 2)", 3), parse_cycles("(1 3)", 3), parse_cycles("(2 3)", 3)};
  for (;;) {
    std::vector<Permutation> tuple;
    for (long i = 0; i + 1 < count; ++i)
      tuple.push_back(transpositions[uniform_below(rng, transpositions.size())]);
    // An odd number of transpositions multiplies to a transposition.
    tuple.push_back(product(tuple, 3).inverse());
    if (is_transitive(FiniteGroupTable::generate(tuple), full_domain(3)))
      return tuple;
  }
}

} // namespace

CoveringType covering_type(const MonodromyDatum &d) {
  require_type_three(d);
  const auto &f = factors();
  CoveringType t;
  Permutation prod1(sheet_degree), prod2(sheet_degree);
  for (const auto &s : d.monodromy) {
    if (in_class(f.class_one(), s)) {
      t.factor_of_entry.push_back(1);
      prod1 *= s;
      ++t.alpha;
    } else if (in_class(f.class_two(), s)) {
      t.factor_of_entry.push_back(2);
      prod2 *= s;
      ++t.beta;
    } else {
      throw InvalidDatum("covering_type: " + s.to_string() + " lies in neither C1 nor C2");
    }
  }
  if (!prod1.is_identity() || !prod2.is_identity())
    throw InvalidDatum("covering_type: the entries of one class do not multiply to one");
  if (t.alpha % 2 != 0 || t.beta % 2 != 0 || t.alpha < 4 || t.beta < 4)
    throw InvalidDatum("covering_type: alpha and beta must be even and at least 4");
  t.genus = (t.alpha + t.beta - 2) / 2;
  return t;
}

void require_trigonal(const MonodromyDatum &d) {
  require_valid(d);
  if (d.degree != 3)
    throw InvalidDatum("trigonal factor must have degree 3");
  for (const auto &s : d.monodromy)
    if (s.cycle_type() != std::vector<std::size_t>{2, 1})
      throw InvalidDatum("trigonal factor entry " + s.to_string() + " is not a transposition");
  if (!is_transitive(monodromy_group(d), full_domain(3)))
    throw InvalidDatum("trigonal factor is not surjective onto S3");
}

TrigonalPair split(const MonodromyDatum &d) {
  const auto t = covering_type(d);
  TrigonalPair pair{{3, {}, {}}, {3, {}, {}}};
  for (std::size_t i = 0; i < d.monodromy.size(); ++i) {
    const int k = t.factor_of_entry[i];
    auto &target = k == 1 ? pair.first : pair.second;
    target.branch_labels.push_back(d.branch_labels[i]);
    target.monodromy.push_back(factors().to_s3(k, d.monodromy[i]));
  }
  return pair;
}

MonodromyDatum merge(const TrigonalPair &pair,
                     const std::optional<std::vector<std::string>> &interleaving) {
  require_trigonal(pair.first);
  require_trigonal(pair.second);

  std::vector<std::string> order;
  if (interleaving) {
    order = *interleaving;
  } else {
    order = pair.first.branch_labels;
    order.insert(order.end(), pair.second.branch_labels.begin(), pair.second.branch_labels.end());
  }

  const std::set<std::string> first(pair.first.branch_labels.begin(),
                                    pair.first.branch_labels.end());
  for (const auto &l : pair.second.branch_labels)
    if (first.count(l))
      throw InvalidDatum("merge: label \"" + l + "\" occurs in both factors");
  if (order.size() != pair.first.monodromy.size() + pair.second.monodromy.size() ||
      std::set<std::string>(order.begin(), order.end()).size() != order.size())
    throw InvalidDatum("merge: interleaving must list every label exactly once");

  // Positional binding: within each factor, entries keep their order.
  std::size_t next1 = 0, next2 = 0;
  MonodromyDatum out{sheet_degree, {}, {}};
  for (const auto &label : order) {
    const MonodromyDatum *src;
    std::size_t *next;
    int factor;
    if (first.count(label)) {
      src = &pair.first, next = &next1, factor = 1;
    } else {
      src = &pair.second, next = &next2, factor = 2;
    }
    if (*next >= src->branch_labels.size() || src->branch_labels[*next] != label)
      throw InvalidDatum("merge: interleaving reorders the labels of a factor or names \"" +
                         label + "\" unknown");
    out.branch_labels.push_back(label);
    out.monodromy.push_back(factors().from_s3(factor, src->monodromy[*next]));
    ++*next;
  }
  require_type_three(out);
  return out;
}

MonodromyDatum sample(long alpha, long beta, std::uint64_t seed) {
  if (alpha < 4 || beta < 4 || alpha % 2 != 0 || beta % 2 != 0)
    throw std::invalid_argument("sample: alpha and beta must be even and at least 4");
  std::mt19937_64 rng(seed);
  TrigonalPair pair{{3, {}, random_trigonal_tuple(alpha, rng)},
                    {3, {}, random_trigonal_tuple(beta, rng)}};
  for (long i = 0; i < alpha + beta; ++i)
    (i < alpha ? pair.first : pair.second).branch_labels.push_back("a" + std::to_string(i + 1));
  return merge(pair);
}

bool GenusTable::consistent() const {
  for (const auto &r : rows)
    if (r.riemann_hurwitz != r.closed_form)
      return false;
  return dim_prym == weil_trace_dim && genus_of("X1") + genus_of("X2") == dim_prym &&
         (2 * type.genus - 2) + dim_prym == genus_of("X");
}

long GenusTable::genus_of(const std::string &curve) const {
  for (const auto &r : rows)
    if (r.curve == curve)
      return r.riemann_hurwitz;
  throw std::out_of_range("genus_of: no curve " + curve);
}

GenusTable genus_table(const MonodromyDatum &d) {
  GenusTable t;
  t.type = covering_type(d);
  const long g = t.type.genus;
  const auto &subs = standard_subgroups();

  auto row = [&](const char *name, const MonodromyDatum &cover, long formula) {
    t.rows.push_back({name, cover.degree, riemann_hurwitz_genus(strip_unbranched(cover)), formula});
  };
  row("C", side_action(d), g);
  row("C~", d, 3 * g - 2);
  row("X", pair_curve_action(d), 3 * g - 5);
  row("X1", quotient_cover(d, subs.H1), t.type.alpha / 2 - 2);
  row("X2", quotient_cover(d, subs.H2), t.type.beta / 2 - 2);
  row("X~", ordered_pair_action(d), 9 * g - 8);
  row("Y", y_closure_action(d), 18 * g - 17);
  t.dim_prym = g - 3;
  t.weil_trace_dim = dim_from_weil_trace(g);
  return t;
}

long dim_from_weil_trace(long g) {
  if (g < 3)
    throw std::invalid_argument("dim_from_weil_trace: genus must be at least 3");
  // D has no fixed points, so the Lefschetz count gives Tr_r(gamma_D) = 8.
  constexpr long trace_gamma_d = 8;
  const long trace_norm = 2 * (3 * g - 5) - trace_gamma_d;
  if (trace_norm % 6 != 0)
    throw std::logic_error("dim_from_weil_trace: trace is not divisible by 6");
  const long dim = trace_norm / 6;
  if (dim != g - 3)
    throw std::logic_error("dim_from_weil_trace: result differs from g - 3");
  return dim;
}

long moduli_dimension(long alpha, long beta) { return alpha + beta - 3; }

std::vector<SubgroupGenus> subgroup_genus_report(const MonodromyDatum &d) {
  const long dim_prym = covering_type(d).genus - 3;
  const auto &G = type_three_group();
  const auto subgroups = all_subgroups(G);
  const auto &s = standard_subgroups();
  const std::pair<const char *, const FiniteGroupTable *> named[] = {
      {"H", &s.H}, {"H1", &s.H1}, {"H2", &s.H2}, {"K", &s.K}, {"L", &s.L}, {"M", &s.M}};

  std::vector<SubgroupGenus> report;
  for (const auto &cls : subgroup_conjugacy_classes(G, subgroups)) {
    const auto &rep = subgroups[cls.front()];
    SubgroupGenus r{rep.order(), cls.size(), "", rep.generators(), 0, false};
    for (const auto &[name, sub] : named)
      if (sub->order() == rep.order() && subgroups_conjugate(G, *sub, rep))
        r.name += r.name.empty() ? name : std::string(",") + name;
    const auto cover = quotient_cover(d, rep);
    r.quotient_genus = cover.degree == 1 ? 0 : riemann_hurwitz_genus(cover);
    r.equals_dim_prym = r.quotient_genus == dim_prym;
    report.push_back(std::move(r));
  }
  return report;
}

} // namespace prym
