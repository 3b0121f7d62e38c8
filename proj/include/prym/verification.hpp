#ifndef PRYM_VERIFICATION_HPP
#define PRYM_VERIFICATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prym/monodromy.hpp"

namespace prym {

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

/// Flat key/value report, one record per line:
///   input_digest=fnv1a64:<16 hex digits>
///   seed=<decimal>|none
///   check=<name> status=pass|fail detail=<JSON string>
///   overall=pass|fail
struct VerificationReport {
  std::string input_digest;
  std::optional<std::uint64_t> seed;
  std::vector<Check> checks;

  /// Throws std::logic_error on a repeated check name.
  void add(std::string name, bool pass, std::string detail = "");
  bool overall() const;
  std::string to_text() const;
};

/// "fnv1a64:" followed by the 64-bit FNV-1a hash of the bytes in hex.
std::string input_digest(std::string_view bytes);

/// The full check suite on one datum. A datum that is not type III gets the
/// shape checks only, which then fail. Never throws for a shape-valid datum.
VerificationReport verify(const MonodromyDatum &d, std::string digest);

/// Listing of the admissible involutions and the three generated types.
std::string classification_text();

/// Subgroup conjugacy classes of the type III group and their orbits under
/// the factor swap tau.
struct CensusReport {
  std::size_t subgroup_count = 0;
  std::size_t class_count = 0;
  std::size_t tau_fixed_classes = 0;
  std::size_t tau_swapped_classes = 0;
  /// Whether tau maps subgroups to subgroups and classes to whole classes.
  bool tau_permutes_classes = false;
  struct ClassRow {
    std::size_t order;
    std::size_t size;
    std::size_t tau_image; // class index
  };
  std::vector<ClassRow> classes;

  std::size_t tau_pairs() const { return tau_swapped_classes / 2; }
  /// Computed figures next to the stated census "8 invariant classes and
  /// 14 pairs", with a verdict per figure.
  std::string to_text() const;
};

CensusReport subgroup_census();

/// Printable genus table with the type, dimensions and a consistency line.
std::string genus_text(const MonodromyDatum &d);

struct CriterionResult {
  int number;
  std::string title;
  bool pass;
  std::string detail;
};

/// Every acceptance criterion on built-in data, numbered 1 to 11.
std::vector<CriterionResult> run_paper_suite();

} // namespace prym

#endif // PRYM_VERIFICATION_HPP
