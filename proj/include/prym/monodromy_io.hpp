#ifndef PRYM_MONODROMY_IO_HPP
#define PRYM_MONODROMY_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "prym/monodromy.hpp"

namespace prym {

/// Malformed monodromy file: bad JSON, missing or unknown keys, wrong
/// types, an unsupported convention or unparsable cycles.
class FormatError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The canonical single-line form, keys in the order degree, convention,
/// branch_points, monodromy, with a trailing newline:
///   {"degree": 6, "convention": "left-to-right", "branch_points": ["a1"], "monodromy": ["(1 2)"]}
std::string to_monodromy_json(const MonodromyDatum &d);

/// Parses any JSON layout of the same object. Does not validate the datum
/// beyond its shape.
MonodromyDatum parse_monodromy_json(std::string_view text);

/// File wrappers; I/O failures throw FormatError too.
MonodromyDatum read_monodromy_file(const std::string &path);
void write_monodromy_file(const std::string &path, const MonodromyDatum &d);

} // namespace prym

#endif // PRYM_MONODROMY_IO_HPP
