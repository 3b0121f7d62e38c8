#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "prym/covers.hpp"
#include "prym/moduli.hpp"
#include "prym/monodromy_io.hpp"
#include "prym/verification.hpp"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_check_failure = 1;
constexpr int exit_input_error = 2;

std::string read_bytes(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw prym::FormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Parses and validates; every failure here is an input error.
prym::MonodromyDatum load_valid(const std::string &path) {
  auto d = prym::read_monodromy_file(path);
  prym::require_valid(d);
  return d;
}

int cmd_verify(const std::string &input, const std::string &report_path) {
  const std::string bytes = read_bytes(input);
  auto d = prym::parse_monodromy_json(bytes);
  prym::require_valid(d);
  auto report = prym::verify(d, prym::input_digest(bytes));
  const std::string text = report.to_text();
  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(report_path, std::ios::binary);
    if (!out)
      throw prym::FormatError("cannot write " + report_path);
    out << text;
    std::cout << "overall=" << (report.overall() ? "pass" : "fail") << "\n";
  }
  return report.overall() ? exit_pass : exit_check_failure;
}

int cmd_paper_suite() {
  bool all = true;
  for (const auto &r : prym::run_paper_suite()) {
    std::cout << "criterion " << r.number << ": " << (r.pass ? "PASS" : "FAIL") << " " << r.title
              << " (" << r.detail << ")\n";
    all = all && r.pass;
  }
  return all ? exit_pass : exit_check_failure;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact verification tools for triple covers of hyperelliptic curves"};
  app.require_subcommand(1);

  auto *classify = app.add_subcommand("classify-types", "List admissible involutions and types");

  std::string input, report, out, out1, out2, in1, in2;
  long alpha = 0, beta = 0;
  std::uint64_t seed = 0;

  auto *verify = app.add_subcommand("verify", "Run every check on a monodromy file");
  verify->add_option("--input", input, "Monodromy file")->required();
  verify->add_option("--report", report, "Write the report here instead of stdout");

  auto *sample = app.add_subcommand("sample", "Sample a datum of type (alpha, beta)");
  sample->add_option("--alpha", alpha)->required();
  sample->add_option("--beta", beta)->required();
  sample->add_option("--seed", seed, "Decimal 64-bit unsigned seed")->required();
  sample->add_option("--out", out)->required();

  auto *split = app.add_subcommand("split", "Split into two trigonal factors");
  split->add_option("--input", input)->required();
  split->add_option("--out1", out1)->required();
  split->add_option("--out2", out2)->required();

  auto *merge = app.add_subcommand("merge", "Merge two trigonal factors");
  merge->add_option("--in1", in1)->required();
  merge->add_option("--in2", in2)->required();
  merge->add_option("--out", out)->required();

  auto *genera = app.add_subcommand("genera", "Genus table of a datum");
  genera->add_option("--input", input)->required();

  auto *census = app.add_subcommand("census", "Subgroup census and the factor swap");
  auto *suite = app.add_subcommand("paper-suite", "Run all acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_input_error;
  }

  try {
    if (*classify) {
      std::cout << prym::classification_text();
      return exit_pass;
    }
    if (*verify)
      return cmd_verify(input, report);
    if (*sample) {
      prym::write_monodromy_file(out, prym::sample(alpha, beta, seed));
      std::cout << "seed=" << seed << "\n";
      return exit_pass;
    }
    if (*split) {
      auto pair = prym::split(load_valid(input));
      prym::write_monodromy_file(out1, pair.first);
      prym::write_monodromy_file(out2, pair.second);
      return exit_pass;
    }
    if (*merge) {
      prym::TrigonalPair pair{load_valid(in1), load_valid(in2)};
      prym::write_monodromy_file(out, prym::merge(pair));
      return exit_pass;
    }
    if (*genera) {
      auto d = load_valid(input);
      std::cout << prym::genus_text(d);
      return prym::genus_table(d).consistent() ? exit_pass : exit_check_failure;
    }
    if (*census) {
      auto c = prym::subgroup_census();
      std::cout << c.to_text();
      return c.tau_permutes_classes ? exit_pass : exit_check_failure;
    }
    if (*suite)
      return cmd_paper_suite();
  } catch (const std::invalid_argument &e) {
    // FormatError, InvalidDatum and bad parameters.
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_check_failure;
  }
  return exit_input_error;
}
