#include "prym/monodromy_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace prym {

namespace {

constexpr const char *convention = "left-to-right";

std::string quoted(const std::string &s) { return nlohmann::json(s).dump(); }

template <class Items, class Render> std::string json_list(const Items &items, Render render) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i)
    out += (i ? ", " : "") + quoted(render(items[i]));
  return out + "]";
}

} // namespace

std::string to_monodromy_json(const MonodromyDatum &d) {
  return "{\"degree\": " + std::to_string(d.degree) + ", \"convention\": " + quoted(convention) +
         ", \"branch_points\": " + json_list(d.branch_labels, [](const auto &s) { return s; }) +
         ", \"monodromy\": " +
         json_list(d.monodromy, [](const Permutation &p) { return p.to_string(); }) + "}\n";
}

MonodromyDatum parse_monodromy_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw FormatError(std::string("monodromy file is not JSON: ") + e.what());
  }
  if (!j.is_object())
    throw FormatError("monodromy file must hold a JSON object");

  static const std::set<std::string> keys{"degree", "convention", "branch_points", "monodromy"};
  for (const auto &[k, v] : j.items())
    if (!keys.count(k))
      throw FormatError("unknown key \"" + k + "\"");
  for (const auto &k : keys)
    if (!j.contains(k))
      throw FormatError("missing key \"" + k + "\"");

  if (!j["degree"].is_number_unsigned() || j["degree"].get<std::size_t>() == 0)
    throw FormatError("degree must be a positive integer");
  if (!j["convention"].is_string() || j["convention"].get<std::string>() != convention)
    throw FormatError("convention must be \"left-to-right\"");
  for (const char *k : {"branch_points", "monodromy"}) {
    if (!j[k].is_array())
      throw FormatError(std::string(k) + " must be an array");
    for (const auto &item : j[k])
      if (!item.is_string())
        throw FormatError(std::string(k) + " must contain strings only");
  }

  MonodromyDatum d;
  d.degree = j["degree"].get<std::size_t>();
  d.branch_labels = j["branch_points"].get<std::vector<std::string>>();
  if (d.branch_labels.size() != j["monodromy"].size())
    throw FormatError("branch_points and monodromy differ in length");
  for (const auto &item : j["monodromy"]) {
    try {
      d.monodromy.push_back(parse_cycles(item.get<std::string>(), d.degree));
    } catch (const std::invalid_argument &e) {
      throw FormatError(std::string("bad cycle string: ") + e.what());
    }
  }
  return d;
}

MonodromyDatum read_monodromy_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw FormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_monodromy_json(buf.str());
}

void write_monodromy_file(const std::string &path, const MonodromyDatum &d) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw FormatError("cannot write " + path);
  out << to_monodromy_json(d);
  if (!out)
    throw FormatError("write to " + path + " failed");
}

} // namespace prym
