#pragma once

// Witness-set files: {"group":"n1,n2,...","elements":[[x1,...],...]} with
// elements sorted by linear index.

#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "subset.hpp"

namespace sumdiff {

inline nlohmann::ordered_json elements_to_json(const GroupSubset& s) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : s.elements()) arr.push_back(e.coords);
  return arr;
}

inline nlohmann::ordered_json witness_to_json(const GroupSubset& s) {
  nlohmann::ordered_json j;
  j["group"] = s.group().to_string();
  j["elements"] = elements_to_json(s);
  return j;
}

/// Canonical one-line text form, newline terminated.
inline std::string witness_to_string(const GroupSubset& s) { return witness_to_json(s).dump() + "\n"; }

inline GroupSubset witness_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("elements"))
    throw domain_error("witness: expected an object with \"group\" and \"elements\"");
  if (!j["group"].is_string()) throw domain_error("witness: \"group\" must be a string");
  if (!j["elements"].is_array()) throw domain_error("witness: \"elements\" must be an array");
  auto g = GroupSpec::parse(j["group"].get<std::string>());
  GroupSubset s(g);
  for (const auto& e : j["elements"]) {
    if (!e.is_array()) throw domain_error("witness: each element must be an array of coordinates");
    std::vector<std::int64_t> coords;
    for (const auto& c : e) {
      if (!c.is_number_integer()) throw domain_error("witness: coordinates must be integers");
      coords.push_back(c.get<std::int64_t>());
    }
    s.insert(Element(std::move(coords)));
  }
  return s;
}

inline GroupSubset witness_from_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw domain_error(std::string("witness: invalid JSON: ") + e.what());
  }
  return witness_from_json(j);
}

inline GroupSubset read_witness_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open witness file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return witness_from_string(ss.str());
}

inline void write_witness_file(const std::string& path, const GroupSubset& s) {
  std::ofstream out(path);
  if (!out) throw domain_error("cannot write witness file " + path);
  out << witness_to_string(s);
}

}  // namespace sumdiff
