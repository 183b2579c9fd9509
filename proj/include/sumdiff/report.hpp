#pragma once

// One record per (group, r) search job, rendered as a JSON line, a CSV row or
// a text line. Columns: group, r, objective, minimum, conjectured, equal,
// witness, nodes, millis.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "search.hpp"
#include "witness_io.hpp"

namespace sumdiff {

struct SearchRecord {
  SearchCertificate cert;
  /// The closed-form prediction, when one exists for this objective and group.
  std::optional<std::int64_t> conjectured;
  std::int64_t millis = 0;

  std::optional<bool> equal() const {
    if (!conjectured) return std::nullopt;
    return cert.minimum == *conjectured;
  }
};

/// The closed-form value the exact minimum is compared against.
inline std::optional<std::int64_t> predicted_minimum(const GroupSpec& g, std::int64_t r, Objective objective) {
  switch (objective) {
    case Objective::diff: return rho_minus_conjectured(g, r).value;
    case Objective::sum: return rho_plus(g, r);
    case Objective::signed2: return rho_pm_predicted_for(g, r);
  }
  return std::nullopt;
}

/// Runs exact_rho and wraps the certificate with its prediction and timing.
inline SearchRecord run_search_record(const GroupSpec& g, std::int64_t r, Objective objective,
                                      const SearchOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  SearchRecord rec{exact_rho(g, r, objective, opts), predicted_minimum(g, r, objective), 0};
  rec.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

inline nlohmann::ordered_json to_json(const SearchRecord& rec) {
  nlohmann::ordered_json j;
  j["group"] = rec.cert.group.to_string();
  j["r"] = rec.cert.r;
  j["objective"] = std::string(to_string(rec.cert.objective));
  j["minimum"] = rec.cert.minimum;
  j["conjectured"] = rec.conjectured ? nlohmann::ordered_json(*rec.conjectured) : nlohmann::ordered_json(nullptr);
  j["equal"] = rec.equal() ? nlohmann::ordered_json(*rec.equal()) : nlohmann::ordered_json(nullptr);
  j["witness"] = elements_to_json(rec.cert.witness);
  j["nodes"] = rec.cert.nodes;
  j["millis"] = rec.millis;
  return j;
}

inline std::string csv_header() { return "group,r,objective,minimum,conjectured,equal,witness,nodes,millis"; }

inline std::string to_csv_row(const SearchRecord& rec) {
  std::string witness;
  for (const auto& e : rec.cert.witness.elements()) {
    if (!witness.empty()) witness += ' ';
    witness += e.to_string();
  }
  const auto eq = rec.equal();
  return "\"" + rec.cert.group.to_string() + "\"," + std::to_string(rec.cert.r) + "," +
         std::string(to_string(rec.cert.objective)) + "," + std::to_string(rec.cert.minimum) + "," +
         (rec.conjectured ? std::to_string(*rec.conjectured) : "") + "," + (eq ? (*eq ? "true" : "false") : "") +
         ",\"" + witness + "\"," + std::to_string(rec.cert.nodes) + "," + std::to_string(rec.millis);
}

inline std::string to_text(const SearchRecord& rec) {
  const auto eq = rec.equal();
  return "group=" + rec.cert.group.to_string() + " r=" + std::to_string(rec.cert.r) +
         " objective=" + std::string(to_string(rec.cert.objective)) + " minimum=" + std::to_string(rec.cert.minimum) +
         " conjectured=" + (rec.conjectured ? std::to_string(*rec.conjectured) : "none") +
         " equal=" + (eq ? (*eq ? "true" : "false") : "none") + " witness=" + rec.cert.witness.to_string() +
         " nodes=" + std::to_string(rec.cert.nodes) + " millis=" + std::to_string(rec.millis);
}

}  // namespace sumdiff
