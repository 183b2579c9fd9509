#pragma once

// Exhaustive check of the conjectured formula for min |A - A| on every
// abelian group up to a given order.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <vector>

#include "report.hpp"

namespace sumdiff {

struct ConjectureReport {
  std::vector<SearchRecord> records;

  std::vector<SearchRecord> counterexamples() const {
    std::vector<SearchRecord> out;
    std::copy_if(records.begin(), records.end(), std::back_inserter(out),
                 [](const SearchRecord& r) { return r.equal() == false; });
    return out;
  }
  bool all_equal() const {
    return std::all_of(records.begin(), records.end(), [](const SearchRecord& r) { return r.equal() == true; });
  }
};

/// Every group of order in [min_order, max_order] (one per isomorphism
/// class) and every 1 <= r <= N. on_record sees each record as it completes.
inline ConjectureReport verify_conjecture(std::int64_t max_order, const SearchOptions& opts = {},
                                          const std::function<void(const SearchRecord&)>& on_record = {},
                                          std::int64_t min_order = 1) {
  if (max_order < 1) throw domain_error("verify_conjecture: max_order must be >= 1");
  ConjectureReport report;
  for (auto n = std::max<std::int64_t>(min_order, 1); n <= max_order; ++n)
    for (const auto& g : enumerate_abelian_groups(n))
      for (std::int64_t r = 1; r <= n; ++r) {
        auto rec = run_search_record(g, r, Objective::diff, opts);
        if (on_record) on_record(rec);
        report.records.push_back(std::move(rec));
      }
  return report;
}

}  // namespace sumdiff
