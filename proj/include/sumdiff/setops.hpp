#pragma once

// Set arithmetic on subsets of a finite abelian group: A+B, A-B, -A, 2±A, A+t.

#include <cstdint>
#include <vector>

#include "subset.hpp"

namespace sumdiff {

/// { a + t : a in A }.
inline GroupSubset translate(const GroupSubset& a, const Element& t) {
  const auto& g = a.group();
  const auto ti = g.index_of(t);
  GroupSubset out(g);
  for (auto i : a.indices()) out.insert(g.add_index(i, ti));
  return out;
}

inline GroupSubset negate_set(const GroupSubset& a) {
  const auto& g = a.group();
  GroupSubset out(g);
  for (auto i : a.indices()) out.insert(g.neg_index(i));
  return out;
}

/// A + B: union of translates of the larger operand by each member of the
/// smaller one.
inline GroupSubset sumset(const GroupSubset& a, const GroupSubset& b) {
  a.require_same_group(b);
  const auto& g = a.group();
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  const auto large_idx = large.indices();
  GroupSubset out(g);
  for (auto s : small.indices())
    for (auto l : large_idx) out.insert(g.add_index(s, l));
  return out;
}

inline GroupSubset difference_set(const GroupSubset& a, const GroupSubset& b) { return sumset(a, negate_set(b)); }

/// 2±A = {2a, -2a : a in A} U {a+b, a-b, -a-b : a, b in A, a != b}.
inline GroupSubset signed_sumset_2(const GroupSubset& a) {
  if (a.empty()) throw domain_error("signed_sumset_2: A must be nonempty");
  const auto& g = a.group();
  const auto idx = a.indices();
  GroupSubset out(g);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto x = idx[i];
    const auto twice = g.add_index(x, x);
    out.insert(twice);
    out.insert(g.neg_index(twice));
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (i == j) continue;
      const auto y = idx[j];
      const auto s = g.add_index(x, y);
      out.insert(s);
      out.insert(g.neg_index(s));
      out.insert(g.sub_index(x, y));
    }
  }
  return out;
}

}  // namespace sumdiff
