#pragma once

// Explicit sets meeting the upper bounds on |A - A|.

#include <cstdint>
#include <string_view>

#include "formulas.hpp"
#include "setops.hpp"

namespace sumdiff {

enum class ConstructionKind { coset_progression, product, lex_prefix };

inline std::string_view to_string(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::coset_progression: return "coset-progression";
    case ConstructionKind::product: return "product";
    case ConstructionKind::lex_prefix: return "lex-prefix";
  }
  return "unknown";
}

/// A constructed set with its measured |A - A| and the bound it must meet.
struct WitnessReport {
  GroupSubset set;
  std::int64_t achieved_size;
  std::int64_t target_bound;
  ConstructionKind kind;

  bool meets_bound() const { return achieved_size <= target_bound; }
};

namespace detail {
inline std::int64_t measure_difference(const GroupSubset& a) { return difference_set(a, a).size(); }
}  // namespace detail

/// In Z/N: the union of ceil(r/d) consecutive cosets H, H+1, ... of the
/// subgroup H of order d.
inline WitnessReport coset_progression(std::int64_t order, std::int64_t r, std::int64_t d) {
  if (order < 1) throw domain_error("coset_progression: N must be positive");
  detail::require_cardinality(order, r, "r");
  if (d < 1 || order % d != 0)
    throw domain_error("coset_progression: d=" + std::to_string(d) + " does not divide N=" + std::to_string(order));
  const GroupSpec g = order == 1 ? GroupSpec{} : GroupSpec{order};
  const auto step = order / d;
  const auto cosets = ceil_div(r, d);
  GroupSubset a(g);
  for (std::int64_t i = 0; i < cosets; ++i)
    for (std::int64_t h = 0; h < d; ++h) a.insert(h * step + i);
  const auto achieved = detail::measure_difference(a);
  return {std::move(a), achieved, d * (2 * cosets - 1), ConstructionKind::coset_progression};
}

/// A = A1 x A2 inside H x Z/e (e = exponent), with A1 a subgroup of order d1
/// and A2 a coset progression of size ceil(r/d1) built on divisor d2. The set
/// is mapped back into g's own coordinates.
inline WitnessReport product_construction(const GroupSpec& g, std::int64_t r, std::int64_t d1, std::int64_t d2) {
  detail::require_cardinality(g.order(), r, "r");
  const auto e = g.exponent();
  const auto h_order = g.order() / e;
  if (d1 < 1 || h_order % d1 != 0)
    throw domain_error("product_construction: d1=" + std::to_string(d1) + " does not divide N/e=" + std::to_string(h_order));
  if (d2 < 1 || e % d2 != 0)
    throw domain_error("product_construction: d2=" + std::to_string(d2) + " does not divide e=" + std::to_string(e));
  if (d1 * e < r)
    throw domain_error("product_construction: need d1*e >= r, got " + std::to_string(d1 * e) + " < " + std::to_string(r));

  const InvariantIsomorphism iso(g);
  const auto& form = iso.form();
  std::vector<std::int64_t> h_factors(form.factors().begin(), form.factors().end());
  if (!h_factors.empty()) h_factors.pop_back();
  const GroupSpec h(h_factors);

  const auto a1 = subgroup_of_order(h, d1);
  const auto s = ceil_div(r, d1);
  const auto a2 = coset_progression(e, s, d2).set;

  GroupSubset a(g);
  for (const auto& x : a1.elements())
    for (auto y : a2.indices()) {
      Element z = x;
      if (form.rank() > 0) z.coords.push_back(y);
      a.insert(iso.from_form(z));
    }
  const auto d = d1 * d2;
  const auto achieved = detail::measure_difference(a);
  return {std::move(a), achieved, d * (2 * ceil_div(r, d) - 1), ConstructionKind::product};
}

/// The r lexicographically smallest elements of (Z/p)^d.
inline WitnessReport lex_prefix(std::int64_t p, int d, std::int64_t r) {
  if (!is_prime(p)) throw domain_error("lex_prefix: p=" + std::to_string(p) + " is not prime");
  if (d < 0) throw domain_error("lex_prefix: dimension must be >= 0");
  const GroupSpec g(std::vector<std::int64_t>(static_cast<std::size_t>(d), p));
  detail::require_cardinality(g.order(), r, "r");
  GroupSubset a(g);
  for (std::int64_t i = 0; i < r; ++i) a.insert(i);
  const auto achieved = detail::measure_difference(a);
  return {std::move(a), achieved, rho_minus_vector_space(p, d, r), ConstructionKind::lex_prefix};
}

/// Best coset progression over all d | N.
inline WitnessReport best_coset_progression(std::int64_t order, std::int64_t r) {
  std::optional<WitnessReport> best;
  for (auto d : divisors(order)) {
    auto w = coset_progression(order, r, d);
    if (!best || w.achieved_size < best->achieved_size) best = std::move(w);
  }
  return std::move(*best);
}

/// Best product construction over all admissible (d1, d2).
inline WitnessReport best_product_construction(const GroupSpec& g, std::int64_t r) {
  detail::require_cardinality(g.order(), r, "r");
  const auto e = g.exponent();
  std::optional<WitnessReport> best;
  for (auto d1 : divisors(g.order() / e)) {
    if (d1 * e < r) continue;
    for (auto d2 : divisors(e)) {
      auto w = product_construction(g, r, d1, d2);
      if (!best || w.achieved_size < best->achieved_size) best = std::move(w);
    }
  }
  return std::move(*best);
}

}  // namespace sumdiff
