#pragma once

// Closed forms for the minimum sizes of A+B, A+A, A-A and 2±A.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "group.hpp"

namespace sumdiff {

/// How much a formula value is known to mean for the queried group.
enum class FormulaStatus {
  theorem,               // proven for every finite abelian group
  theorem_cyclic,        // proven equality, cyclic group
  theorem_vector_space,  // proven equality, (Z/p)^d
  conjectured,           // proven upper bound, equality conjectured
  upper_bound_only,      // reported as an upper bound only
};

inline std::string_view to_string(FormulaStatus s) {
  switch (s) {
    case FormulaStatus::theorem: return "theorem";
    case FormulaStatus::theorem_cyclic: return "theorem-cyclic";
    case FormulaStatus::theorem_vector_space: return "theorem-vector-space";
    case FormulaStatus::conjectured: return "conjectured";
    case FormulaStatus::upper_bound_only: return "upper-bound-only";
  }
  return "unknown";
}

struct FormulaValue {
  std::int64_t value;
  FormulaStatus status;
};

namespace detail {
inline void require_cardinality(std::int64_t order, std::int64_t r, const char* what) {
  if (r < 1 || r > order)
    throw domain_error(std::string(what) + "=" + std::to_string(r) + " outside [1, " + std::to_string(order) + "]");
}
}  // namespace detail

/// Cauchy-Davenport: min |A+B| over |A| = r, |B| = s in Z/p.
inline std::int64_t cauchy_davenport(std::int64_t p, std::int64_t r, std::int64_t s) {
  if (!is_prime(p)) throw domain_error("cauchy_davenport: p=" + std::to_string(p) + " is not prime");
  detail::require_cardinality(p, r, "r");
  detail::require_cardinality(p, s, "s");
  return std::min(r + s - 1, p);
}

/// min over d | N of d (ceil(r/d) + ceil(s/d) - 1). Depends on N only.
inline std::int64_t mu(std::int64_t order, std::int64_t r, std::int64_t s) {
  detail::require_cardinality(order, r, "r");
  detail::require_cardinality(order, s, "s");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (auto d : divisors(order)) best = std::min(best, d * (ceil_div(r, d) + ceil_div(s, d) - 1));
  return best;
}

inline std::int64_t mu(const GroupSpec& g, std::int64_t r, std::int64_t s) { return mu(g.order(), r, s); }

inline std::int64_t rho_plus(const GroupSpec& g, std::int64_t r) { return mu(g, r, r); }

/// min over d | N of d (2 ceil(r/d) - 1): rho^- of the cyclic group Z/N.
inline std::int64_t rho_minus_cyclic(std::int64_t order, std::int64_t r) {
  detail::require_cardinality(order, r, "r");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (auto d : divisors(order)) best = std::min(best, d * (2 * ceil_div(r, d) - 1));
  return best;
}

/// min over d in D(N, e, r) of d (2 ceil(r/d) - 1); an upper bound on
/// rho^-_G(r) for every G.
inline std::int64_t difference_upper_bound(const GroupSpec& g, std::int64_t r) {
  detail::require_cardinality(g.order(), r, "r");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (auto d : restricted_divisor_set(g.order(), g.exponent(), r)) best = std::min(best, d * (2 * ceil_div(r, d) - 1));
  return best;
}

inline FormulaStatus rho_minus_status(const GroupSpec& g) {
  if (is_cyclic(g)) return FormulaStatus::theorem_cyclic;
  if (elementary_prime(g)) return FormulaStatus::theorem_vector_space;
  return FormulaStatus::conjectured;
}

/// The conjectured exact value of rho^-_G(r), tagged with its status.
inline FormulaValue rho_minus_conjectured(const GroupSpec& g, std::int64_t r) {
  return {difference_upper_bound(g, r), rho_minus_status(g)};
}

/// rho^- of (Z/p)^d: p^t min{2 ceil(r/p^t) - 1, p} where p^t < r <= p^(t+1).
inline std::int64_t rho_minus_vector_space(std::int64_t p, int d, std::int64_t r) {
  if (!is_prime(p)) throw domain_error("rho_minus_vector_space: p=" + std::to_string(p) + " is not prime");
  if (d < 0) throw domain_error("rho_minus_vector_space: dimension must be >= 0");
  detail::require_cardinality(ipow(p, d), r, "r");
  if (r == 1) return 1;
  std::int64_t pt = 1;
  while (pt * p < r) pt *= p;
  return pt * std::min(2 * ceil_div(r, pt) - 1, p);
}

/// Predicted min |2±A| over |A| = cp + v in (Z/p)^2. Only the two proven
/// regimes are answered; anything else is unsupported_regime.
inline std::int64_t rho_pm_predicted(std::int64_t p, std::int64_t c, std::int64_t v) {
  if (p <= 2 || !is_prime(p)) throw unsupported_regime("rho_pm_predicted: p must be an odd prime");
  if (c >= 1 && c <= (p - 3) / 2 && v >= 1 && v <= p) return (2 * c + 1) * p;
  if (c == (p - 1) / 2 && v >= 1 && v <= (p - 1) / 2) return p * p - 1;
  throw unsupported_regime("rho_pm_predicted: (p, c, v) = (" + std::to_string(p) + ", " + std::to_string(c) + ", " +
                           std::to_string(v) + ") lies outside both proven regimes");
}

/// rho_pm_predicted for g = [p,p] and |A| = m, or nullopt outside the regimes.
inline std::optional<std::int64_t> rho_pm_predicted_for(const GroupSpec& g, std::int64_t m) {
  const auto p = elementary_prime(g);
  if (!p || g.rank() != 2 || *p == 2 || m < 1) return std::nullopt;
  const auto c = (m - 1) / *p;
  const auto v = m - c * *p;
  try {
    return rho_pm_predicted(*p, c, v);
  } catch (const unsupported_regime&) {
    return std::nullopt;
  }
}

}  // namespace sumdiff
