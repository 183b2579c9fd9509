#pragma once

// Executable checks for three combinatorial lemmas:
//  * the lambda/mu sequence bound sum(mu) >= 3 sum(lambda) - 3 together with
//    the Ferrers-diagram containment F(lambda) + F(lambda) ⊆ F(mu) behind it,
//  * the capped variant sum(mu) >= (2n+1)p,
//  * the hyperplane intersection lemma in (Z/p)^d, d >= 3.
//
// A check whose hypotheses do not hold reports Outcome::vacuous rather than a
// pass, so sweeps never count vacuous cases as coverage.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subset.hpp"

namespace sumdiff {

/// lambda_1 >= ... >= lambda_m > 0, m >= 1.
class PartitionSeq {
 public:
  explicit PartitionSeq(std::vector<std::int64_t> values) : values_(std::move(values)) {
    if (values_.empty()) throw domain_error("partition sequence must be nonempty");
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] <= 0) throw domain_error("partition sequence entries must be positive");
      if (i > 0 && values_[i] > values_[i - 1]) throw domain_error("partition sequence must be weakly decreasing");
    }
  }

  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  /// 1-based, as in lambda_k.
  std::int64_t operator[](std::size_t k) const { return values_.at(k - 1); }
  std::int64_t sum() const { return std::accumulate(values_.begin(), values_.end(), std::int64_t{0}); }

 private:
  std::vector<std::int64_t> values_;
};

enum class Outcome { holds, fails, vacuous };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::holds: return "holds";
    case Outcome::fails: return "fails";
    case Outcome::vacuous: return "vacuous";
  }
  return "unknown";
}

struct LemmaCheck {
  Outcome outcome = Outcome::vacuous;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  std::string reason;  // which hypothesis failed, for vacuous results

  std::int64_t slack() const { return lhs - rhs; }
};

struct SweepSummary {
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t failed = 0;

  void add(Outcome o) {
    ++checked;
    if (o == Outcome::holds) ++passed;
    else if (o == Outcome::vacuous) ++vacuous;
    else ++failed;
  }
};

/// mu_k = max over i + j - 1 = k of (lambda_i + lambda_j - 1), k = 1..2m-1.
inline std::vector<std::int64_t> mu_from_lambda(const PartitionSeq& lambda) {
  const auto m = lambda.size();
  std::vector<std::int64_t> mu(2 * m - 1, std::numeric_limits<std::int64_t>::min());
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) mu[i + j - 2] = std::max(mu[i + j - 2], lambda[i] + lambda[j] - 1);
  return mu;
}

inline LemmaCheck check_lemma_a1(const PartitionSeq& lambda) {
  LemmaCheck res;
  if (lambda.size() <= 1) {
    res.reason = "needs m > 1";
    return res;
  }
  if (lambda[1] <= 1) {
    res.reason = "needs lambda_1 > 1";
    return res;
  }
  const auto mu = mu_from_lambda(lambda);
  res.lhs = std::accumulate(mu.begin(), mu.end(), std::int64_t{0});
  res.rhs = 3 * lambda.sum() - 3;
  res.outcome = res.lhs >= res.rhs ? Outcome::holds : Outcome::fails;
  return res;
}

using LatticePoint = std::pair<std::int64_t, std::int64_t>;

/// {(x, y) : 0 <= y < len, 0 <= x < rows[y]}.
inline std::set<LatticePoint> ferrers_diagram(std::span<const std::int64_t> rows) {
  std::set<LatticePoint> pts;
  for (std::size_t y = 0; y < rows.size(); ++y)
    for (std::int64_t x = 0; x < rows[y]; ++x) pts.emplace(x, static_cast<std::int64_t>(y));
  return pts;
}

/// F(lambda) + F(lambda) ⊆ F(mu) for mu = mu_from_lambda(lambda).
inline bool ferrers_containment(const PartitionSeq& lambda) {
  const auto f_lambda = ferrers_diagram(lambda.values());
  const auto mu = mu_from_lambda(lambda);
  const auto f_mu = ferrers_diagram(mu);
  for (const auto& [x1, y1] : f_lambda)
    for (const auto& [x2, y2] : f_lambda)
      if (!f_mu.contains({x1 + x2, y1 + y2})) return false;
  return true;
}

/// mu_k = max over i + j - 1 = k of min{lambda_i + lambda_j - 1, p}: the
/// pointwise smallest mu satisfying the pairwise constraint.
inline std::vector<std::int64_t> minimal_feasible_mu(std::int64_t p, const PartitionSeq& lambda) {
  const auto m = lambda.size();
  std::vector<std::int64_t> mu(2 * m - 1, std::numeric_limits<std::int64_t>::min());
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      mu[i + j - 2] = std::max(mu[i + j - 2], std::min(lambda[i] + lambda[j] - 1, p));
  return mu;
}

/// sum(mu) >= (2n+1)p, given the lemma's hypotheses on (p, n, lambda, mu).
inline LemmaCheck check_lemma_a2(std::int64_t p, std::int64_t n, const PartitionSeq& lambda,
                                 std::span<const std::int64_t> mu) {
  LemmaCheck res;
  const auto m = static_cast<std::int64_t>(lambda.size());
  if (!is_prime(p)) res.reason = "needs p prime";
  else if (n < 1) res.reason = "needs n >= 1";
  else if (m < n + 2) res.reason = "needs m >= n + 2";
  else if (2 * m > p - 1) res.reason = "needs m <= (p-1)/2";
  else if (lambda[1] > p) res.reason = "needs lambda_1 <= p";
  else if (lambda.sum() < n * p + 1) res.reason = "needs sum(lambda) >= np + 1";
  else if (static_cast<std::int64_t>(mu.size()) != 2 * m - 1) res.reason = "needs mu of length 2m - 1";
  if (!res.reason.empty()) return res;

  for (std::int64_t i = 1; i <= m; ++i)
    for (std::int64_t j = 1; j <= m; ++j)
      if (mu[static_cast<std::size_t>(i + j - 2)] <
          std::min(lambda[static_cast<std::size_t>(i)] + lambda[static_cast<std::size_t>(j)] - 1, p)) {
        res.reason = "mu violates mu_{i+j-1} >= min{lambda_i + lambda_j - 1, p}";
        return res;
      }
  res.lhs = std::accumulate(mu.begin(), mu.end(), std::int64_t{0});
  res.rhs = (2 * n + 1) * p;
  res.outcome = res.lhs >= res.rhs ? Outcome::holds : Outcome::fails;
  return res;
}

/// check_lemma_a2 on the minimal feasible mu, which implies it for every
/// feasible mu.
inline LemmaCheck check_lemma_a2_minimal(std::int64_t p, std::int64_t n, const PartitionSeq& lambda) {
  return check_lemma_a2(p, n, lambda, minimal_feasible_mu(p, lambda));
}

struct HyperplaneCheck {
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  std::int64_t hyperplanes = 0;
  std::int64_t min_intersection = 0;

  bool implication_ok() const { return !hypothesis_holds || conclusion_holds; }
  Outcome outcome() const {
    if (!hypothesis_holds) return Outcome::vacuous;
    return conclusion_holds ? Outcome::holds : Outcome::fails;
  }
};

namespace detail {
inline GroupSpec vector_space(std::int64_t p, int d) {
  return GroupSpec(std::vector<std::int64_t>(static_cast<std::size_t>(d), p));
}
}  // namespace detail

/// If |S ∩ H| >= m p^(d-2) for every vector hyperplane H of (Z/p)^d, then
/// |S| >= m p^(d-1). Hyperplanes are kernels of functionals whose first
/// nonzero coefficient is 1, one per hyperplane.
inline HyperplaneCheck check_hyperplane_lemma(std::int64_t p, int d, std::int64_t m, const GroupSubset& s) {
  if (!is_prime(p)) throw domain_error("hyperplane lemma: p=" + std::to_string(p) + " is not prime");
  if (d < 3) throw domain_error("hyperplane lemma: needs dimension d >= 3, got " + std::to_string(d));
  if (!(s.group() == detail::vector_space(p, d)))
    throw group_mismatch("hyperplane lemma: S must live in (Z/" + std::to_string(p) + ")^" + std::to_string(d));

  const auto g = s.group();
  const auto members = s.elements();
  const auto threshold = m * ipow(p, d - 2);
  HyperplaneCheck res;
  res.hypothesis_holds = true;
  res.min_intersection = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t fi = 1; fi < g.order(); ++fi) {
    const auto f = g.element_at(fi);
    const auto lead = std::find_if(f.coords.begin(), f.coords.end(), [](std::int64_t c) { return c != 0; });
    if (*lead != 1) continue;
    ++res.hyperplanes;
    std::int64_t count = 0;
    for (const auto& x : members) {
      std::int64_t dot = 0;
      for (int k = 0; k < d; ++k) dot += f.coords[static_cast<std::size_t>(k)] * x.coords[static_cast<std::size_t>(k)];
      if (dot % p == 0) ++count;
    }
    res.min_intersection = std::min(res.min_intersection, count);
    if (count < threshold) res.hypothesis_holds = false;
  }
  res.conclusion_holds = s.size() >= m * ipow(p, d - 1);
  return res;
}

/// Lemma A.1 over every lambda with length <= max_len and parts <= max_part.
inline SweepSummary sweep_lemma_a1(int max_len, std::int64_t max_part) {
  SweepSummary sum;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::int64_t cap) -> void {
    if (!cur.empty()) sum.add(check_lemma_a1(PartitionSeq(cur)).outcome);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (std::int64_t v = 1; v <= cap; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, max_part);
  return sum;
}

/// Ferrers containment over the same family as sweep_lemma_a1.
inline SweepSummary sweep_ferrers_containment(int max_len, std::int64_t max_part) {
  SweepSummary sum;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::int64_t cap) -> void {
    if (!cur.empty()) sum.add(ferrers_containment(PartitionSeq(cur)) ? Outcome::holds : Outcome::fails);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (std::int64_t v = 1; v <= cap; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, max_part);
  return sum;
}

/// Lemma A.2 in minimal-mu mode for every n >= 1, n + 2 <= m <= (p-1)/2 and
/// every lambda of length m with lambda_1 <= p and sum(lambda) <= np + p.
/// Sequences with sum below np + 1 are counted as vacuous.
inline SweepSummary sweep_lemma_a2(std::int64_t p) {
  if (!is_prime(p)) throw domain_error("sweep_lemma_a2: p=" + std::to_string(p) + " is not prime");
  SweepSummary sum;
  const auto max_m = (p - 1) / 2;
  for (std::int64_t n = 1; n + 2 <= max_m; ++n)
    for (auto m = n + 2; m <= max_m; ++m) {
      std::vector<std::int64_t> cur;
      auto rec = [&](auto&& self, std::int64_t cap, std::int64_t budget) -> void {
        if (static_cast<std::int64_t>(cur.size()) == m) {
          sum.add(check_lemma_a2_minimal(p, n, PartitionSeq(cur)).outcome);
          return;
        }
        const auto slots_left = m - static_cast<std::int64_t>(cur.size()) - 1;
        for (std::int64_t v = 1; v <= cap && v + slots_left <= budget; ++v) {
          cur.push_back(v);
          self(self, v, budget - v);
          cur.pop_back();
        }
      };
      rec(rec, p, n * p + p);
    }
  return sum;
}

/// The hyperplane lemma for every subset of (Z/p)^d (p^d <= 20).
inline SweepSummary sweep_hyperplane_exhaustive(std::int64_t p, int d, std::int64_t m) {
  const auto g = detail::vector_space(p, d);
  if (g.order() > 20) throw domain_error("sweep_hyperplane_exhaustive: 2^(p^d) subsets is too many");
  SweepSummary sum;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.order()); ++bits) {
    GroupSubset s(g);
    for (std::int64_t i = 0; i < g.order(); ++i)
      if ((bits >> i) & 1u) s.insert(i);
    sum.add(check_hyperplane_lemma(p, d, m, s).outcome());
  }
  return sum;
}

/// The hyperplane lemma on random subsets; each sample draws a density in
/// [0, 1) and includes every element independently with that probability.
inline SweepSummary sweep_hyperplane_random(std::int64_t p, int d, std::int64_t m, std::uint64_t samples,
                                            std::uint64_t seed) {
  const auto g = detail::vector_space(p, d);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SweepSummary sum;
  for (std::uint64_t k = 0; k < samples; ++k) {
    const double density = unit(rng);
    GroupSubset s(g);
    for (std::int64_t i = 0; i < g.order(); ++i)
      if (unit(rng) < density) s.insert(i);
    sum.add(check_hyperplane_lemma(p, d, m, s).outcome());
  }
  return sum;
}

}  // namespace sumdiff
