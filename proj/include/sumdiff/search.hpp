#pragma once

// Exact minima of |A - A|, |A + A| and |2±A| over r-subsets of a finite
// abelian group, by exhaustive enumeration or branch and bound.
//
// Search space normalization:
//  * diff and sum are translation invariant, so the identity is forced into
//    A (unless disabled).
//  * With automorphism pruning on (Z/p)^k, A is further forced to contain the
//    basis vectors e_k, e_{k-1}, ..., e_{k-j} (indices 1, p, ..., p^j) for
//    every j with r > p^j. GL_k(F_p) fixes 0 and acts transitively on vectors
//    outside any coordinate subspace while fixing that subspace pointwise, and
//    all three objectives are preserved by automorphisms.
//  * 2±A is not translation invariant; only the automorphism step applies.
//
// Every remaining subset is forced ∪ {combination of the pool}, visited in
// lexicographic order of pool positions. Work is split on the first pool
// member; workers share only the incumbent value.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "formulas.hpp"
#include "setops.hpp"

namespace sumdiff {

enum class Objective { diff, sum, signed2 };
enum class SearchMode { exhaustive, branch_and_bound };
enum class Symmetry { automatic, off, on };

inline std::string_view to_string(Objective o) {
  switch (o) {
    case Objective::diff: return "diff";
    case Objective::sum: return "sum";
    case Objective::signed2: return "signed2";
  }
  return "unknown";
}

inline std::string_view to_string(SearchMode m) {
  return m == SearchMode::exhaustive ? "exhaustive" : "branch-and-bound";
}

inline Objective parse_objective(std::string_view s) {
  if (s == "diff") return Objective::diff;
  if (s == "sum") return Objective::sum;
  if (s == "signed2") return Objective::signed2;
  throw domain_error("unknown objective '" + std::string(s) + "' (expected diff, sum or signed2)");
}

/// The objective evaluated directly through set arithmetic.
inline std::int64_t evaluate_objective(const GroupSubset& a, Objective o) {
  switch (o) {
    case Objective::diff: return difference_set(a, a).size();
    case Objective::sum: return sumset(a, a).size();
    case Objective::signed2: return signed_sumset_2(a).size();
  }
  return 0;
}

struct SearchOptions {
  SearchMode mode = SearchMode::branch_and_bound;
  /// automatic: on exactly for (Z/p)^2.
  Symmetry automorphisms = Symmetry::automatic;
  /// Force the identity into A for the translation-invariant objectives.
  bool normalize_translation = true;
  /// 0 means std::thread::hardware_concurrency().
  unsigned workers = 1;
  /// Jobs whose leaf estimate exceeds this are refused.
  std::uint64_t node_budget = 4'000'000'000ULL;
};

struct SearchCertificate {
  GroupSpec group;
  std::int64_t r = 0;
  Objective objective = Objective::diff;
  std::int64_t minimum = 0;
  GroupSubset witness{GroupSpec{}};
  std::uint64_t nodes = 0;
  SearchMode mode = SearchMode::branch_and_bound;
  bool automorphism_pruning = false;
  double estimated_leaves = 0;
};

/// Forced members, free pool and admissible global lower bound of a job.
struct SearchPlan {
  std::vector<std::int64_t> forced;
  std::vector<std::int64_t> pool;
  std::int64_t lower_bound = 1;
  bool automorphism_pruning = false;
  double estimated_leaves = 0;
};

inline SearchPlan plan_search(const GroupSpec& g, std::int64_t r, Objective objective, const SearchOptions& opts) {
  const auto n = g.order();
  if (r < 1 || r > n)
    throw domain_error("search: r=" + std::to_string(r) + " infeasible for group of order " + std::to_string(n));

  SearchPlan plan;
  const auto p = elementary_prime(g);
  switch (opts.automorphisms) {
    case Symmetry::off: break;
    case Symmetry::automatic: plan.automorphism_pruning = p && g.rank() == 2; break;
    case Symmetry::on:
      if (!p) throw domain_error("automorphism pruning needs an elementary abelian group, got [" + g.to_string() + "]");
      plan.automorphism_pruning = true;
      break;
  }

  if (opts.normalize_translation && objective != Objective::signed2) plan.forced.push_back(0);
  if (plan.automorphism_pruning) {
    std::int64_t basis = 1;
    for (std::size_t j = 0; j < g.rank() && r > basis; ++j, basis *= *p) plan.forced.push_back(basis);
  }

  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  for (auto f : plan.forced) taken[static_cast<std::size_t>(f)] = true;
  for (std::int64_t i = 0; i < n; ++i)
    if (!taken[static_cast<std::size_t>(i)]) plan.pool.push_back(i);

  if (objective != Objective::signed2) plan.lower_bound = mu(n, r, r);
  plan.estimated_leaves = binomial(static_cast<std::int64_t>(plan.pool.size()), r - static_cast<std::int64_t>(plan.forced.size()));
  return plan;
}

namespace detail {

struct CayleyTables {
  int n;
  std::vector<int> add, sub, neg;

  explicit CayleyTables(const GroupSpec& g) : n(static_cast<int>(g.order())) {
    const auto sz = static_cast<std::size_t>(n);
    add.resize(sz * sz);
    sub.resize(sz * sz);
    neg.resize(sz);
    for (int i = 0; i < n; ++i) {
      neg[static_cast<std::size_t>(i)] = static_cast<int>(g.neg_index(i));
      for (int j = 0; j < n; ++j) {
        add[static_cast<std::size_t>(i) * sz + static_cast<std::size_t>(j)] = static_cast<int>(g.add_index(i, j));
        sub[static_cast<std::size_t>(i) * sz + static_cast<std::size_t>(j)] = static_cast<int>(g.sub_index(i, j));
      }
    }
  }

  int plus(int i, int j) const { return add[static_cast<std::size_t>(i * n + j)]; }
  int minus(int i, int j) const { return sub[static_cast<std::size_t>(i * n + j)]; }
};

template <std::size_t W>
struct Mask {
  std::array<std::uint64_t, W> w{};

  void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
};

/// State shared between workers: the incumbent value and a stop flag.
struct SharedIncumbent {
  std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::max()};
  std::atomic<bool> stop{false};

  /// Lowers best to value; true if this call made it strictly smaller.
  bool offer(std::int64_t value) {
    auto cur = best.load(std::memory_order_relaxed);
    while (value < cur)
      if (best.compare_exchange_weak(cur, value, std::memory_order_relaxed)) return true;
    return false;
  }
};

struct ItemResult {
  std::int64_t value = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> members;
  std::uint64_t nodes = 0;
};

/// Incremental branch-and-bound over one first-pool-member subtree.
template <std::size_t W>
class BranchAndBound {
 public:
  BranchAndBound(const CayleyTables& t, Objective obj, std::int64_t r, const SearchPlan& plan, SharedIncumbent& shared)
      : t_(t), obj_(obj), r_(static_cast<int>(r)), plan_(plan), shared_(shared) {
    members_.reserve(static_cast<std::size_t>(r_));
    masks_.resize(static_cast<std::size_t>(r_) + 1);
    for (auto f : plan_.forced) push(static_cast<int>(f));
    base_depth_ = static_cast<int>(members_.size());
  }

  /// Evaluates the single subset made of the forced members.
  ItemResult run_forced_only() {
    ItemResult res;
    res.nodes = 1;
    leaf(res);
    return res;
  }

  ItemResult run_item(std::size_t first) {
    ItemResult res;
    members_.resize(static_cast<std::size_t>(base_depth_));
    visit(first, res);
    return res;
  }

 private:
  /// Appends x to the member list, extending the objective mask.
  void push(int x) {
    const auto k = members_.size();
    auto m = masks_[k];
    switch (obj_) {
      case Objective::diff:
        m.set(t_.minus(x, x));
        for (auto y : members_) {
          m.set(t_.minus(x, y));
          m.set(t_.minus(y, x));
        }
        break;
      case Objective::sum:
        m.set(t_.plus(x, x));
        for (auto y : members_) m.set(t_.plus(x, y));
        break;
      case Objective::signed2: {
        const int twice = t_.plus(x, x);
        m.set(twice);
        m.set(t_.neg[static_cast<std::size_t>(twice)]);
        for (auto y : members_) {
          const int s = t_.plus(x, y);
          m.set(s);
          m.set(t_.neg[static_cast<std::size_t>(s)]);
          m.set(t_.minus(x, y));
          m.set(t_.minus(y, x));
        }
        break;
      }
    }
    members_.push_back(x);
    masks_[k + 1] = m;
  }

  void leaf(ItemResult& res) {
    const std::int64_t value = masks_[members_.size()].count();
    if (value < res.value && shared_.offer(value)) {
      res.value = value;
      res.members.assign(members_.begin(), members_.end());
      if (value <= plan_.lower_bound) shared_.stop.store(true, std::memory_order_relaxed);
    }
  }

  void visit(std::size_t pos, ItemResult& res) {
    ++res.nodes;
    push(static_cast<int>(plan_.pool[pos]));
    const auto depth = static_cast<int>(members_.size());
    if (depth == r_) {
      leaf(res);
    } else {
      const std::int64_t partial = masks_[static_cast<std::size_t>(depth)].count();
      if (std::max(partial, plan_.lower_bound) < shared_.best.load(std::memory_order_relaxed)) {
        const auto need = static_cast<std::size_t>(r_ - depth);
        for (auto next = pos + 1; next + need <= plan_.pool.size(); ++next) {
          if (shared_.stop.load(std::memory_order_relaxed)) break;
          visit(next, res);
        }
      }
    }
    members_.pop_back();
  }

  const CayleyTables& t_;
  Objective obj_;
  int r_;
  const SearchPlan& plan_;
  SharedIncumbent& shared_;
  std::vector<int> members_;
  std::vector<Mask<W>> masks_;
  int base_depth_ = 0;
};

/// Plain enumeration; every subset is measured from scratch through setops.
inline ItemResult exhaustive_item(const GroupSpec& g, Objective obj, std::int64_t r, const SearchPlan& plan,
                                  std::optional<std::size_t> first) {
  ItemResult res;
  std::vector<std::int64_t> members(plan.forced.begin(), plan.forced.end());
  auto measure = [&] {
    ++res.nodes;
    const auto value = evaluate_objective(GroupSubset::from_indices(g, members), obj);
    if (value < res.value) {
      res.value = value;
      res.members = members;
    }
  };
  if (!first) {
    measure();
    return res;
  }
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    members.push_back(plan.pool[pos]);
    if (static_cast<std::int64_t>(members.size()) == r) {
      measure();
    } else {
      const auto need = static_cast<std::size_t>(r - static_cast<std::int64_t>(members.size()));
      for (auto next = pos + 1; next + need <= plan.pool.size(); ++next) self(self, next);
    }
    members.pop_back();
  };
  rec(rec, *first);
  return res;
}

template <std::size_t W>
std::vector<ItemResult> run_branch_and_bound(const GroupSpec& g, Objective obj, std::int64_t r, const SearchPlan& plan,
                                             unsigned workers) {
  const CayleyTables tables(g);
  SharedIncumbent shared;
  const auto need = static_cast<std::size_t>(r) - plan.forced.size();
  if (need == 0) return {BranchAndBound<W>(tables, obj, r, plan, shared).run_forced_only()};

  const std::size_t items = plan.pool.size() - need + 1;
  std::vector<ItemResult> results(items);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    BranchAndBound<W> kernel(tables, obj, r, plan, shared);
    for (auto i = next.fetch_add(1); i < items; i = next.fetch_add(1)) {
      if (shared.stop.load(std::memory_order_relaxed)) break;
      results[i] = kernel.run_item(i);
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return results;
}

inline std::vector<ItemResult> run_exhaustive(const GroupSpec& g, Objective obj, std::int64_t r, const SearchPlan& plan,
                                              unsigned workers) {
  const auto need = static_cast<std::size_t>(r) - plan.forced.size();
  if (need == 0) return {exhaustive_item(g, obj, r, plan, std::nullopt)};
  const std::size_t items = plan.pool.size() - need + 1;
  std::vector<ItemResult> results(items);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (auto i = next.fetch_add(1); i < items; i = next.fetch_add(1)) results[i] = exhaustive_item(g, obj, r, plan, i);
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return results;
}

}  // namespace detail

/// Largest group order the search supports.
inline constexpr std::int64_t kMaxSearchOrder = 512;

inline SearchCertificate exact_rho(const GroupSpec& g, std::int64_t r, Objective objective,
                                   const SearchOptions& opts = {}) {
  if (g.order() > kMaxSearchOrder)
    throw domain_error("search: group order " + std::to_string(g.order()) + " exceeds the supported maximum " +
                       std::to_string(kMaxSearchOrder));
  const auto plan = plan_search(g, r, objective, opts);
  if (plan.estimated_leaves > static_cast<double>(opts.node_budget))
    throw budget_exceeded("search: estimated " + std::to_string(static_cast<std::uint64_t>(plan.estimated_leaves)) +
                              " subsets exceeds node budget " + std::to_string(opts.node_budget),
                          plan.estimated_leaves, opts.node_budget);

  const unsigned workers = opts.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.workers;
  std::vector<detail::ItemResult> results;
  if (opts.mode == SearchMode::exhaustive) {
    results = detail::run_exhaustive(g, objective, r, plan, workers);
  } else {
    const auto n = g.order();
    if (n <= 64) results = detail::run_branch_and_bound<1>(g, objective, r, plan, workers);
    else if (n <= 128) results = detail::run_branch_and_bound<2>(g, objective, r, plan, workers);
    else if (n <= 256) results = detail::run_branch_and_bound<4>(g, objective, r, plan, workers);
    else results = detail::run_branch_and_bound<8>(g, objective, r, plan, workers);
  }

  SearchCertificate cert;
  cert.group = g;
  cert.r = r;
  cert.objective = objective;
  cert.mode = opts.mode;
  cert.automorphism_pruning = plan.automorphism_pruning;
  cert.estimated_leaves = plan.estimated_leaves;
  const detail::ItemResult* best = nullptr;
  for (const auto& res : results) {
    cert.nodes += res.nodes;
    if (!res.members.empty() && (!best || res.value < best->value)) best = &res;
  }
  if (!best) throw std::logic_error("search finished without a witness");
  cert.minimum = best->value;
  cert.witness = GroupSubset::from_indices(g, best->members);
  return cert;
}

inline SearchCertificate exact_rho_pm2(const GroupSpec& g, std::int64_t m, const SearchOptions& opts = {}) {
  return exact_rho(g, m, Objective::signed2, opts);
}

}  // namespace sumdiff
