#pragma once

// Finite abelian groups Z/n1 x ... x Z/nk with mixed-radix element indexing.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "number_theory.hpp"

namespace sumdiff {

/// Coordinates x1..xk with 0 <= xi < ni.
struct Element {
  std::vector<std::int64_t> coords;

  Element() = default;
  explicit Element(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  Element(std::initializer_list<std::int64_t> c) : coords(c) {}

  std::size_t rank() const noexcept { return coords.size(); }
  bool operator==(const Element&) const = default;

  /// "(3,1)"; the trivial group's element prints as "()".
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(coords[i]);
    }
    return s + ")";
  }
};

class GroupSpec {
 public:
  /// The trivial group.
  GroupSpec() = default;

  explicit GroupSpec(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
    constexpr std::int64_t kMaxOrder = std::int64_t{1} << 40;
    for (auto n : factors_) {
      if (n < 2) throw domain_error("group factor must be >= 2, got " + std::to_string(n));
      if (order_ > kMaxOrder / n) throw domain_error("group order too large");
      order_ *= n;
      exponent_ = std::lcm(exponent_, n);
    }
    strides_.assign(factors_.size(), 1);
    for (std::size_t i = factors_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * factors_[i];
  }

  GroupSpec(std::initializer_list<std::int64_t> factors)
      : GroupSpec(std::vector<std::int64_t>(factors)) {}

  /// Parses "4,2". Both "" and "1" denote the trivial group.
  static GroupSpec parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    if (text.empty() || text == "1") return GroupSpec{};
    std::vector<std::int64_t> factors;
    while (true) {
      auto comma = text.find(',');
      auto token = trim(text.substr(0, comma));
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw domain_error("malformed group string: '" + std::string(token) + "' is not an integer");
      factors.push_back(value);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    return GroupSpec(std::move(factors));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(factors_[i]);
    }
    return s;
  }

  const std::vector<std::int64_t>& factors() const noexcept { return factors_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  std::int64_t order() const noexcept { return order_; }
  std::int64_t exponent() const noexcept { return exponent_; }

  bool operator==(const GroupSpec& o) const { return factors_ == o.factors_; }

  bool is_valid(const Element& a) const {
    if (a.rank() != rank()) return false;
    for (std::size_t i = 0; i < rank(); ++i)
      if (a.coords[i] < 0 || a.coords[i] >= factors_[i]) return false;
    return true;
  }

  void validate(const Element& a) const {
    if (a.rank() != rank())
      throw invalid_element("element " + a.to_string() + " has " + std::to_string(a.rank()) +
                            " coordinates, group [" + to_string() + "] needs " + std::to_string(rank()));
    if (!is_valid(a))
      throw invalid_element("element " + a.to_string() + " out of range for group [" + to_string() + "]");
  }

  Element identity() const { return Element(std::vector<std::int64_t>(rank(), 0)); }

  /// Row-major mixed radix: sum xi * prod_{j>i} nj.
  std::int64_t index_of(const Element& a) const {
    validate(a);
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < rank(); ++i) idx += a.coords[i] * strides_[i];
    return idx;
  }

  Element element_at(std::int64_t index) const {
    if (index < 0 || index >= order_)
      throw invalid_element("index " + std::to_string(index) + " out of range for group [" + to_string() + "]");
    Element a{std::vector<std::int64_t>(rank())};
    for (std::size_t i = 0; i < rank(); ++i) {
      a.coords[i] = index / strides_[i];
      index %= strides_[i];
    }
    return a;
  }

  /// Index of (element at i) + (element at j), without materializing elements.
  std::int64_t add_index(std::int64_t i, std::int64_t j) const {
    std::int64_t out = 0;
    for (std::size_t k = 0; k < rank(); ++k) {
      const auto s = strides_[k];
      auto c = i / s + j / s;
      if (c >= factors_[k]) c -= factors_[k];
      out += c * s;
      i %= s;
      j %= s;
    }
    return out;
  }

  std::int64_t neg_index(std::int64_t i) const {
    std::int64_t out = 0;
    for (std::size_t k = 0; k < rank(); ++k) {
      const auto s = strides_[k];
      const auto c = i / s;
      out += (c == 0 ? 0 : factors_[k] - c) * s;
      i %= s;
    }
    return out;
  }

  std::int64_t sub_index(std::int64_t i, std::int64_t j) const { return add_index(i, neg_index(j)); }

 private:
  std::vector<std::int64_t> factors_;
  std::vector<std::int64_t> strides_;
  std::int64_t order_ = 1;
  std::int64_t exponent_ = 1;
};

inline Element add(const GroupSpec& g, const Element& a, const Element& b) {
  g.validate(a);
  g.validate(b);
  Element c = a;
  for (std::size_t i = 0; i < g.rank(); ++i) c.coords[i] = (a.coords[i] + b.coords[i]) % g.factors()[i];
  return c;
}

inline Element neg(const GroupSpec& g, const Element& a) {
  g.validate(a);
  Element c = a;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const auto n = g.factors()[i];
    c.coords[i] = (n - a.coords[i]) % n;
  }
  return c;
}

inline Element sub(const GroupSpec& g, const Element& a, const Element& b) { return add(g, a, neg(g, b)); }

/// { d1*d2 : d1 | N/e, d2 | e, d1*e >= r }, ascending and deduplicated.
inline std::vector<std::int64_t> restricted_divisor_set(std::int64_t order, std::int64_t exponent, std::int64_t r) {
  if (order < 1 || exponent < 1 || order % exponent != 0)
    throw domain_error("restricted_divisor_set: exponent " + std::to_string(exponent) + " must divide order " +
                       std::to_string(order));
  if (r < 1 || r > order)
    throw domain_error("restricted_divisor_set: r=" + std::to_string(r) + " outside [1, " + std::to_string(order) + "]");
  std::vector<std::int64_t> out;
  for (auto d1 : divisors(order / exponent)) {
    if (d1 * exponent < r) continue;
    for (auto d2 : divisors(exponent)) out.push_back(d1 * d2);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const auto q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return ((old_s % m) + m) % m;
}

/// Solve x = r1 mod m1, x = r2 mod m2 with coprime moduli; result mod m1*m2.
inline std::int64_t crt_combine(std::int64_t r1, std::int64_t m1, std::int64_t r2, std::int64_t m2) {
  if (m2 == 1) return r1 % m1;
  if (m1 == 1) return r2 % m2;
  const auto t = ((r2 - r1 % m2) % m2 + m2) % m2 * mod_inverse(m1 % m2, m2) % m2;
  return r1 + m1 * t;
}

}  // namespace detail

/// Explicit isomorphism between a group and its invariant-factor form
/// Z/d1 x ... x Z/dm with d1 | d2 | ... | dm (dm = exponent).
class InvariantIsomorphism {
 public:
  explicit InvariantIsomorphism(GroupSpec g) : source_(std::move(g)) {
    std::vector<std::int64_t> primes;
    for (auto n : source_.factors())
      for (auto [p, a] : factorize(n)) primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    std::vector<std::vector<Component>> per_prime;
    std::size_t width = 0;
    for (auto p : primes) {
      std::vector<Component> comps;
      for (std::size_t i = 0; i < source_.rank(); ++i) {
        const int c = valuation(source_.factors()[i], p);
        if (c > 0) comps.push_back({i, 0, ipow(p, c)});
      }
      std::stable_sort(comps.begin(), comps.end(),
                       [](const Component& a, const Component& b) { return a.modulus > b.modulus; });
      width = std::max(width, comps.size());
      per_prime.push_back(std::move(comps));
    }

    std::vector<std::int64_t> form(width, 1);
    for (auto& comps : per_prime)
      for (std::size_t t = 0; t < comps.size(); ++t) {
        comps[t].target = width - 1 - t;
        form[comps[t].target] *= comps[t].modulus;
        components_.push_back(comps[t]);
      }
    form_ = GroupSpec(std::move(form));
  }

  const GroupSpec& source() const noexcept { return source_; }
  const GroupSpec& form() const noexcept { return form_; }

  Element to_form(const Element& x) const {
    source_.validate(x);
    std::vector<std::int64_t> value(form_.rank(), 0), modulus(form_.rank(), 1);
    for (const auto& c : components_) {
      const auto j = c.target;
      value[j] = detail::crt_combine(value[j], modulus[j], x.coords[c.source] % c.modulus, c.modulus);
      modulus[j] *= c.modulus;
    }
    return Element(std::move(value));
  }

  Element from_form(const Element& y) const {
    form_.validate(y);
    std::vector<std::int64_t> value(source_.rank(), 0), modulus(source_.rank(), 1);
    for (const auto& c : components_) {
      const auto i = c.source;
      value[i] = detail::crt_combine(value[i], modulus[i], y.coords[c.target] % c.modulus, c.modulus);
      modulus[i] *= c.modulus;
    }
    return Element(std::move(value));
  }

 private:
  struct Component {
    std::size_t source;  // coordinate in source_
    std::size_t target;  // coordinate in form_
    std::int64_t modulus;  // prime power p^c
  };

  GroupSpec source_;
  GroupSpec form_;
  std::vector<Component> components_;
};

inline GroupSpec invariant_factors(const GroupSpec& g) { return InvariantIsomorphism(g).form(); }

inline bool is_cyclic(const GroupSpec& g) { return invariant_factors(g).rank() <= 1; }

/// p when g = (Z/p)^d with d >= 1 in its given coordinates.
inline std::optional<std::int64_t> elementary_prime(const GroupSpec& g) {
  if (g.rank() == 0) return std::nullopt;
  const auto p = g.factors().front();
  if (!is_prime(p)) return std::nullopt;
  for (auto n : g.factors())
    if (n != p) return std::nullopt;
  return p;
}

/// One representative per isomorphism class of abelian groups of order n,
/// in primary form: primes ascending, each prime's powers descending.
inline std::vector<GroupSpec> enumerate_abelian_groups(std::int64_t n) {
  if (n < 1) throw domain_error("enumerate_abelian_groups: order must be positive");
  std::vector<std::vector<std::int64_t>> acc{{}};
  for (auto [p, a] : factorize(n)) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& prefix : acc)
      for (const auto& part : integer_partitions(a)) {
        auto f = prefix;
        for (int k : part) f.push_back(ipow(p, k));
        next.push_back(std::move(f));
      }
    acc = std::move(next);
  }
  std::vector<GroupSpec> out;
  out.reserve(acc.size());
  for (auto& f : acc) out.emplace_back(std::move(f));
  return out;
}

}  // namespace sumdiff
