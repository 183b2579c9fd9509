#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "group.hpp"

namespace sumdiff {

/// A subset of a finite abelian group stored as a bit vector over the
/// row-major element indices.
class GroupSubset {
 public:
  static constexpr std::int64_t kMaxOrder = std::int64_t{1} << 28;

  explicit GroupSubset(GroupSpec g) : group_(std::move(g)) {
    if (group_.order() > kMaxOrder)
      throw domain_error("group of order " + std::to_string(group_.order()) + " too large for a bit-vector subset");
    words_.assign(static_cast<std::size_t>((group_.order() + 63) / 64), 0);
  }

  static GroupSubset from_indices(GroupSpec g, std::span<const std::int64_t> indices) {
    GroupSubset s(std::move(g));
    for (auto i : indices) s.insert(i);
    return s;
  }

  static GroupSubset from_indices(GroupSpec g, std::initializer_list<std::int64_t> indices) {
    return from_indices(std::move(g), std::span<const std::int64_t>(indices.begin(), indices.size()));
  }

  static GroupSubset from_elements(GroupSpec g, const std::vector<Element>& elements) {
    GroupSubset s(std::move(g));
    for (const auto& e : elements) s.insert(e);
    return s;
  }

  static GroupSubset full(GroupSpec g) {
    GroupSubset s(std::move(g));
    for (std::int64_t i = 0; i < s.group_.order(); ++i) s.insert(i);
    return s;
  }

  const GroupSpec& group() const noexcept { return group_; }
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  std::int64_t size() const noexcept {
    std::int64_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const noexcept { return size() == 0; }

  bool contains(std::int64_t index) const {
    check_index(index);
    return (words_[static_cast<std::size_t>(index >> 6)] >> (index & 63)) & 1u;
  }
  bool contains(const Element& e) const { return contains(group_.index_of(e)); }

  void insert(std::int64_t index) {
    check_index(index);
    words_[static_cast<std::size_t>(index >> 6)] |= std::uint64_t{1} << (index & 63);
  }
  void insert(const Element& e) { insert(group_.index_of(e)); }

  /// Member indices, ascending.
  std::vector<std::int64_t> indices() const {
    std::vector<std::int64_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        out.push_back(static_cast<std::int64_t>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (auto i : indices()) out.push_back(group_.element_at(i));
    return out;
  }

  bool is_subset_of(const GroupSubset& other) const {
    require_same_group(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  GroupSubset& operator|=(const GroupSubset& other) {
    require_same_group(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }

  GroupSubset& operator&=(const GroupSubset& other) {
    require_same_group(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
  }

  friend GroupSubset operator|(GroupSubset a, const GroupSubset& b) { return a |= b; }
  friend GroupSubset operator&(GroupSubset a, const GroupSubset& b) { return a &= b; }

  bool operator==(const GroupSubset& o) const { return group_ == o.group_ && words_ == o.words_; }

  /// "{(0,0),(0,1)}"
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& e : elements()) {
      if (!first) s += ',';
      first = false;
      s += e.to_string();
    }
    return s + "}";
  }

  void require_same_group(const GroupSubset& other) const {
    if (!(group_ == other.group_))
      throw group_mismatch("subsets live in different groups [" + group_.to_string() + "] and [" +
                           other.group_.to_string() + "]");
  }

 private:
  void check_index(std::int64_t index) const {
    if (index < 0 || index >= group_.order())
      throw invalid_element("index " + std::to_string(index) + " out of range for group [" + group_.to_string() + "]");
  }

  GroupSpec group_;
  std::vector<std::uint64_t> words_;
};

/// A subgroup of g of order exactly d. For each prime p with p^a || d the
/// exponent a is spread greedily over the coordinates with the largest
/// p-power parts (ties go to the later coordinate); coordinate i then
/// contributes the cyclic subgroup of Z/ni of the resulting order.
inline GroupSubset subgroup_of_order(const GroupSpec& g, std::int64_t d) {
  if (d < 1 || g.order() % d != 0)
    throw domain_error("subgroup_of_order: " + std::to_string(d) + " does not divide |G| = " +
                       std::to_string(g.order()));
  std::vector<std::int64_t> part(g.rank(), 1);
  for (auto [p, a] : factorize(d)) {
    std::vector<std::size_t> coords(g.rank());
    std::iota(coords.begin(), coords.end(), std::size_t{0});
    std::stable_sort(coords.begin(), coords.end(), [&](std::size_t x, std::size_t y) {
      const int vx = valuation(g.factors()[x], p), vy = valuation(g.factors()[y], p);
      return vx != vy ? vx > vy : x > y;
    });
    int remaining = a;
    for (auto i : coords) {
      const int take = std::min(remaining, valuation(g.factors()[i], p));
      part[i] *= ipow(p, take);
      remaining -= take;
    }
  }

  GroupSubset out(g);
  Element x = g.identity();
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == g.rank()) {
      out.insert(x);
      return;
    }
    const auto step = g.factors()[i] / part[i];
    for (std::int64_t k = 0; k < part[i]; ++k) {
      x.coords[i] = k * step;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace sumdiff
