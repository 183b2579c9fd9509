#include <catch_amalgamated.hpp>

#include <map>
#include <numeric>
#include <set>

#include "sumdiff/subset.hpp"
#include "sumdiff/witness_io.hpp"

using namespace sumdiff;

namespace {

// Every GroupSpec of order <= max_order whose factors are >= 2, as ordered
// factor lists (so [2,4] and [4,2] both appear).
std::vector<GroupSpec> all_factorizations(std::int64_t max_order) {
  std::vector<GroupSpec> out{GroupSpec{}};
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::int64_t remaining) -> void {
    for (std::int64_t f = 2; f <= remaining; ++f) {
      cur.push_back(f);
      out.emplace_back(cur);
      self(self, remaining / f);
      cur.pop_back();
    }
  };
  rec(rec, max_order);
  return out;
}

std::int64_t element_order(const GroupSpec& g, const Element& x) {
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const auto n = g.factors()[i];
    ord = std::lcm(ord, n / std::gcd(n, x.coords[i]));
  }
  return ord;
}

// Histogram of element orders; two finite abelian groups are isomorphic
// exactly when these agree.
std::map<std::int64_t, std::int64_t> order_histogram(const GroupSpec& g) {
  std::map<std::int64_t, std::int64_t> h;
  for (std::int64_t i = 0; i < g.order(); ++i) ++h[element_order(g, g.element_at(i))];
  return h;
}

std::int64_t partition_count(int n) {
  std::vector<std::int64_t> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
  return ways[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("divisors and factorization", "[number]") {
  CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<std::int64_t>{1});
  CHECK(divisors(9) == std::vector<std::int64_t>{1, 3, 9});
  CHECK_THROWS_AS(divisors(0), domain_error);

  for (std::int64_t n = 1; n <= 300; ++n) {
    std::vector<std::int64_t> naive;
    for (std::int64_t d = 1; d <= n; ++d)
      if (n % d == 0) naive.push_back(d);
    REQUIRE(divisors(n) == naive);

    std::int64_t back = 1;
    for (auto [p, a] : factorize(n)) {
      REQUIRE(is_prime(p));
      back *= ipow(p, a);
    }
    REQUIRE(back == n);
  }
}

TEST_CASE("integer partitions", "[number]") {
  CHECK(integer_partitions(3) == std::vector<std::vector<int>>{{3}, {2, 1}, {1, 1, 1}});
  for (int n = 0; n <= 12; ++n) CHECK(static_cast<std::int64_t>(integer_partitions(n).size()) == partition_count(n));
}

TEST_CASE("group string parsing", "[group]") {
  CHECK(GroupSpec::parse("4,2").factors() == std::vector<std::int64_t>{4, 2});
  CHECK(GroupSpec::parse(" 3 , 3 ").to_string() == "3,3");
  CHECK(GroupSpec::parse("").order() == 1);
  CHECK(GroupSpec::parse("1").rank() == 0);
  CHECK(GroupSpec::parse("1").exponent() == 1);
  CHECK_THROWS_AS(GroupSpec::parse("3,x"), domain_error);
  CHECK_THROWS_AS(GroupSpec::parse("3,,3"), domain_error);
  CHECK_THROWS_AS(GroupSpec::parse("0"), domain_error);
  CHECK_THROWS_AS(GroupSpec::parse("3,1"), domain_error);
  CHECK_THROWS_AS(GroupSpec::parse("-4"), domain_error);
}

TEST_CASE("element arithmetic examples", "[group]") {
  const GroupSpec g42{4, 2};
  CHECK(add(g42, {3, 1}, {2, 1}) == Element{1, 0});
  CHECK(add(GroupSpec{5}, {0}, {4}) == Element{4});
  CHECK(add(GroupSpec{}, Element{}, Element{}) == Element{});
  CHECK(neg(GroupSpec{6}, {2}) == Element{4});
  CHECK(neg(GroupSpec{3, 3}, {0, 0}) == Element{0, 0});
  CHECK(neg(GroupSpec{2, 2}, {1, 1}) == Element{1, 1});
  CHECK(Element{3, 1}.to_string() == "(3,1)");

  CHECK_THROWS_AS(add(g42, {3}, {2, 1}), invalid_element);
  CHECK_THROWS_AS(neg(g42, {4, 0}), invalid_element);
  CHECK_THROWS_AS(g42.element_at(8), invalid_element);
}

TEST_CASE("row-major index encoding", "[group]") {
  const GroupSpec g{3, 4, 5};
  CHECK(g.index_of({1, 2, 3}) == 1 * 20 + 2 * 5 + 3);
  for (std::int64_t i = 0; i < g.order(); ++i) REQUIRE(g.index_of(g.element_at(i)) == i);
}

TEST_CASE("group axioms hold exhaustively up to order 64", "[group][property]") {
  for (const auto& g : all_factorizations(64)) {
    const auto n = g.order();
    const auto zero = g.identity();
    for (std::int64_t i = 0; i < n; ++i) {
      const auto a = g.element_at(i);
      REQUIRE(add(g, a, zero) == a);
      REQUIRE(add(g, a, neg(g, a)) == zero);
      REQUIRE(g.neg_index(i) == g.index_of(neg(g, a)));
      for (std::int64_t j = 0; j < n; ++j) {
        const auto b = g.element_at(j);
        const auto ab = add(g, a, b);
        REQUIRE(ab == add(g, b, a));
        REQUIRE(g.add_index(i, j) == g.index_of(ab));
        REQUIRE(g.sub_index(i, j) == g.index_of(sub(g, a, b)));
        if (n <= 16)
          for (std::int64_t k = 0; k < n; ++k) {
            const auto c = g.element_at(k);
            REQUIRE(add(g, add(g, a, b), c) == add(g, a, add(g, b, c)));
          }
      }
    }
  }
}

TEST_CASE("restricted divisor sets", "[group]") {
  CHECK(restricted_divisor_set(9, 3, 4) == std::vector<std::int64_t>{3, 9});
  CHECK(restricted_divisor_set(9, 3, 2) == std::vector<std::int64_t>{1, 3, 9});
  CHECK_THROWS_AS(restricted_divisor_set(9, 2, 2), domain_error);
  CHECK_THROWS_AS(restricted_divisor_set(9, 3, 10), domain_error);
  CHECK_THROWS_AS(restricted_divisor_set(9, 3, 0), domain_error);

  SECTION("cyclic groups keep every divisor") {
    for (std::int64_t n = 1; n <= 120; ++n)
      for (std::int64_t r = 1; r <= n; ++r) REQUIRE(restricted_divisor_set(n, n, r) == divisors(n));
  }
  SECTION("elementary abelian groups keep the powers p^t..p^d") {
    for (std::int64_t p : {2, 3, 5})
      for (int d = 1; d <= 4; ++d) {
        const auto n = ipow(p, d);
        for (std::int64_t r = 2; r <= n; ++r) {
          int t = 0;
          while (ipow(p, t + 1) < r) ++t;
          std::vector<std::int64_t> expect;
          for (int k = t; k <= d; ++k) expect.push_back(ipow(p, k));
          REQUIRE(restricted_divisor_set(n, p, r) == expect);
        }
      }
  }
}

TEST_CASE("invariant factors", "[group]") {
  CHECK(invariant_factors(GroupSpec{4, 3}) == GroupSpec{12});
  CHECK(invariant_factors(GroupSpec{2, 2, 3}) == GroupSpec{2, 6});
  // Listed with d1 | d2 | d3, so [8,4,2] comes back as [2,4,8].
  CHECK(invariant_factors(GroupSpec{8, 4, 2}) == GroupSpec{2, 4, 8});
  CHECK(invariant_factors(GroupSpec{}) == GroupSpec{});
  CHECK(is_cyclic(GroupSpec{4, 3}));
  CHECK_FALSE(is_cyclic(GroupSpec{2, 6}));

  for (const auto& g : all_factorizations(72)) {
    const InvariantIsomorphism iso(g);
    const auto& f = iso.form();
    REQUIRE(f.order() == g.order());
    REQUIRE(f.exponent() == g.exponent());
    if (f.rank() > 0) REQUIRE(f.factors().back() == g.exponent());
    for (std::size_t i = 1; i < f.rank(); ++i) REQUIRE(f.factors()[i] % f.factors()[i - 1] == 0);
    REQUIRE(order_histogram(f) == order_histogram(g));

    // to_form is a bijective homomorphism with inverse from_form.
    std::set<std::int64_t> image;
    for (std::int64_t i = 0; i < g.order(); ++i) {
      const auto x = g.element_at(i);
      const auto y = iso.to_form(x);
      image.insert(f.index_of(y));
      REQUIRE(iso.from_form(y) == x);
      const auto z = g.element_at((i * 7 + 3) % g.order());
      REQUIRE(iso.to_form(add(g, x, z)) == add(f, y, iso.to_form(z)));
    }
    REQUIRE(static_cast<std::int64_t>(image.size()) == g.order());
  }
}

TEST_CASE("subgroup of prescribed order", "[group]") {
  CHECK(subgroup_of_order(GroupSpec{12}, 3).indices() == std::vector<std::int64_t>{0, 4, 8});
  CHECK(subgroup_of_order(GroupSpec{3, 3}, 3) ==
        GroupSubset::from_elements(GroupSpec{3, 3}, {{0, 0}, {0, 1}, {0, 2}}));
  CHECK(subgroup_of_order(GroupSpec{4, 2}, 1).indices() == std::vector<std::int64_t>{0});
  CHECK_THROWS_AS(subgroup_of_order(GroupSpec{12}, 5), domain_error);

  for (const auto& g : all_factorizations(64)) {
    for (auto d : divisors(g.order())) {
      const auto h = subgroup_of_order(g, d);
      REQUIRE(h.size() == d);
      REQUIRE(h.contains(0));
      const auto idx = h.indices();
      for (auto a : idx) {
        REQUIRE(h.contains(g.neg_index(a)));
        for (auto b : idx) REQUIRE(h.contains(g.add_index(a, b)));
      }
    }
  }
}

TEST_CASE("abelian group enumeration", "[group]") {
  const auto g8 = enumerate_abelian_groups(8);
  REQUIRE(g8.size() == 3);
  CHECK(g8[0] == GroupSpec{8});
  CHECK(g8[1] == GroupSpec{4, 2});
  CHECK(g8[2] == GroupSpec{2, 2, 2});
  const auto g12 = enumerate_abelian_groups(12);
  REQUIRE(g12.size() == 2);
  CHECK(g12[0] == GroupSpec{4, 3});
  CHECK(g12[1] == GroupSpec{2, 2, 3});
  const auto g1 = enumerate_abelian_groups(1);
  REQUIRE(g1.size() == 1);
  CHECK(g1[0].rank() == 0);
  CHECK_THROWS_AS(enumerate_abelian_groups(0), domain_error);

  for (std::int64_t n = 1; n <= 256; ++n) {
    const auto groups = enumerate_abelian_groups(n);
    std::int64_t expect = 1;
    for (auto [p, a] : factorize(n)) expect *= partition_count(a);
    REQUIRE(static_cast<std::int64_t>(groups.size()) == expect);
    if (n <= 64) {
      std::set<std::map<std::int64_t, std::int64_t>> classes;
      for (const auto& g : groups) {
        REQUIRE(g.order() == n);
        classes.insert(order_histogram(g));
      }
      REQUIRE(static_cast<std::int64_t>(classes.size()) == expect);
    }
  }
}

TEST_CASE("subset basics", "[subset]") {
  const GroupSpec g{3, 3};
  auto a = GroupSubset::from_elements(g, {{1, 1}, {0, 0}});
  CHECK(a.size() == 2);
  CHECK(a.indices() == std::vector<std::int64_t>{0, 4});
  CHECK(a.to_string() == "{(0,0),(1,1)}");
  CHECK(a.contains(Element{1, 1}));
  CHECK_FALSE(a.contains(Element{2, 1}));
  CHECK(a.is_subset_of(GroupSubset::full(g)));
  CHECK(GroupSubset(g).empty());
  CHECK_THROWS_AS(a.insert(9), invalid_element);

  const auto b = GroupSubset::from_indices(GroupSpec{9}, {0, 4});
  CHECK_THROWS_AS(a |= b, group_mismatch);

  const GroupSpec big{130};
  auto c = GroupSubset::from_indices(big, {0, 63, 64, 129});
  CHECK(c.size() == 4);
  CHECK(c.indices() == std::vector<std::int64_t>{0, 63, 64, 129});
}

TEST_CASE("witness json round trip", "[io]") {
  const GroupSpec g{4, 2};
  const auto a = GroupSubset::from_elements(g, {{3, 1}, {0, 0}, {2, 1}});
  const auto text = witness_to_string(a);
  CHECK(text == "{\"group\":\"4,2\",\"elements\":[[0,0],[2,1],[3,1]]}\n");
  CHECK(witness_from_string(text) == a);

  const auto trivial = GroupSubset::full(GroupSpec{});
  CHECK(witness_from_string(witness_to_string(trivial)) == trivial);

  CHECK_THROWS_AS(witness_from_string("{\"group\":\"4,2\"}"), domain_error);
  CHECK_THROWS_AS(witness_from_string("{\"group\":\"4,2\",\"elements\":[[4,0]]}"), domain_error);
  CHECK_THROWS_AS(witness_from_string("{\"group\":\"4,2\",\"elements\":[[1]]}"), domain_error);
  CHECK_THROWS_AS(witness_from_string("not json"), domain_error);
}
