#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "sumdiff/formulas.hpp"
#include "sumdiff/setops.hpp"

using namespace sumdiff;

namespace {

using Coords = std::vector<std::int64_t>;

// Naive set arithmetic on coordinate tuples, independent of the index tables.
std::set<Coords> naive_combine(const GroupSpec& g, const GroupSubset& a, const GroupSubset& b, int sign_b) {
  std::set<Coords> out;
  for (const auto& x : a.elements())
    for (const auto& y : b.elements()) {
      Coords z(g.rank());
      for (std::size_t i = 0; i < g.rank(); ++i) {
        const auto n = g.factors()[i];
        z[i] = ((x.coords[i] + sign_b * y.coords[i]) % n + n) % n;
      }
      out.insert(z);
    }
  return out;
}

std::set<Coords> naive_signed(const GroupSpec& g, const GroupSubset& a) {
  std::set<Coords> out;
  const auto el = a.elements();
  auto combo = [&](const Element& x, int sx, const Element& y, int sy) {
    Coords z(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) {
      const auto n = g.factors()[i];
      z[i] = ((sx * x.coords[i] + sy * y.coords[i]) % n + n) % n;
    }
    out.insert(z);
  };
  for (std::size_t i = 0; i < el.size(); ++i) {
    combo(el[i], 2, el[i], 0);
    combo(el[i], -2, el[i], 0);
    for (std::size_t j = 0; j < el.size(); ++j)
      if (i != j)
        for (int s1 : {1, -1})
          for (int s2 : {1, -1}) combo(el[i], s1, el[j], s2);
  }
  return out;
}

std::set<Coords> as_coords(const GroupSubset& s) {
  std::set<Coords> out;
  for (const auto& e : s.elements()) out.insert(e.coords);
  return out;
}

GroupSubset from_mask(const GroupSpec& g, std::uint64_t mask) {
  GroupSubset s(g);
  for (std::int64_t i = 0; i < g.order(); ++i)
    if ((mask >> i) & 1u) s.insert(i);
  return s;
}

std::vector<GroupSpec> groups_up_to(std::int64_t n) {
  std::vector<GroupSpec> out;
  for (std::int64_t k = 1; k <= n; ++k)
    for (const auto& g : enumerate_abelian_groups(k)) out.push_back(g);
  out.push_back(GroupSpec{2, 4});
  out.push_back(GroupSpec{3, 2, 2});
  return out;
}

}  // namespace

TEST_CASE("sumset examples", "[setops]") {
  const GroupSpec z5{5};
  const auto a = GroupSubset::from_indices(z5, {1, 2});
  CHECK(sumset(a, a).indices() == std::vector<std::int64_t>{2, 3, 4});

  const GroupSpec g33{3, 3};
  const auto lex4 = GroupSubset::from_indices(g33, {0, 1, 2, 3});
  CHECK(sumset(lex4, lex4).size() == 7);
  CHECK(difference_set(lex4, lex4).size() == 9);

  const auto b = GroupSubset::from_indices(g33, {2, 5, 7});
  CHECK(sumset(GroupSubset::from_indices(g33, {0}), b) == b);

  CHECK(sumset(GroupSubset(g33), b).empty());
  CHECK_THROWS_AS(sumset(a, b), group_mismatch);
}

TEST_CASE("difference set examples", "[setops]") {
  const GroupSpec z4{4};
  const auto a = GroupSubset::from_indices(z4, {0, 1, 2});
  CHECK(difference_set(a, a) == GroupSubset::full(z4));
  CHECK(difference_set(GroupSubset::from_indices(z4, {3}), GroupSubset::from_indices(z4, {3})).indices() ==
        std::vector<std::int64_t>{0});
}

TEST_CASE("negation and translation examples", "[setops]") {
  CHECK(negate_set(GroupSubset::from_indices(GroupSpec{6}, {1, 2})).indices() == std::vector<std::int64_t>{4, 5});
  const GroupSpec v4{2, 2};
  for (std::uint64_t m = 0; m < 16; ++m) CHECK(negate_set(from_mask(v4, m)) == from_mask(v4, m));
  CHECK(negate_set(GroupSubset(GroupSpec{7})).empty());

  CHECK(translate(GroupSubset::from_indices(GroupSpec{4}, {0, 1}), Element{2}).indices() ==
        std::vector<std::int64_t>{2, 3});
  const GroupSpec g33{3, 3};
  const auto a = GroupSubset::from_elements(g33, {{0, 0}, {1, 1}});
  CHECK(translate(a, g33.identity()) == a);
  CHECK(translate(a, Element{2, 2}) == GroupSubset::from_elements(g33, {{2, 2}, {0, 0}}));
}

TEST_CASE("signed sumset examples", "[setops]") {
  CHECK(signed_sumset_2(GroupSubset::from_indices(GroupSpec{5}, {1, 2})).indices() ==
        std::vector<std::int64_t>{1, 2, 3, 4});
  CHECK(signed_sumset_2(GroupSubset::from_indices(GroupSpec{7}, {0})).indices() == std::vector<std::int64_t>{0});
  CHECK_THROWS_AS(signed_sumset_2(GroupSubset(GroupSpec{7})), domain_error);

  // m = 6 in (Z/5)^2: a punctured line plus a symmetric pair off it gives
  // |2±A| = 15. Using the origin in place of (4,0) gives 17.
  const GroupSpec g55{5, 5};
  const auto a = GroupSubset::from_elements(g55, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 0}, {4, 0}});
  CHECK(signed_sumset_2(a).size() == 15);
  const auto line = GroupSubset::from_elements(g55, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 0}});
  CHECK(signed_sumset_2(line).size() == 17);

  // Unlike A-A and A+A, 2±A changes size under translation.
  const auto z5 = GroupSubset::from_indices(GroupSpec{5}, {0, 1});
  CHECK(signed_sumset_2(z5).size() == 5);
  CHECK(signed_sumset_2(translate(z5, Element{2})).size() == 3);
}

TEST_CASE("set operations agree with naive coordinate arithmetic", "[setops][property]") {
  for (const auto& g : groups_up_to(12)) {
    const auto n = g.order();
    for (std::uint64_t ma = 0; ma < (std::uint64_t{1} << n); ma += 1 + (n > 8 ? 37 : 0)) {
      const auto a = from_mask(g, ma);
      const auto b = from_mask(g, (ma * 2654435761u + 17) & ((std::uint64_t{1} << n) - 1));
      REQUIRE(as_coords(sumset(a, b)) == naive_combine(g, a, b, 1));
      REQUIRE(as_coords(difference_set(a, b)) == naive_combine(g, a, b, -1));
      if (!a.empty()) REQUIRE(as_coords(signed_sumset_2(a)) == naive_signed(g, a));
    }
  }
}

TEST_CASE("symmetry, translation invariance and the mu lower bound", "[setops][property]") {
  for (std::int64_t order = 1; order <= 16; ++order)
    for (const auto& g : enumerate_abelian_groups(order)) {
      const auto n = g.order();
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        const auto a = from_mask(g, m);
        const auto d = difference_set(a, a);
        REQUIRE(d == negate_set(d));
        REQUIRE(d.contains(0));
        REQUIRE(d.size() >= mu(n, a.size(), a.size()));
        REQUIRE(sumset(a, a).size() >= mu(n, a.size(), a.size()));
        if (n <= 12) {
          const auto s = signed_sumset_2(a);
          REQUIRE(s == negate_set(s));
          REQUIRE(negate_set(negate_set(a)) == a);
          for (std::int64_t t = 0; t < n; ++t) {
            const auto at = translate(a, g.element_at(t));
            REQUIRE(difference_set(at, at).size() == d.size());
            REQUIRE(sumset(at, at).size() == sumset(a, a).size());
          }
        }
      }
    }
}

TEST_CASE("signed sumset bound from difference-set minima", "[setops][property]") {
  // |2±A| >= min{rho-(m), rho-(2m) - 1} for 1 <= |A| <= N/2, with rho- taken
  // from a brute-force scan of every subset.
  for (std::int64_t order = 2; order <= 12; ++order)
    for (const auto& g : enumerate_abelian_groups(order)) {
      const auto n = g.order();
      std::map<std::int64_t, std::int64_t> rho_minus;
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        const auto a = from_mask(g, m);
        const auto v = difference_set(a, a).size();
        auto [it, fresh] = rho_minus.try_emplace(a.size(), v);
        if (!fresh) it->second = std::min(it->second, v);
      }
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        const auto a = from_mask(g, m);
        const auto k = a.size();
        if (2 * k > n) continue;
        INFO("group [" << g.to_string() << "] A=" << a.to_string());
        REQUIRE(signed_sumset_2(a).size() >= std::min(rho_minus[k], rho_minus[2 * k] - 1));
      }
    }
}
