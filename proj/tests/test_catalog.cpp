#include "invsem/catalog.hpp"

#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "invsem/errors.hpp"
#include "invsem/iso.hpp"

using namespace invsem;
using invsem::testing::brandt5;
using invsem::testing::c2;
using invsem::testing::two_chain;

namespace {

// Independent oracle: enumerate every inverse-semigroup table of the given
// order by direct backtracking over cells with incremental associativity
// checks, then count canonical forms.
std::set<std::vector<int>> direct_inverse_tables(int n) {
  std::set<std::vector<int>> canon;
  std::vector<int> t(static_cast<std::size_t>(n) * n, -1);
  auto assigned = [&](int a, int b) { return t[a * n + b] >= 0; };
  // all associativity triples whose four lookups are available
  auto consistent = [&](int i, int j) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!assigned(a, b)) continue;
        int ab = t[a * n + b];
        for (int c = 0; c < n; ++c) {
          if (!assigned(b, c)) continue;
          int bc = t[b * n + c];
          if (!assigned(ab, c) || !assigned(a, bc)) continue;
          bool touches = (a == i && b == j) || (b == i && c == j) ||
                         (ab == i && c == j) || (a == i && bc == j);
          if (touches && t[ab * n + c] != t[a * n + bc]) return false;
        }
      }
    return true;
  };
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == n * n) {
      try {
        FiniteInverseSemigroup::from_table(n, t);
      } catch (const InvalidInput&) {
        return;
      }
      canon.insert(canonical_table(n, t));
      return;
    }
    int i = cell / n, j = cell % n;
    for (int v = 0; v < n; ++v) {
      t[cell] = v;
      if (consistent(i, j)) self(self, cell + 1);
    }
    t[cell] = -1;
  };
  rec(rec, 0);
  return canon;
}

}  // namespace

TEST_CASE("catalog counts match direct table enumeration up to order 4") {
  auto catalog = build_catalog(4);
  auto counts = catalog_counts(catalog);
  for (int n = 1; n <= 4; ++n) {
    auto direct = direct_inverse_tables(n);
    CHECK_MESSAGE(static_cast<std::size_t>(counts[n]) == direct.size(),
                  "order ", n);
    // and the canonical tables themselves coincide
    std::set<std::vector<int>> from_catalog;
    for (const auto& m : catalog.members)
      if (m.order() == n) from_catalog.insert(m.table());
    CHECK(from_catalog == direct);
  }
}

TEST_CASE("the order-2 catalog is the point, the chain and the group") {
  auto catalog = build_catalog(2);
  REQUIRE(catalog.members.size() == 3);
  CHECK(catalog.members[0].order() == 1);
  bool found_chain = false, found_group = false;
  for (const auto& m : catalog.members) {
    if (m.order() != 2) continue;
    if (find_isomorphism(m, two_chain())) found_chain = true;
    if (find_isomorphism(m, c2())) found_group = true;
  }
  CHECK(found_chain);
  CHECK(found_group);
}

TEST_CASE("the order-1 catalog has a single member") {
  CHECK(build_catalog(1).members.size() == 1);
}

TEST_CASE("catalog members are canonical, validated and non-isomorphic") {
  auto catalog = build_catalog(3);
  std::set<std::pair<int, std::vector<int>>> keys;
  for (const auto& m : catalog.members) {
    CHECK(m.table() == canonical_table(m.order(), m.table()));
    keys.emplace(m.order(), m.table());
  }
  CHECK(keys.size() == catalog.members.size());
  for (std::size_t i = 0; i < catalog.members.size(); ++i)
    for (std::size_t j = i + 1; j < catalog.members.size(); ++j)
      CHECK_FALSE(
          find_isomorphism(catalog.members[i], catalog.members[j]).has_value());
}

TEST_CASE("catalog respects its configured bound") {
  Limits limits;
  limits.catalog_bound = 3;
  CHECK_THROWS_AS(build_catalog(4, limits), CapExceeded);
}

TEST_CASE("semilattice enumeration counts by direct search") {
  auto slats = enumerate_semilattices(4);
  int by_order[5] = {0, 0, 0, 0, 0};
  for (const auto& e : slats) ++by_order[e.order()];
  CHECK(by_order[1] == 1);
  CHECK(by_order[2] == 1);
  CHECK(by_order[3] == 2);  // the 3-chain and the vee
  // cross-check order 4 against the catalog's idempotent members
  auto catalog = build_catalog(4);
  int idempotent_members = 0;
  for (const auto& m : catalog.members)
    if (m.order() == 4 &&
        m.idempotents().size() == static_cast<std::size_t>(m.order()))
      ++idempotent_members;
  CHECK(by_order[4] == idempotent_members);
}

TEST_CASE("semilattices from the enumeration are canonical and distinct") {
  auto slats = enumerate_semilattices(4);
  std::set<std::pair<int, std::vector<int>>> keys;
  for (const auto& e : slats) {
    CHECK(e.table() == canonical_table(e.order(), e.table()));
    keys.emplace(e.order(), e.table());
  }
  CHECK(keys.size() == slats.size());
}

TEST_CASE("the order-5 catalog contains the Brandt semigroup") {
  auto catalog = build_catalog(5);
  bool found = false;
  for (const auto& m : catalog.members)
    if (m.order() == 5 && find_isomorphism(m, brandt5())) found = true;
  CHECK(found);
}
