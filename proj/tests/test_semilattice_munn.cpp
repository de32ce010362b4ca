#include "invsem/munn.hpp"

#include <map>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "invsem/catalog.hpp"
#include "invsem/errors.hpp"
#include "invsem/iso.hpp"

using namespace invsem;
using invsem::testing::brandt5;
using invsem::testing::c2;

namespace {

// elements: 0 = bottom, 1 = f0, 2 = f1, 3 = f2, 4 = e0, 5 = e1
Semilattice figure1() {
  return Semilattice::from_covers(
      6, {{1, 4}, {2, 4}, {2, 5}, {3, 5}, {0, 1}, {0, 2}, {0, 3}});
}

}  // namespace

TEST_CASE("two-chain semilattice from covers") {
  auto e = Semilattice::from_covers(2, {{0, 1}});
  CHECK(e.meet(0, 1) == 0);
  CHECK(e.leq(0, 1));
  CHECK_FALSE(e.leq(1, 0));
}

TEST_CASE("the six-element semilattice loads from its cover diagram") {
  auto e = figure1();
  CHECK(e.order() == 6);
  CHECK(e.meet(4, 5) == 2);  // e0 ^ e1 = f1
  CHECK(e.meet(1, 2) == 0);
  CHECK(e.hasse_covers().size() == 7);
}

TEST_CASE("an antichain with no bottom is rejected") {
  CHECK_THROWS_WITH_AS(Semilattice::from_covers(2, {}),
                       doctest::Contains("no meet"), InvalidInput);
}

TEST_CASE("principal ideals of the six-element semilattice") {
  auto e = figure1();
  CHECK(e.principal_ideal(4) == std::vector<int>{0, 1, 2, 4});  // diamond
  CHECK(e.principal_ideal(2) == std::vector<int>{0, 2});        // 2-chain
  CHECK(e.principal_ideal(0) == std::vector<int>{0});
}

TEST_CASE("ideal isomorphism counts in the six-element semilattice") {
  auto e = figure1();
  CHECK(ideal_isomorphisms(e, 4, 5).size() == 2);  // diamonds swap their atoms
  CHECK(ideal_isomorphisms(e, 4, 1).empty());      // sizes 4 vs 2
  CHECK(ideal_isomorphisms(e, 2, 2).size() == 1);  // a chain is rigid
}

TEST_CASE("Munn semigroup of a two-chain is the chain itself") {
  auto e = Semilattice::from_covers(2, {{0, 1}});
  auto te = munn_semigroup(e);
  CHECK(te.sg.order() == 2);
  REQUIRE(find_isomorphism(te.sg, e.as_semigroup()).has_value());
}

TEST_CASE("Munn semigroup of a point") {
  auto te = munn_semigroup(Semilattice::from_meet_table(1, {0}));
  CHECK(te.sg.order() == 1);
}

TEST_CASE("Munn semigroup of the six-element semilattice has 18 elements") {
  auto te = munn_semigroup(figure1());
  CHECK(te.sg.order() == 18);
  CHECK(te.sg.idempotents().size() == 6);

  // three D-classes, totally ordered: sizes 1, 9, 8
  const auto& d = te.sg.green(GreenRelation::D);
  REQUIRE(d.blocks.size() == 3);
  std::multiset<std::size_t> sizes;
  for (const auto& blk : d.blocks) sizes.insert(blk.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 9, 8});
  const auto& j = te.sg.green(GreenRelation::J);
  int chains = 0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      if (j.block_leq[a][b]) ++chains;
  CHECK(chains == 6);  // 3 reflexive + 3 strict pairs: a total order

  // the top D-class splits into four H-classes of size 2
  int top_block = -1;
  for (int b = 0; b < 3; ++b)
    if (d.blocks[b].size() == 8) top_block = b;
  REQUIRE(top_block >= 0);
  const auto& h = te.sg.green(GreenRelation::H);
  std::map<int, int> hsizes;
  for (int x : d.blocks[top_block]) ++hsizes[h.block_of[x]];
  CHECK(hsizes.size() == 4);
  for (auto [blk, sz] : hsizes) CHECK(sz == 2);

  CHECK_FALSE(te.sg.is_combinatorial());
  CHECK(te.sg.is_fundamental());
  CHECK_FALSE(te.sg.has_nontrivial_isolated_subgroups());
}

TEST_CASE("the bottom class united with the middle class is combinatorial") {
  auto te = munn_semigroup(figure1());
  const auto& d = te.sg.green(GreenRelation::D);
  Bitset members(te.sg.order());
  for (const auto& blk : d.blocks)
    if (blk.size() == 1 || blk.size() == 9)
      for (int x : blk) members.set(x);
  auto sub = te.sg.subsemigroup(members);
  CHECK(sub.order() == 10);
  CHECK(sub.is_combinatorial());
}

TEST_CASE("idempotents of T_E realize E itself") {
  for (const auto& e : enumerate_semilattices(4)) {
    auto te = munn_semigroup(e);
    CHECK(te.sg.idempotents().size() == static_cast<std::size_t>(e.order()));
    // the idempotent semilattice reproduces the meet table
    const int ne = e.order();
    std::vector<int> meet(static_cast<std::size_t>(ne) * ne);
    std::vector<int> back(te.sg.order(), -1);
    for (int i = 0; i < ne; ++i) back[te.idempotent_of[i]] = i;
    for (int a = 0; a < ne; ++a)
      for (int b = 0; b < ne; ++b)
        meet[a * ne + b] =
            back[te.sg.product(te.idempotent_of[a], te.idempotent_of[b])];
    CHECK(meet == e.table());
  }
}

TEST_CASE("T_E is fundamental for all semilattices of order <= 4") {
  for (const auto& e : enumerate_semilattices(4))
    CHECK(munn_semigroup(e).sg.is_fundamental());
}

TEST_CASE("Munn representation is injective exactly for fundamental inputs") {
  for (const auto& s :
       {brandt5(), c2(), invsem::testing::two_chain()}) {
    auto rep = munn_representation(s);
    CHECK(rep.injective == s.is_fundamental());
    // full image: every ideal identity is hit by an idempotent of S
    for (int i = 0; i < rep.e_semilattice.order(); ++i) {
      bool hit = false;
      for (int e : s.idempotents())
        if (rep.embedding[e] == rep.te.idempotent_of[i]) hit = true;
      CHECK(hit);
    }
  }
}

TEST_CASE("Munn-semigroup cap triggers") {
  Limits limits;
  limits.munn_cap = 5;
  CHECK_THROWS_AS(munn_semigroup(figure1(), limits), CapExceeded);
}
