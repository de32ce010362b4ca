#include "invsem/connectivity.hpp"

#include "doctest.h"
#include "helpers.hpp"
#include "invsem/catalog.hpp"
#include "invsem/errors.hpp"
#include "invsem/munn.hpp"

using namespace invsem;
using invsem::testing::brandt5;
using invsem::testing::c2;
using invsem::testing::two_chain;

namespace {

constexpr int U = PartialBijection::undefined;

// monogenic inverse semigroup whose kernel is a 2-element cyclic group:
// a 2-cycle with one extra tail point
FiniteInverseSemigroup cycle_with_tail() {
  return generate_closure(4, {PartialBijection(4, {1, 0, 3, U})});
}

}  // namespace

TEST_CASE("x_covers on semilattices reduces to order covering") {
  auto s = two_chain();
  CHECK(x_covers(s, 1, 0));       // f is covered by e
  CHECK_FALSE(x_covers(s, 0, 0)); // not strictly below itself
}

TEST_CASE("x_covers and tight covering on the Brandt semigroup") {
  auto b = brandt5();
  CHECK(x_covers(b, 4, 0));        // E_<a> = {e, f, 0}, nothing between 0 and e
  CHECK(tightly_covers(b, 4, 0));  // 0 a = 0
  CHECK(x_covers(b, 4, 2));
  CHECK_FALSE(x_covers(b, 2, 0));  // e = a a^-1 itself
}

TEST_CASE("tightly_covers rejects nonidempotent group elements") {
  CHECK_THROWS_AS(tightly_covers(c2(), 0, 1), InvalidInput);
}

TEST_CASE("tight covering fails when e x is a nontrivial group element") {
  auto s = cycle_with_tail();
  // locate the kernel identity id{0,1} and the generator x
  const auto* rep = s.concrete_rep();
  REQUIRE(rep != nullptr);
  int ek = -1, x = -1;
  for (int i = 0; i < s.order(); ++i) {
    if ((*rep)[i] == PartialBijection::partial_identity(4, {0, 1})) ek = i;
    if ((*rep)[i] == PartialBijection(4, {1, 0, 3, U})) x = i;
  }
  REQUIRE(ek >= 0);
  REQUIRE(x >= 0);
  int ex = s.product(ek, x);
  CHECK_FALSE(s.is_nongroup(ex));
  CHECK_FALSE(s.is_idempotent(ex));  // the kernel's nontrivial element
  CHECK(x_covers(s, ek, x));
  CHECK_FALSE(tightly_covers(s, ek, x));
}

TEST_CASE("bypasses on semilattices have length one") {
  auto s = two_chain();
  auto b = find_short_bypass(s, 1, 0);
  REQUIRE(b.has_value());
  CHECK(b->chain == std::vector<int>{1, 0});
  CHECK(b->stages == std::vector<int>{1, 0});
  CHECK_FALSE(b->tight);
  auto t = find_tight_bypass(s, 1, 0);
  REQUIRE(t.has_value());
  CHECK(t->tight);
}

TEST_CASE("the Brandt zero has a tight bypass to e") {
  auto b = brandt5();
  auto bp = find_tight_bypass(b, 4, 0);
  REQUIRE(bp.has_value());
  CHECK(bp->chain == std::vector<int>{4, 2});
  validate_bypass(b, *bp);
}

TEST_CASE("bypass preconditions") {
  auto b = brandt5();
  CHECK_THROWS_AS(find_short_bypass(b, 2, 0), InvalidInput);  // e = x x^-1
  CHECK_THROWS_AS(find_short_bypass(b, 0, 0), InvalidInput);  // e not idempotent
}

TEST_CASE("semilattices are tightly connected") {
  for (const auto& e : enumerate_semilattices(4)) {
    auto s = e.as_semigroup();
    CHECK(is_tightly_connected(s));
    CHECK(is_shortly_connected(s));
  }
}

TEST_CASE("the six-element-semilattice Munn semigroup is tightly connected") {
  auto e = Semilattice::from_covers(
      6, {{1, 4}, {2, 4}, {2, 5}, {3, 5}, {0, 1}, {0, 2}, {0, 3}});
  auto te = munn_semigroup(e);
  CHECK(is_tightly_connected(te.sg));
  CHECK(is_shortly_connected(te.sg));
  CHECK(order_ideal_check(te.sg));
}

TEST_CASE("order-ideal check: combinatorial semigroups always pass") {
  CHECK(order_ideal_check(brandt5()));
  CHECK(order_ideal_check(two_chain()));
  CHECK(order_ideal_check(c2()));  // N u E = {1} u ... covers all downward
}

TEST_CASE("a kernel group below a nongroup element defeats the order-ideal "
          "check") {
  auto s = cycle_with_tail();
  CHECK_FALSE(order_ideal_check(s));
  CHECK(is_shortly_connected(s));
  CHECK_FALSE(is_tightly_connected(s));
  CHECK(jones_remark_agrees(s));
}

TEST_CASE("remark equivalence on assorted small semigroups") {
  CHECK(jones_remark_agrees(brandt5()));
  CHECK(jones_remark_agrees(two_chain()));
  CHECK(jones_remark_agrees(c2()));
  CHECK(jones_remark_agrees(cycle_with_tail()));
  auto i2 = generate_closure(2, {PartialBijection(2, {1, 0}),
                                 PartialBijection(2, {1, U})});
  CHECK(jones_remark_agrees(i2));
}

TEST_CASE("combinatorial members: shortly connected iff tightly connected") {
  for (const auto& s : {brandt5(), two_chain()}) {
    REQUIRE(s.is_combinatorial());
    CHECK(is_shortly_connected(s) == is_tightly_connected(s));
  }
}
