#include "invsem/iso.hpp"

#include "doctest.h"
#include "helpers.hpp"
#include "invsem/errors.hpp"

using namespace invsem;
using invsem::testing::brandt5;
using invsem::testing::c2;
using invsem::testing::two_chain;

namespace {
constexpr int U = PartialBijection::undefined;
}

TEST_CASE("the two-chain has exactly one automorphism") {
  auto s = two_chain();
  auto first = find_isomorphism(s, s);
  REQUIRE(first.has_value());
  CHECK(*first == std::vector<int>{0, 1});
  CHECK(automorphism_count(s) == 1);
}

TEST_CASE("two-chain and the order-2 group are not isomorphic") {
  CHECK_FALSE(find_isomorphism(two_chain(), c2()).has_value());
}

TEST_CASE("Brandt automorphisms: identity and the e-f swap") {
  auto found = enumerate_isomorphisms(brandt5(), brandt5());
  REQUIRE(found.complete);
  REQUIRE(found.found.size() == 2);
  CHECK(found.found[0] == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(found.found[1] == std::vector<int>{1, 0, 3, 2, 4});
}

TEST_CASE("the closure of a rank-one map is the Brandt semigroup") {
  auto s = generate_closure(2, {PartialBijection(2, {1, U})});
  auto iso = find_isomorphism(s, brandt5());
  REQUIRE(iso.has_value());
  // spot-check multiplicativity of the found map
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      CHECK((*iso)[s.product(a, b)] == brandt5().product((*iso)[a], (*iso)[b]));
}

TEST_CASE("isomorphism search respects its step limit") {
  auto s = generate_closure(3, {PartialBijection(3, {1, 2, U}),
                                PartialBijection(3, {1, U, 0})});
  IsoLimits limits;
  limits.step_limit = 1;
  CHECK_THROWS_AS(enumerate_isomorphisms(s, s, limits), CapExceeded);
}

TEST_CASE("empty semigroups are isomorphic via the empty map") {
  auto e = FiniteInverseSemigroup::from_table(0, {});
  auto iso = find_isomorphism(e, e);
  REQUIRE(iso.has_value());
  CHECK(iso->empty());
}

TEST_CASE("plain-table search handles non-inverse semigroups") {
  // left-zero semigroups of sizes 2 and 2: isomorphic (both maps work)
  std::vector<int> lz2{0, 0, 1, 1};
  auto found = enumerate_isomorphisms(2, lz2, 2, lz2);
  CHECK(found.found.size() == 2);
  // left-zero vs right-zero: anti-isomorphic but not isomorphic
  std::vector<int> rz2{0, 1, 0, 1};
  CHECK_FALSE(find_isomorphism(2, lz2, 2, rz2).has_value());
}
