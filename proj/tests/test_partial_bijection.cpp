#include "invsem/partial_bijection.hpp"

#include <unordered_set>

#include "doctest.h"
#include "helpers.hpp"
#include "invsem/errors.hpp"

using invsem::InvalidInput;
using invsem::PartialBijection;
using invsem::testing::all_partial_bijections;
using invsem::testing::symmetric_inverse_monoid_order;

namespace {

PartialBijection pb(std::size_t n, std::vector<int> m) {
  return PartialBijection(n, std::move(m));
}

constexpr int U = PartialBijection::undefined;

}  // namespace

TEST_CASE("compose chains singleton maps") {
  auto a = pb(3, {1, U, U});
  auto b = pb(3, {U, 2, U});
  CHECK(a * b == pb(3, {2, U, U}));
}

TEST_CASE("compose respects the identity law on restrictions") {
  auto id2 = PartialBijection::partial_identity(3, {0, 1});
  auto b = pb(3, {2, 0, U});  // dom(b) contained in {0,1}
  CHECK(id2 * b == b);
}

TEST_CASE("a transposition squares to the identity on its domain") {
  auto swap = pb(3, {1, 0, U});
  CHECK(swap * swap == PartialBijection::partial_identity(3, {0, 1}));
}

TEST_CASE("compose rejects universe size mismatch") {
  CHECK_THROWS_AS(pb(2, {1, U}) * pb(3, {1, U, U}), InvalidInput);
}

TEST_CASE("invert swaps domain and image") {
  CHECK(pb(2, {1, U}).inverse() == pb(2, {U, 0}));
  CHECK(PartialBijection(3).inverse() == PartialBijection(3));
  auto ida = PartialBijection::partial_identity(4, {1, 3});
  CHECK(ida.inverse() == ida);
}

TEST_CASE("is_idempotent detects partial identities") {
  CHECK(PartialBijection::partial_identity(3, {0, 2}).is_idempotent());
  CHECK_FALSE(pb(2, {1, U}).is_idempotent());
  CHECK(PartialBijection(2).is_idempotent());
}

TEST_CASE("natural_leq is the restriction order") {
  CHECK(natural_leq(pb(3, {1, U, U}), pb(3, {1, U, 0})));
  CHECK_FALSE(natural_leq(pb(3, {1, U, U}), pb(3, {2, 1, U})));
  CHECK(natural_leq(PartialBijection(3), pb(3, {2, 1, U})));
  CHECK_THROWS_AS(natural_leq(PartialBijection(2), PartialBijection(3)),
                  InvalidInput);
}

TEST_CASE("constructor rejects non-injective and out-of-range mappings") {
  CHECK_THROWS_AS(pb(3, {1, 1, U}), InvalidInput);
  CHECK_THROWS_AS(pb(3, {3, U, U}), InvalidInput);
  CHECK_THROWS_AS(pb(2, {0}), InvalidInput);
}

TEST_CASE("text rendering") {
  CHECK(pb(3, {1, U, 0}).to_string() == "[0↦1, 2↦0]/n=3");
  CHECK(PartialBijection(3).to_string() == "[]/n=3");
}

TEST_CASE("enumeration of I_n matches the closed formula") {
  for (int n = 0; n <= 4; ++n)
    CHECK(all_partial_bijections(n).size() == symmetric_inverse_monoid_order(n));
  CHECK(symmetric_inverse_monoid_order(2) == 7);
}

TEST_CASE("composition is associative on all of I_n, n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    auto all = all_partial_bijections(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        auto ab = a * b;
        for (const auto& c : all) {
          if ((ab * c) != (a * (b * c))) {
            FAIL("associativity defect at n=", n);
          }
        }
      }
  }
}

TEST_CASE("inversion is an anti-isomorphism and elements are regular") {
  auto all = all_partial_bijections(3);
  for (const auto& a : all) {
    CHECK(a.inverse().inverse() == a);
    CHECK(a * a.inverse() * a == a);
    CHECK((a * a.inverse()).is_idempotent());
    for (const auto& b : all)
      CHECK((a * b).inverse() == b.inverse() * a.inverse());
  }
}

TEST_CASE("natural_leq is a partial order matching ef = e on idempotents") {
  auto all = all_partial_bijections(3);
  for (const auto& a : all) {
    CHECK(natural_leq(a, a));
    for (const auto& b : all) {
      if (natural_leq(a, b) && natural_leq(b, a)) CHECK(a == b);
      if (a.is_idempotent() && b.is_idempotent())
        CHECK(natural_leq(a, b) == (a * b == a));
      for (const auto& c : all)
        if (natural_leq(a, b) && natural_leq(b, c)) CHECK(natural_leq(a, c));
    }
  }
}

TEST_CASE("partial identities commute, exhaustively for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<PartialBijection> idems;
    for (const auto& a : all_partial_bijections(n))
      if (a.is_idempotent()) idems.push_back(a);
    CHECK(idems.size() == (std::size_t{1} << n));
    for (const auto& e : idems)
      for (const auto& f : idems) CHECK(e * f == f * e);
  }
}

TEST_CASE("hash and equality agree on all of I_3") {
  auto all = all_partial_bijections(3);
  std::unordered_set<PartialBijection> set(all.begin(), all.end());
  CHECK(set.size() == all.size());
}
