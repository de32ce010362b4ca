#include "invsem/lattice.hpp"

#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "invsem/errors.hpp"
#include "invsem/munn.hpp"

using namespace invsem;
using invsem::testing::brandt5;
using invsem::testing::c2;
using invsem::testing::two_chain;

namespace {

constexpr int U = PartialBijection::undefined;

LatticeIsomorphism induced_by(const FiniteInverseSemigroup& s,
                              const SubsemigroupLattice& ls,
                              const SubsemigroupLattice& lt,
                              const std::vector<int>& gamma) {
  std::vector<int> node_map(ls.node_count(), -1);
  for (std::size_t i = 0; i < ls.node_count(); ++i) {
    Bitset image(s.order());
    ls.node(static_cast<int>(i)).for_each([&](int x) { image.set(gamma[x]); });
    node_map[i] = lt.node_of(image);
    REQUIRE(node_map[i] >= 0);
  }
  return LatticeIsomorphism{&ls, &lt, node_map};
}

}  // namespace

TEST_CASE("the two-chain has four inverse subsemigroups") {
  auto s = two_chain();
  auto lat = SubsemigroupLattice::enumerate(
      s, LatticeMode::inverse_subsemigroups, 1000);
  CHECK(lat.node_count() == 4);
  CHECK(lat.node(lat.bottom()).count() == 0);
  CHECK(lat.node(lat.top()).count() == 2);
  CHECK(lat.atoms().size() == 2);
}

TEST_CASE("a one-element semigroup has the two-node lattice") {
  auto s = FiniteInverseSemigroup::from_table(1, {0});
  auto lat = SubsemigroupLattice::enumerate(
      s, LatticeMode::inverse_subsemigroups, 1000);
  CHECK(lat.node_count() == 2);
  CHECK(lat.atoms().size() == 1);
}

TEST_CASE("the order-2 group has three inverse subsemigroups") {
  auto lat = SubsemigroupLattice::enumerate(
      c2(), LatticeMode::inverse_subsemigroups, 1000);
  CHECK(lat.node_count() == 3);  // {}, {1}, C2: {g} alone is not closed
}

TEST_CASE("lattice caps trigger") {
  CHECK_THROWS_AS(SubsemigroupLattice::enumerate(
                      brandt5(), LatticeMode::inverse_subsemigroups, 3),
                  CapExceeded);
}

TEST_CASE("the two-chain lattice has exactly two automorphisms") {
  auto s = two_chain();
  auto lat = SubsemigroupLattice::enumerate(
      s, LatticeMode::inverse_subsemigroups, 1000);
  auto isos = lattice_isomorphisms(lat, lat);
  REQUIRE(isos.complete);
  CHECK(isos.found.size() == 2);
}

TEST_CASE("different node counts mean no lattice isomorphism") {
  auto l1 = SubsemigroupLattice::enumerate(
      two_chain(), LatticeMode::inverse_subsemigroups, 1000);
  auto l2 = SubsemigroupLattice::enumerate(
      c2(), LatticeMode::inverse_subsemigroups, 1000);
  CHECK(lattice_isomorphisms(l1, l2).found.empty());
}

TEST_CASE("E-bijection kinds on the two-chain") {
  auto s = two_chain();
  auto lat = SubsemigroupLattice::enumerate(
      s, LatticeMode::inverse_subsemigroups, 1000);
  auto isos = lattice_isomorphisms(lat, lat);
  REQUIRE(isos.found.size() == 2);
  std::multiset<EBijectionKind> kinds;
  for (const auto& psi : isos.found) kinds.insert(e_bijection(s, s, psi).kind);
  CHECK(kinds.count(EBijectionKind::isomorphism) == 1);
  CHECK(kinds.count(EBijectionKind::dual_isomorphism) == 1);
}

TEST_CASE("base partial bijection under the identity lattice map") {
  auto b = brandt5();
  auto lat = SubsemigroupLattice::enumerate(
      b, LatticeMode::inverse_subsemigroups, 1000);
  std::vector<int> identity_nodes(lat.node_count());
  for (std::size_t i = 0; i < lat.node_count(); ++i)
    identity_nodes[i] = static_cast<int>(i);
  LatticeIsomorphism psi{&lat, &lat, identity_nodes};
  auto base = base_partial_bijection(b, b, psi);
  CHECK(base == std::vector<int>{0, 1, 2, 3, 4});  // combinatorial: total
}

TEST_CASE("lattice maps induced by isomorphisms reproduce them") {
  auto b = brandt5();
  auto lat = SubsemigroupLattice::enumerate(
      b, LatticeMode::inverse_subsemigroups, 1000);
  std::vector<int> gamma{1, 0, 3, 2, 4};  // the nontrivial automorphism
  auto psi = induced_by(b, lat, lat, gamma);
  CHECK(is_induced_by(psi, gamma));

  auto base = base_partial_bijection(b, b, psi);
  CHECK(base == gamma);
  auto hat = base_bijection(b, b, psi);
  CHECK(hat == gamma);
  CHECK_FALSE(is_induced_by(psi, std::vector<int>{0, 1, 2, 3, 4}));
}

TEST_CASE("base bijection reproduces the isomorphism for every r-choice") {
  // B(C2, 2): 2x2 matrix units over the order-2 group, with a zero
  auto s = generate_closure(
      4, {PartialBijection(4, {2, 3, U, U}), PartialBijection(4, {1, 0, U, U})});
  REQUIRE(s.order() == 9);
  REQUIRE_FALSE(s.has_nontrivial_isolated_subgroups());
  auto lat = SubsemigroupLattice::enumerate(
      s, LatticeMode::inverse_subsemigroups, 5000);
  std::vector<int> identity(s.order());
  for (int i = 0; i < s.order(); ++i) identity[i] = i;
  auto psi = induced_by(s, lat, lat, identity);

  // every nonisolated idempotent picks any nongroup element of its R-class
  std::vector<std::vector<int>> options;
  std::vector<int> nonisolated;
  std::vector<char> isolated(s.order(), 0);
  for (int e : s.isolated_idempotents()) isolated[e] = 1;
  for (int e : s.idempotents()) {
    if (isolated[e]) continue;
    nonisolated.push_back(e);
    std::vector<int> rs;
    for (int y : s.nongroup_elements())
      if (s.product(y, s.inverse(y)) == e) rs.push_back(y);
    REQUIRE(!rs.empty());
    options.push_back(rs);
  }
  REQUIRE(options.size() == 2);  // two nonisolated idempotents
  for (int c0 : options[0])
    for (int c1 : options[1]) {
      std::vector<int> r_choice(s.order(), -1);
      r_choice[nonisolated[0]] = c0;
      r_choice[nonisolated[1]] = c1;
      CHECK(base_bijection(s, s, psi, &r_choice) == identity);
    }
}

TEST_CASE("theorem 2.4 harness on matching pairs") {
  Limits limits;
  auto rep = verify_theorem_2_4(brandt5(), brandt5(), limits);
  CHECK(rep.verdict == "pass");
  CHECK(rep.qualifying >= 1);
  CHECK(rep.failures == 0);

  auto rep2 = verify_theorem_2_4(two_chain(), two_chain(), limits);
  CHECK(rep2.verdict == "pass");
  CHECK(rep2.lattice_isomorphism_count == 2);  // one per atom arrangement
  CHECK(rep2.qualifying == 1);                 // the dual one is out of scope
}

TEST_CASE("theorem 2.4 harness marks out-of-scope hypotheses") {
  auto rep = verify_theorem_2_4(c2(), c2(), Limits{});
  CHECK(rep.verdict == "out-of-scope");
  CHECK_FALSE(rep.hypotheses());
  CHECK(rep.failures == 0);
}

TEST_CASE("theorem 2.4 harness on the six-element-semilattice Munn semigroup") {
  auto e = Semilattice::from_covers(
      6, {{1, 4}, {2, 4}, {2, 5}, {3, 5}, {0, 1}, {0, 2}, {0, 3}});
  auto te = munn_semigroup(e);
  Limits limits;
  auto rep = verify_theorem_2_4(te.sg, te.sg, limits);
  CHECK(rep.verdict == "pass");
  CHECK(rep.qualifying >= 1);
  CHECK(rep.failures == 0);
}

TEST_CASE("lemma 1.2 check accepts a genuine isomorphism") {
  auto b = brandt5();
  auto res = check_lemma_1_2(b, b, {1, 0, 3, 2, 4});
  CHECK(res.hypotheses_hold);
  CHECK(res.conclusion_holds);
}

TEST_CASE("plain-mode lattices refuse lattice-isomorphism search") {
  auto lat = SubsemigroupLattice::enumerate_plain(2, {0, 0, 1, 1}, 1000);
  CHECK(lat.node_count() == 4);  // {}, {0}, {1}, {0,1}
  CHECK_THROWS_AS(lattice_isomorphisms(lat, lat), InvalidInput);
}
