// semilattice.hpp -- finite meet-semilattices
#ifndef INVSEM_SEMILATTICE_HPP_
#define INVSEM_SEMILATTICE_HPP_

#include <utility>
#include <vector>

#include "invsem/semigroup.hpp"

namespace invsem {

class Semilattice {
 public:
  // meet table: must be associative, commutative and idempotent
  static Semilattice from_meet_table(int order, std::vector<int> meet);

  // strict relations "i < j" (covers or any order relations; the reflexive
  // transitive closure is taken); all pairwise meets must exist
  static Semilattice from_covers(int order,
                                 const std::vector<std::pair<int, int>>& below);

  int order() const { return _order; }
  int meet(int a, int b) const { return _meet[a * _order + b]; }
  bool leq(int a, int b) const { return meet(a, b) == a; }
  const std::vector<int>& table() const { return _meet; }

  // {x : x <= e}, ascending
  std::vector<int> principal_ideal(int e) const;

  std::vector<std::pair<int, int>> hasse_covers() const;

  // the meet table read as an inverse semigroup
  FiniteInverseSemigroup as_semigroup() const;

 private:
  int _order = 0;
  std::vector<int> _meet;
};

}  // namespace invsem

#endif  // INVSEM_SEMILATTICE_HPP_
