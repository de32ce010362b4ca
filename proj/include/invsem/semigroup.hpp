// semigroup.hpp -- finite inverse semigroups as validated Cayley tables
#ifndef INVSEM_SEMIGROUP_HPP_
#define INVSEM_SEMIGROUP_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "invsem/bitset.hpp"
#include "invsem/config.hpp"
#include "invsem/partial_bijection.hpp"

namespace invsem {

enum class GreenRelation { H = 0, L = 1, R = 2, D = 3, J = 4 };

struct GreenPartition {
  GreenRelation relation;
  std::vector<int> block_of;               // element -> block id
  std::vector<std::vector<int>> blocks;    // block id -> ascending members
  // block order (ideal inclusion); populated for L, R, J and, since D = J
  // on finite semigroups, reused for D; empty for H
  std::vector<std::vector<bool>> block_leq;

  std::size_t size() const { return blocks.size(); }
  bool same_block(int a, int b) const { return block_of[a] == block_of[b]; }
};

// Associativity check: returns a witness triple (a,b,c) with
// (ab)c != a(bc), or nothing if the table is associative.
std::optional<std::array<int, 3>> associativity_defect(
    int order, const std::vector<int>& table);

// H, L, R, D, J computed from principal ideals of an arbitrary
// associative table (the reference route).
std::array<GreenPartition, 5> compute_green(int order,
                                            const std::vector<int>& table);

// An associative table with no further axioms; the transient carrier for
// PSA subsemigroup enumeration over arbitrary semigroups.
class PlainSemigroup {
 public:
  static PlainSemigroup from_table(int order, std::vector<int> table);

  int order() const { return _order; }
  int product(int a, int b) const { return _table[a * _order + b]; }
  bool is_idempotent(int a) const { return product(a, a) == a; }
  const std::vector<int>& table() const { return _table; }

 private:
  int _order = 0;
  std::vector<int> _table;
};

struct MonogenicReport {
  enum class Case { group, incomparable, chain_ordered };
  enum class KernelKind { cyclic_group, none };

  int generator;
  std::vector<int> elements;  // of <x>, ascending parent indices
  Case kind;
  std::vector<int> kernel;    // minimal ideal of <x>
  KernelKind kernel_kind;
};

class FiniteInverseSemigroup {
 public:
  // Validates the inverse-semigroup axioms: associativity, regularity and
  // pairwise-commuting idempotents (together these certify uniqueness of
  // inverses). If inv is omitted it is computed from the table. Every
  // rejection carries a witness. order 0 is accepted: the empty semigroup
  // participates in subsemigroup lattices.
  static FiniteInverseSemigroup from_table(
      int order, std::vector<int> table,
      std::optional<std::vector<int>> inv = std::nullopt,
      std::optional<std::vector<PartialBijection>> rep = std::nullopt);

  int order() const { return _order; }
  int product(int a, int b) const { return _table[a * _order + b]; }
  int inverse(int a) const { return _inv[a]; }
  const std::vector<int>& table() const { return _table; }
  const std::vector<int>& inv() const { return _inv; }

  bool is_idempotent(int a) const { return product(a, a) == a; }
  const std::vector<int>& idempotents() const { return _idempotents; }

  // natural partial order: a <= b iff a = (a a^-1) b
  bool natural_leq(int a, int b) const { return _leq[a].test(b); }

  bool is_nongroup(int a) const { return _nongroup_flag[a]; }
  const std::vector<int>& nongroup_elements() const { return _nongroup; }

  const GreenPartition& green(GreenRelation k) const {
    return _green[static_cast<int>(k)];
  }

  bool is_combinatorial() const { return _combinatorial; }
  bool is_fundamental() const { return _fundamental; }
  const std::vector<int>& isolated_idempotents() const { return _isolated; }
  bool has_nontrivial_isolated_subgroups() const { return _has_ntis; }
  // finite semigroups contain no bicyclic subsemigroup, so complete
  // semisimplicity holds by default; exposed as a constant, not a search
  static constexpr bool completely_semisimple = true;

  const std::vector<PartialBijection>* concrete_rep() const {
    return _rep ? &*_rep : nullptr;
  }

  // smallest subset containing `seed` closed under product (and inverse
  // when inverse_closed); aborts with CapExceeded past `cap` members
  Bitset closure(const Bitset& seed, bool inverse_closed = true,
                 std::size_t cap = static_cast<std::size_t>(-1)) const;
  Bitset closure_of(const std::vector<int>& seed, bool inverse_closed = true,
                    std::size_t cap = static_cast<std::size_t>(-1)) const;

  // the sub-table on `members` reindexed by ascending parent index;
  // throws InvalidInput if not closed. index_map, when given, receives
  // the parent index of each new element.
  FiniteInverseSemigroup subsemigroup(const Bitset& members,
                                      std::vector<int>* index_map = nullptr) const;

  MonogenicReport monogenic(int x) const;

 private:
  FiniteInverseSemigroup() = default;
  void build_caches();

  int _order = 0;
  std::vector<int> _table;
  std::vector<int> _inv;
  std::optional<std::vector<PartialBijection>> _rep;

  std::vector<int> _idempotents;
  std::vector<Bitset> _leq;  // row a: {b : a <= b}
  std::vector<char> _nongroup_flag;
  std::vector<int> _nongroup;
  std::array<GreenPartition, 5> _green;
  bool _combinatorial = true;
  bool _fundamental = true;
  std::vector<int> _isolated;
  bool _has_ntis = false;
};

// Closure of `generators` in the symmetric inverse monoid on
// {0,...,universe_size-1}; the result carries a concrete_rep and its
// elements are sorted canonically (lexicographic mapping order).
FiniteInverseSemigroup generate_closure(std::size_t universe_size,
                                        const std::vector<PartialBijection>& generators,
                                        const Limits& limits = {});

// Wagner-Preston representation: x |-> (s |-> s x, defined when
// s (x x^-1) = s). Returns S with the concrete_rep attached; the rep is
// verified faithful and multiplicative by exhaustive check.
FiniteInverseSemigroup wagner_preston(const FiniteInverseSemigroup& s);

// H, L, R, D recomputed from the concrete representation (domains and
// images of the partial bijections); the comparison oracle for the
// principal-ideal route. Requires a concrete_rep.
std::array<GreenPartition, 4> green_from_representation(
    const FiniteInverseSemigroup& s);

// Result-1.1 criterion: with S fundamental and phi|E a semilattice
// isomorphism onto E_T, returns whether (s^-1 e s)phi = (s phi)^-1 (e phi)
// (s phi) for all s, e -- and asserts this agrees with a direct
// homomorphism check of phi.
bool check_conjugation_criterion(const FiniteInverseSemigroup& s,
                                 const FiniteInverseSemigroup& t,
                                 const std::vector<int>& phi);

}  // namespace invsem

#endif  // INVSEM_SEMIGROUP_HPP_
