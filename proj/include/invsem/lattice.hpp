// lattice.hpp -- subsemigroup lattices, lattice isomorphisms, base bijections
#ifndef INVSEM_LATTICE_HPP_
#define INVSEM_LATTICE_HPP_

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "invsem/config.hpp"
#include "invsem/iso.hpp"
#include "invsem/semigroup.hpp"

namespace invsem {

enum class LatticeMode { inverse_subsemigroups, all_subsemigroups };

// The lattice of subsemigroups of a fixed parent, ordered by inclusion.
// Nodes are element subsets stored as bitsets; the empty subsemigroup is
// always a node. Node ids are canonical: sorted by (size, members).
class SubsemigroupLattice {
 public:
  static SubsemigroupLattice enumerate(const FiniteInverseSemigroup& s,
                                       LatticeMode mode, std::size_t cap);
  // all-subsemigroups lattice of an arbitrary associative table
  static SubsemigroupLattice enumerate_plain(int order,
                                             const std::vector<int>& table,
                                             std::size_t cap);

  LatticeMode mode() const { return _mode; }
  int parent_order() const { return _parent_order; }
  const std::vector<int>& parent_table() const { return _parent_table; }

  std::size_t node_count() const { return _nodes.size(); }
  const Bitset& node(int i) const { return _nodes[i]; }
  int node_of(const Bitset& b) const;

  bool leq(int i, int j) const { return _nodes[i].subset_of(_nodes[j]); }
  int bottom() const { return 0; }  // the empty subsemigroup
  int top() const { return static_cast<int>(_nodes.size()) - 1; }
  int join(int i, int j) const;
  int meet(int i, int j) const;

  const std::vector<int>& atoms() const { return _atoms; }
  const std::vector<int>& lower_covers(int i) const { return _lower[i]; }
  const std::vector<int>& upper_covers(int i) const { return _upper[i]; }
  int height(int i) const { return _height[i]; }
  const std::vector<int>& join_irreducibles() const { return _jirr; }
  const std::vector<int>& ji_below(int i) const { return _ji_below[i]; }

  // order-theoretic fingerprint of a node (lattice isomorphisms preserve it)
  const std::vector<int>& node_invariant(int i) const { return _invariant[i]; }

  Bitset closure_in_parent(Bitset seed) const;

 private:
  void enumerate_nodes(std::size_t cap);  // BFS over the closure system
  void finish();  // sort nodes, build covers/heights/invariants

  LatticeMode _mode = LatticeMode::inverse_subsemigroups;
  int _parent_order = 0;
  std::vector<int> _parent_table;
  std::vector<int> _parent_inv;  // empty in plain mode
  std::vector<Bitset> _nodes;
  std::unordered_map<Bitset, int, BitsetHash> _index;
  std::vector<std::vector<int>> _lower, _upper;
  std::vector<int> _height;
  std::vector<int> _atoms;
  std::vector<int> _jirr;
  std::vector<std::vector<int>> _ji_below;
  std::vector<std::vector<int>> _invariant;
};

struct LatticeIsomorphism {
  const SubsemigroupLattice* src = nullptr;
  const SubsemigroupLattice* dst = nullptr;
  std::vector<int> node_map;  // src node id -> dst node id
};

struct LatticeIsoEnumeration {
  std::vector<LatticeIsomorphism> found;
  bool complete = true;
};

// Inclusion-preserving bijections, enumerated by backtracking over the
// join-irreducible poset and validated both ways. Deterministic order.
LatticeIsoEnumeration lattice_isomorphisms(const SubsemigroupLattice& ls,
                                           const SubsemigroupLattice& lt,
                                           const IsoLimits& limits = {},
                                           std::size_t max_results = static_cast<std::size_t>(-1));

enum class EBijectionKind { isomorphism, dual_isomorphism, weak_only };

struct EBijection {
  std::vector<int> map;  // S element -> T element; -1 off E_S
  EBijectionKind kind;
};

// reads the atom-to-atom action of a lattice isomorphism
EBijection e_bijection(const FiniteInverseSemigroup& s,
                       const FiniteInverseSemigroup& t,
                       const LatticeIsomorphism& psi);

// The base partial bijection on N_S u E_S: idempotents via the
// E-bijection; x nongroup goes to the unique y with <y> = <x>Psi,
// y y^-1 = (x x^-1)psi_E and y^-1 y = (x^-1 x)psi_E. Returns -1 outside
// N_S u E_S. Throws TheoryViolation when no or multiple candidates exist.
std::vector<int> base_partial_bijection(const FiniteInverseSemigroup& s,
                                        const FiniteInverseSemigroup& t,
                                        const LatticeIsomorphism& psi);

// Ershova extension to all of S. Requires S (and verifies T) to have no
// nontrivial isolated subgroups. r_choice maps each nonisolated idempotent
// to a chosen r in N_S meeting its R-class; defaults to the least index.
std::vector<int> base_bijection(const FiniteInverseSemigroup& s,
                                const FiniteInverseSemigroup& t,
                                const LatticeIsomorphism& psi,
                                const std::vector<int>* r_choice = nullptr);

// does f (a total element map) induce psi, i.e. image of every node = its
// psi-image?
bool is_induced_by(const LatticeIsomorphism& psi, const std::vector<int>& f);

// (e x)psi = (e psi)(x psi) whenever e is tightly x-covered by x x^-1
bool check_lemma_2_3(const FiniteInverseSemigroup& s,
                     const FiniteInverseSemigroup& t,
                     const std::vector<int>& psi, std::string* witness);

struct Lemma12Result {
  bool hypotheses_hold = false;
  bool conclusion_holds = true;  // vacuous when hypotheses fail
  std::string witness;
};

// hypotheses: phi a bijection preserving L-classes whose restriction to
// E_S is an isomorphism and (f x)phi = (f phi)(x phi) for x nongroup,
// f <= x x^-1; conclusion: (x^-1 e x)phi = (x phi)^-1 (e phi)(x phi)
Lemma12Result check_lemma_1_2(const FiniteInverseSemigroup& s,
                              const FiniteInverseSemigroup& t,
                              const std::vector<int>& phi);

struct Thm24Record {
  std::string psi_e_kind;
  bool qualifies = false;
  bool base_is_isomorphism = false;
  bool induces = false;
  bool unique_inducing = false;
  bool lemma23_ok = false;
  bool lemma12_ok = false;
  std::string verdict;  // "pass" | "fail" | "out-of-scope"
  std::string witness;
};

struct Thm24Report {
  bool tightly_connected = false;
  bool fundamental = false;
  bool no_ntis = false;
  bool hypotheses() const { return tightly_connected && fundamental && no_ntis; }
  std::size_t lattice_isomorphism_count = 0;
  bool inconclusive = false;
  std::string cap_note;
  std::vector<Thm24Record> records;
  int qualifying = 0;
  int failures = 0;
  std::string verdict;  // "pass" | "fail" | "out-of-scope" | "inconclusive"
};

// For every lattice isomorphism with an isomorphic E-bijection (S
// qualifying): the base bijection must be an isomorphism of S onto T and,
// finite semigroups being completely semisimple, the unique isomorphism
// inducing the lattice isomorphism.
Thm24Report verify_theorem_2_4(const FiniteInverseSemigroup& s,
                               const FiniteInverseSemigroup& t,
                               const Limits& limits = {});

}  // namespace invsem

#endif  // INVSEM_LATTICE_HPP_
