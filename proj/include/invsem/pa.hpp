// pa.hpp -- partial automorphism monoids PA(S) and PSA(S)
#ifndef INVSEM_PA_HPP_
#define INVSEM_PA_HPP_

#include <optional>
#include <string>
#include <vector>

#include "invsem/lattice.hpp"

namespace invsem {

struct PaLabel {
  int dom_node;
  int ran_node;
};

// The inverse monoid of all isomorphisms between subsemigroups of a fixed
// parent: inverse subsemigroups in PA mode, arbitrary subsemigroups in PSA
// mode. Elements are partial bijections on the parent's index set, labeled
// by (domain node, range node) and sorted by (label, map). The composition
// table is re-validated through the full inverse-semigroup axioms.
class PartialAutomorphismMonoid {
 public:
  static PartialAutomorphismMonoid build(const FiniteInverseSemigroup& s,
                                         LatticeMode mode,
                                         const Limits& limits = {});
  // PSA of an arbitrary (possibly non-inverse) semigroup
  static PartialAutomorphismMonoid build_plain(int order,
                                               const std::vector<int>& table,
                                               const Limits& limits = {});

  const FiniteInverseSemigroup& monoid() const { return *_monoid; }
  const SubsemigroupLattice& lattice() const { return *_lattice; }
  const std::vector<PartialBijection>& maps() const { return _maps; }
  const std::vector<PaLabel>& labels() const { return _labels; }
  LatticeMode mode() const { return _mode; }

  int order() const { return static_cast<int>(_maps.size()); }
  int identity() const { return _identity; }
  int element_of(const PartialBijection& map) const;
  std::size_t unit_group_order() const { return _unit_group_order; }
  // node id of the lattice node fixed by idempotent element i
  int node_of_idempotent(int i) const;

 private:
  LatticeMode _mode = LatticeMode::inverse_subsemigroups;
  std::optional<SubsemigroupLattice> _lattice;
  std::optional<FiniteInverseSemigroup> _monoid;
  std::vector<PartialBijection> _maps;
  std::vector<PaLabel> _labels;
  int _identity = -1;
  std::size_t _unit_group_order = 0;

  static PartialAutomorphismMonoid assemble(SubsemigroupLattice&& lattice,
                                            const Limits& limits);
};

struct PAIsomorphism {
  const PartialAutomorphismMonoid* src = nullptr;
  const PartialAutomorphismMonoid* dst = nullptr;
  std::vector<int> map;
};

struct PAIsoEnumeration {
  std::vector<PAIsomorphism> found;
  bool complete = true;
};

PAIsoEnumeration pa_isomorphisms(const PartialAutomorphismMonoid& pa_s,
                                 const PartialAutomorphismMonoid& pa_t,
                                 const IsoLimits& limits = {},
                                 std::size_t max_results = static_cast<std::size_t>(-1));

// Phi* read off the idempotent action: 1_H Phi = 1_{H Phi*}; validated as
// an inclusion-preserving bijection both ways.
LatticeIsomorphism induced_lattice_isomorphism(const PAIsomorphism& phi);

// does conjugation by the element bijection f turn every alpha in PA(S)
// into Phi(alpha)?
bool pa_is_induced_by(const PAIsomorphism& phi, const std::vector<int>& f);

// Restriction of a PSA-isomorphism to the PA parts (both parents inverse);
// verified to map PA(S) onto PA(T). Throws TheoryViolation with a witness
// otherwise.
PAIsomorphism check_restriction_psa_to_pa(const PartialAutomorphismMonoid& psa_s,
                                          const PartialAutomorphismMonoid& psa_t,
                                          const PAIsomorphism& phi_psa,
                                          const PartialAutomorphismMonoid& pa_s,
                                          const PartialAutomorphismMonoid& pa_t);

// natural orders of S and T are chains and some bijection reverses them
bool dually_isomorphic_chains(const FiniteInverseSemigroup& s,
                              const FiniteInverseSemigroup& t);

struct PhiRecord {
  std::string phi_e_kind;
  std::string branch;  // "isomorphism" | "dual-chains" | ""
  std::string verdict; // "pass" | "fail" | "out-of-scope"
  std::string witness;
};

struct Thm32Report {
  bool tightly_connected = false;
  bool fundamental = false;
  bool no_ntis = false;
  bool hypotheses() const { return tightly_connected && fundamental && no_ntis; }
  bool pa_isomorphic = false;
  bool isomorphic = false;
  bool dual_chains = false;
  bool iff_holds = false;
  std::size_t pa_s_order = 0, pa_t_order = 0;
  std::vector<PhiRecord> records;
  int failures = 0;
  bool inconclusive = false;
  std::string cap_note;
  std::string verdict;  // "pass" | "fail" | "out-of-scope" | "inconclusive"
};

// PA(S) ~ PA(T) iff S ~ T or both natural orders are dually isomorphic
// chains; per-Phi dichotomy checks included.
Thm32Report verify_theorem_3_2(const FiniteInverseSemigroup& s,
                               const FiniteInverseSemigroup& t,
                               const Limits& limits = {});

struct Result31Report {
  bool pa_isomorphic = false;
  bool isomorphic = false;
  bool chain_dual = false;  // S a chain and T ~ S^d
  bool iff_holds = false;
  bool finite_collapse_holds = false;  // PA(S) ~ PA(T) <=> S ~ T
  std::vector<PhiRecord> records;
  int failures = 0;
  bool inconclusive = false;
  std::string cap_note;
  std::string verdict;
};

// S must be a semilattice; T any inverse semigroup.
Result31Report verify_result_3_1(const FiniteInverseSemigroup& s,
                                 const FiniteInverseSemigroup& t,
                                 const Limits& limits = {});

struct Thm34Report {
  bool tightly_connected = false;
  bool fundamental = false;
  bool no_ntis = false;
  bool hypotheses() const { return tightly_connected && fundamental && no_ntis; }
  bool psa_isomorphic = false;
  bool isomorphic = false;
  bool dual_chains = false;
  bool t_inverse = false;
  bool t_no_ntis = false;
  bool iff_holds = false;
  std::size_t psa_s_order = 0, psa_t_order = 0;
  std::vector<PhiRecord> records;  // restriction checks per PSA-isomorphism
  int failures = 0;
  bool inconclusive = false;
  std::string cap_note;
  std::string verdict;
};

// T is an arbitrary semigroup given by its table.
Thm34Report verify_theorem_3_4(const FiniteInverseSemigroup& s, int t_order,
                               const std::vector<int>& t_table,
                               const Limits& limits = {});

}  // namespace invsem

#endif  // INVSEM_PA_HPP_
