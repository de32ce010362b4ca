// munn.hpp -- the Munn semigroup T_E of a finite semilattice
#ifndef INVSEM_MUNN_HPP_
#define INVSEM_MUNN_HPP_

#include <vector>

#include "invsem/config.hpp"
#include "invsem/semilattice.hpp"

namespace invsem {

// an isomorphism of principal ideals Ee -> Ef, as a partial bijection on
// E's index set
struct MunnElement {
  int source;
  int target;
  PartialBijection map;
};

// all meet-preserving bijections of Ee onto Ef, in canonical
// (image-sequence lexicographic) order
std::vector<PartialBijection> ideal_isomorphisms(const Semilattice& e_lat,
                                                 int e, int f);

struct MunnSemigroup {
  FiniteInverseSemigroup sg;       // composition table, with concrete_rep
  std::vector<MunnElement> labels; // canonical order: (source, target, map)
  std::vector<int> idempotent_of;  // e -> index of the identity on Ee

  int element_of(const PartialBijection& map) const;
};

// T_E: all isomorphisms between principal ideals of E under composition.
// Idempotents are the ideal identities, one per element of E.
MunnSemigroup munn_semigroup(const Semilattice& e_lat, const Limits& limits = {});

// The Munn representation of an inverse semigroup S into T_{E_S}:
// x |-> (e |-> x^-1 e x on the ideal of x x^-1). A homomorphism whose
// image is a full inverse subsemigroup; injective exactly when S is
// fundamental.
struct MunnRepresentation {
  Semilattice e_semilattice;       // E_S with its own index set
  std::vector<int> e_index;        // S idempotent -> E index
  MunnSemigroup te;
  std::vector<int> embedding;      // S element -> T_E element
  bool injective;
};

MunnRepresentation munn_representation(const FiniteInverseSemigroup& s,
                                       const Limits& limits = {});

}  // namespace invsem

#endif  // INVSEM_MUNN_HPP_
