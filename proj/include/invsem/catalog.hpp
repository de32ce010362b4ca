// catalog.hpp -- exhaustive catalogs of small inverse semigroups
#ifndef INVSEM_CATALOG_HPP_
#define INVSEM_CATALOG_HPP_

#include <vector>

#include "invsem/config.hpp"
#include "invsem/semigroup.hpp"
#include "invsem/semilattice.hpp"

namespace invsem {

// lexicographically least relabeling of the table (the isomorphism-class
// canonical form for small orders)
std::vector<int> canonical_table(int order, const std::vector<int>& table);

struct Catalog {
  int max_order = 0;
  // pairwise non-isomorphic, every member validated; sorted by
  // (order, canonical table)
  std::vector<FiniteInverseSemigroup> members;
};

// Every inverse semigroup of order 1..max_order up to isomorphism,
// enumerated as inverse subsemigroups of I_max_order (Wagner-Preston
// guarantees completeness) modulo conjugation, then deduplicated by
// canonical tables.
Catalog build_catalog(int max_order, const Limits& limits = {});

std::vector<int> catalog_counts(const Catalog& catalog);  // per order, 1-based

// Every meet-semilattice of order 1..max_order up to isomorphism, by
// direct search over canonical meet tables. Independent of build_catalog;
// the two routes are compared in tests.
std::vector<Semilattice> enumerate_semilattices(int max_order);

}  // namespace invsem

#endif  // INVSEM_CATALOG_HPP_
