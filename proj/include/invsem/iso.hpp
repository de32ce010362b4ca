// iso.hpp -- table isomorphism search (backtracking over generator images)
#ifndef INVSEM_ISO_HPP_
#define INVSEM_ISO_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "invsem/semigroup.hpp"

namespace invsem {

struct IsoLimits {
  std::uint64_t step_limit = 10000000;
};

// Element maps are vectors of length order(S): phi[x] = image of x.

// First isomorphism in the deterministic (index-lexicographic) search
// order, or nothing if the tables are not isomorphic.
std::optional<std::vector<int>> find_isomorphism(int n1,
                                                 const std::vector<int>& t1,
                                                 int n2,
                                                 const std::vector<int>& t2,
                                                 const IsoLimits& limits = {});

// Enumerates every isomorphism in deterministic order. `visit` returns
// false to stop early. Returns the number visited. Throws CapExceeded
// when the step budget runs out.
std::uint64_t for_each_isomorphism(
    int n1, const std::vector<int>& t1, int n2, const std::vector<int>& t2,
    const IsoLimits& limits,
    const std::function<bool(const std::vector<int>&)>& visit);

struct IsoEnumeration {
  std::vector<std::vector<int>> found;
  bool complete = true;  // false when max_results stopped the enumeration
};

IsoEnumeration enumerate_isomorphisms(int n1, const std::vector<int>& t1,
                                      int n2, const std::vector<int>& t2,
                                      const IsoLimits& limits = {},
                                      std::size_t max_results = static_cast<std::size_t>(-1));

std::optional<std::vector<int>> find_isomorphism(
    const FiniteInverseSemigroup& s, const FiniteInverseSemigroup& t,
    const IsoLimits& limits = {});

IsoEnumeration enumerate_isomorphisms(const FiniteInverseSemigroup& s,
                                      const FiniteInverseSemigroup& t,
                                      const IsoLimits& limits = {},
                                      std::size_t max_results = static_cast<std::size_t>(-1));

std::uint64_t automorphism_count(const FiniteInverseSemigroup& s,
                                 const IsoLimits& limits = {});

}  // namespace invsem

#endif  // INVSEM_ISO_HPP_
