// config.hpp -- resource caps, overridable via invsem.cfg and CLI flags
#ifndef INVSEM_CONFIG_HPP_
#define INVSEM_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <string>

namespace invsem {

struct Limits {
  // partial-bijection closures: |I_n| grows super-exponentially in n
  std::size_t universe_cap = 16;
  std::size_t closure_cap = 100000;
  // Munn semigroup size (ideal-isomorphism counts blow up on symmetric posets)
  std::size_t munn_cap = 10000;
  // subsemigroup lattice node count
  std::size_t lattice_cap = 20000;
  // PA/PSA monoid element count
  std::size_t pa_cap = 5000;
  // backtracking budget for isomorphism searches
  std::uint64_t iso_step_limit = 10000000;
  // how many isomorphisms a verification harness inspects per pair
  std::size_t harness_iso_cap = 10000;
  // cmd_catalog upper bound on member order
  int catalog_bound = 6;
};

// Reads KEY=VALUE lines ('#' comments); unknown keys are ignored.
// Returns defaults when the file does not exist.
Limits load_limits(const std::string& path = "invsem.cfg");

}  // namespace invsem

#endif  // INVSEM_CONFIG_HPP_
