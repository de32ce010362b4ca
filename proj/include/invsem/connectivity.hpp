// connectivity.hpp -- x-covering, short/tight bypasses, connectivity predicates
#ifndef INVSEM_CONNECTIVITY_HPP_
#define INVSEM_CONNECTIVITY_HPP_

#include <optional>
#include <vector>

#include "invsem/semigroup.hpp"

namespace invsem {

// An ascending idempotent chain e_0 < e_1 < ... < e_n = x x^-1 where each
// e_{k-1} is x_k-covered by e_k for the stage x_k = e_k x (tight: each
// e_{k-1} x_k is nongroup or equals e_{k-1}).
struct Bypass {
  int x;
  std::vector<int> chain;   // e_0 .. e_n
  std::vector<int> stages;  // x_0 .. x_n, x_k = e_k x
  bool tight;
};

// e is x-covered by x x^-1: e < x x^-1 with no idempotent of <x> strictly
// between them.
bool x_covers(const FiniteInverseSemigroup& s, int e, int x);

// additionally requires e x nongroup or e x = e; x must be a nongroup
// element or an idempotent
bool tightly_covers(const FiniteInverseSemigroup& s, int e, int x);

// Lexicographically smallest valid bypass under index order (shortest
// length first), or nothing. Preconditions: e idempotent, e < x x^-1, and
// for the tight search x nongroup-or-idempotent.
std::optional<Bypass> find_short_bypass(const FiniteInverseSemigroup& s, int e,
                                        int x);
std::optional<Bypass> find_tight_bypass(const FiniteInverseSemigroup& s, int e,
                                        int x);

// re-derives every defining condition of `b` from scratch (fresh closures);
// throws InvariantFailure on any mismatch
void validate_bypass(const FiniteInverseSemigroup& s, const Bypass& b);

bool is_shortly_connected(const FiniteInverseSemigroup& s);
bool is_tightly_connected(const FiniteInverseSemigroup& s);

// N_S united with E_S is an order ideal of (S, <=)
bool order_ideal_check(const FiniteInverseSemigroup& s);

// the remark equivalence: tightly connected iff shortly connected and
// N_S u E_S an order ideal
bool jones_remark_agrees(const FiniteInverseSemigroup& s);

}  // namespace invsem

#endif  // INVSEM_CONNECTIVITY_HPP_
