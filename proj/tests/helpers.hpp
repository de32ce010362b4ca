// shared test utilities
#ifndef INVSEM_TESTS_HELPERS_HPP_
#define INVSEM_TESTS_HELPERS_HPP_

#include <cstdint>
#include <vector>

#include "invsem/partial_bijection.hpp"
#include "invsem/semigroup.hpp"

namespace invsem::testing {

// every element of the symmetric inverse monoid I_n, by brute enumeration
inline std::vector<PartialBijection> all_partial_bijections(int n) {
  std::vector<PartialBijection> out;
  std::vector<int> map(n, PartialBijection::undefined);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.emplace_back(static_cast<std::size_t>(n), map);
      return;
    }
    self(self, i + 1);  // i undefined
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      map[i] = j;
      self(self, i + 1);
      map[i] = PartialBijection::undefined;
      used[j] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

// |I_n| = sum_k C(n,k)^2 k!
inline std::uint64_t symmetric_inverse_monoid_order(int n) {
  auto binom = [](int a, int b) {
    std::uint64_t r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  std::uint64_t total = 0, fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    total += binom(n, k) * binom(n, k) * fact;
  }
  return total;
}

// 2-chain semilattice as a semigroup: e = 0 (top), f = 1 (zero)
inline FiniteInverseSemigroup two_chain() {
  return FiniteInverseSemigroup::from_table(2, {0, 1, 1, 1});
}

// cyclic group of order 2
inline FiniteInverseSemigroup c2() {
  return FiniteInverseSemigroup::from_table(2, {0, 1, 1, 0});
}

// five-element Brandt semigroup {a, a', e, f, 0} with a a' = e, a' a = f
inline FiniteInverseSemigroup brandt5() {
  // indices: 0 = a, 1 = a', 2 = e, 3 = f, 4 = zero
  std::vector<int> t = {
      4, 2, 4, 0, 4,  // a
      3, 4, 1, 4, 4,  // a'
      0, 4, 2, 4, 4,  // e
      4, 1, 4, 3, 4,  // f
      4, 4, 4, 4, 4,  // 0
  };
  return FiniteInverseSemigroup::from_table(5, t, std::vector<int>{1, 0, 2, 3, 4});
}

}  // namespace invsem::testing

#endif  // INVSEM_TESTS_HELPERS_HPP_
