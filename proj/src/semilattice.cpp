#include "invsem/semilattice.hpp"

#include <string>

#include "invsem/errors.hpp"

namespace invsem {

Semilattice Semilattice::from_meet_table(int order, std::vector<int> meet) {
  const int n = order;
  if (n < 0) throw InvalidInput("semilattice: negative order");
  if (meet.size() != static_cast<std::size_t>(n) * n)
    throw InvalidInput("semilattice: bad meet table size");
  for (int v : meet)
    if (v < 0 || v >= n) throw InvalidInput("semilattice: entry out of range");
  for (int a = 0; a < n; ++a) {
    if (meet[a * n + a] != a)
      throw InvalidInput("semilattice: meet not idempotent at " +
                         std::to_string(a));
    for (int b = 0; b < n; ++b)
      if (meet[a * n + b] != meet[b * n + a])
        throw InvalidInput("semilattice: meet not commutative at (" +
                           std::to_string(a) + "," + std::to_string(b) + ")");
  }
  if (auto w = associativity_defect(n, meet))
    throw InvalidInput("semilattice: meet not associative: witness (" +
                       std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) +
                       "," + std::to_string((*w)[2]) + ")");
  Semilattice e;
  e._order = n;
  e._meet = std::move(meet);
  return e;
}

Semilattice Semilattice::from_covers(
    int order, const std::vector<std::pair<int, int>>& below) {
  const int n = order;
  if (n < 0) throw InvalidInput("semilattice: negative order");
  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [lo, hi] : below) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      throw InvalidInput("semilattice: cover index out of range");
    if (lo == hi) throw InvalidInput("semilattice: reflexive cover");
    leq[lo * n + hi] = 1;
  }
  // transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (int j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq[i * n + j] && leq[j * n + i])
        throw InvalidInput("semilattice: order relation has a cycle through " +
                           std::to_string(i) + " and " + std::to_string(j));

  std::vector<int> meet(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int best = -1;
      for (int c = 0; c < n; ++c)
        if (leq[c * n + a] && leq[c * n + b] && (best == -1 || leq[best * n + c]))
          best = c;
      // best must dominate every common lower bound, else there is no meet
      for (int c = 0; c < n; ++c)
        if (leq[c * n + a] && leq[c * n + b] &&
            (best == -1 || !leq[c * n + best]))
          best = -1;
      if (best < 0)
        throw InvalidInput("semilattice: elements " + std::to_string(a) +
                           " and " + std::to_string(b) + " have no meet");
      meet[a * n + b] = best;
    }
  return from_meet_table(n, std::move(meet));
}

std::vector<int> Semilattice::principal_ideal(int e) const {
  if (e < 0 || e >= _order)
    throw InvalidInput("principal_ideal: element out of range");
  std::vector<int> ideal;
  for (int x = 0; x < _order; ++x)
    if (leq(x, e)) ideal.push_back(x);
  return ideal;
}

std::vector<std::pair<int, int>> Semilattice::hasse_covers() const {
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < _order; ++a)
    for (int b = 0; b < _order; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < _order && cover; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
      if (cover) covers.emplace_back(a, b);
    }
  return covers;
}

FiniteInverseSemigroup Semilattice::as_semigroup() const {
  return FiniteInverseSemigroup::from_table(_order, _meet);
}

}  // namespace invsem
