#include "invsem/iso.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "invsem/bitset.hpp"
#include "invsem/errors.hpp"

namespace invsem {

namespace {

using Profile = std::vector<std::int64_t>;

// Isomorphism-invariant fingerprint per element, computed from the table
// alone so it applies to arbitrary (plain) semigroups.
std::vector<Profile> element_profiles(int n, const std::vector<int>& t) {
  std::vector<Profile> prof(n);
  if (n == 0) return prof;
  auto green = compute_green(n, t);

  std::vector<Bitset> lid(n, Bitset(n)), rid(n, Bitset(n));
  for (int x = 0; x < n; ++x) {
    lid[x].set(x);
    rid[x].set(x);
    for (int s = 0; s < n; ++s) {
      lid[x].set(t[s * n + x]);
      rid[x].set(t[x * n + s]);
    }
  }

  for (int x = 0; x < n; ++x) {
    Profile& p = prof[x];
    p.push_back(t[x * n + x] == x);  // idempotent
    p.push_back(static_cast<std::int64_t>(lid[x].count()));
    p.push_back(static_cast<std::int64_t>(rid[x].count()));
    for (const auto& g : green)
      p.push_back(static_cast<std::int64_t>(g.blocks[g.block_of[x]].size()));
    // index and period of the cyclic subsemigroup <x>
    {
      std::vector<int> first_seen(n, -1);
      int v = x, step = 0;
      while (first_seen[v] == -1) {
        first_seen[v] = step++;
        v = t[v * n + x];
      }
      p.push_back(first_seen[v]);         // index
      p.push_back(step - first_seen[v]);  // period
    }
    std::int64_t lstab = 0, rstab = 0;
    for (int y = 0; y < n; ++y) {
      if (t[x * n + y] == x) ++rstab;
      if (t[y * n + x] == x) ++lstab;
    }
    p.push_back(lstab);
    p.push_back(rstab);
  }
  return prof;
}

struct SpanData {
  std::vector<int> span;          // elements in closure-discovery order
  std::vector<int> pos_of;        // element -> position in span
  std::vector<std::array<int, 2>> deriv;  // position -> factor positions, or {-1,-1}
  std::vector<int> chunk_start;   // per generator level
  std::vector<int> gens;
};

SpanData build_span(int n, const std::vector<int>& t) {
  SpanData d;
  d.pos_of.assign(n, -1);
  auto add = [&](int x, int a, int b) {
    d.pos_of[x] = static_cast<int>(d.span.size());
    d.span.push_back(x);
    d.deriv.push_back({a, b});
  };
  auto close = [&]() {
    for (std::size_t i = 0; i < d.span.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        int p = t[d.span[i] * n + d.span[j]];
        if (d.pos_of[p] < 0) add(p, static_cast<int>(i), static_cast<int>(j));
        int q = t[d.span[j] * n + d.span[i]];
        if (d.pos_of[q] < 0) add(q, static_cast<int>(j), static_cast<int>(i));
      }
  };
  for (int x = 0; x < n; ++x) {
    if (d.pos_of[x] >= 0) continue;
    d.chunk_start.push_back(static_cast<int>(d.span.size()));
    d.gens.push_back(x);
    add(x, -1, -1);
    close();
  }
  return d;
}

struct Searcher {
  int n;
  const std::vector<int>& t1;
  const std::vector<int>& t2;
  const IsoLimits& limits;
  const std::function<bool(const std::vector<int>&)>& visit;

  SpanData sd;
  std::vector<int> bucket1, bucket2;        // element -> profile bucket
  std::vector<std::vector<int>> gen_cands;  // per level
  std::vector<int> img;                     // span position -> image element
  std::vector<char> used;                   // image element taken
  std::uint64_t steps = 0;
  std::uint64_t found = 0;
  bool stopped = false;

  bool run() {
    img.assign(sd.span.size(), -1);
    used.assign(n, 0);
    descend(0);
    return !stopped;
  }

  void bump() {
    if (++steps > limits.step_limit)
      throw CapExceeded("isomorphism search: step limit exceeded");
  }

  void descend(std::size_t level) {
    if (stopped) return;
    if (level == sd.gens.size()) {
      std::vector<int> phi(n);
      for (std::size_t p = 0; p < sd.span.size(); ++p) phi[sd.span[p]] = img[p];
      ++found;
      if (!visit(phi)) stopped = true;
      return;
    }
    int begin = sd.chunk_start[level];
    int end = level + 1 < sd.chunk_start.size()
                  ? sd.chunk_start[level + 1]
                  : static_cast<int>(sd.span.size());
    for (int c : gen_cands[level]) {
      if (stopped) return;
      if (used[c]) continue;
      bump();
      int filled = begin;
      bool ok = true;
      for (int pos = begin; pos < end; ++pos) {
        int v;
        if (pos == begin) {
          v = c;
        } else {
          v = t2[img[sd.deriv[pos][0]] * n + img[sd.deriv[pos][1]]];
        }
        if (used[v] || bucket2[v] != bucket1[sd.span[pos]]) {
          ok = false;
          break;
        }
        img[pos] = v;
        used[v] = 1;
        filled = pos + 1;
      }
      if (ok) {
        // the prefix is product-closed, so every pair lands inside it
        for (int pos = begin; pos < end && ok; ++pos) {
          int e = sd.span[pos];
          for (int q = 0; q <= pos; ++q) {
            int f = sd.span[q];
            if (img[sd.pos_of[t1[e * n + f]]] != t2[img[pos] * n + img[q]] ||
                img[sd.pos_of[t1[f * n + e]]] != t2[img[q] * n + img[pos]]) {
              ok = false;
              break;
            }
          }
        }
      }
      if (ok) descend(level + 1);
      for (int pos = begin; pos < filled; ++pos) {
        used[img[pos]] = 0;
        img[pos] = -1;
      }
    }
  }
};

std::uint64_t search(int n1, const std::vector<int>& t1, int n2,
                     const std::vector<int>& t2, const IsoLimits& limits,
                     const std::function<bool(const std::vector<int>&)>& visit) {
  if (n1 != n2) return 0;
  if (n1 == 0) {
    visit({});
    return 1;
  }
  auto prof1 = element_profiles(n1, t1);
  auto prof2 = element_profiles(n2, t2);

  std::map<Profile, int> bucket_ids;
  for (const auto& p : prof1) bucket_ids.emplace(p, 0);
  for (const auto& p : prof2) bucket_ids.emplace(p, 0);
  int next = 0;
  for (auto& [p, id] : bucket_ids) id = next++;

  std::vector<int> bucket1(n1), bucket2(n2);
  std::vector<int> count1(next, 0), count2(next, 0);
  for (int x = 0; x < n1; ++x) ++count1[bucket1[x] = bucket_ids[prof1[x]]];
  for (int x = 0; x < n2; ++x) ++count2[bucket2[x] = bucket_ids[prof2[x]]];
  if (count1 != count2) return 0;

  Searcher s{n1,   t1, t2, limits, visit, build_span(n1, t1),
             std::move(bucket1), std::move(bucket2),
             {},    {}, {}, 0,      0,     false};
  s.gen_cands.resize(s.sd.gens.size());
  for (std::size_t level = 0; level < s.sd.gens.size(); ++level) {
    int g = s.sd.gens[level];
    for (int y = 0; y < n2; ++y)
      if (s.bucket2[y] == s.bucket1[g]) s.gen_cands[level].push_back(y);
  }
  s.run();
  return s.found;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(int n1,
                                                 const std::vector<int>& t1,
                                                 int n2,
                                                 const std::vector<int>& t2,
                                                 const IsoLimits& limits) {
  std::optional<std::vector<int>> result;
  search(n1, t1, n2, t2, limits, [&](const std::vector<int>& phi) {
    result = phi;
    return false;
  });
  return result;
}

std::uint64_t for_each_isomorphism(
    int n1, const std::vector<int>& t1, int n2, const std::vector<int>& t2,
    const IsoLimits& limits,
    const std::function<bool(const std::vector<int>&)>& visit) {
  return search(n1, t1, n2, t2, limits, visit);
}

IsoEnumeration enumerate_isomorphisms(int n1, const std::vector<int>& t1,
                                      int n2, const std::vector<int>& t2,
                                      const IsoLimits& limits,
                                      std::size_t max_results) {
  IsoEnumeration out;
  search(n1, t1, n2, t2, limits, [&](const std::vector<int>& phi) {
    if (out.found.size() >= max_results) {
      out.complete = false;
      return false;
    }
    out.found.push_back(phi);
    return true;
  });
  return out;
}

std::optional<std::vector<int>> find_isomorphism(
    const FiniteInverseSemigroup& s, const FiniteInverseSemigroup& t,
    const IsoLimits& limits) {
  return find_isomorphism(s.order(), s.table(), t.order(), t.table(), limits);
}

IsoEnumeration enumerate_isomorphisms(const FiniteInverseSemigroup& s,
                                      const FiniteInverseSemigroup& t,
                                      const IsoLimits& limits,
                                      std::size_t max_results) {
  return enumerate_isomorphisms(s.order(), s.table(), t.order(), t.table(),
                                limits, max_results);
}

std::uint64_t automorphism_count(const FiniteInverseSemigroup& s,
                                 const IsoLimits& limits) {
  return for_each_isomorphism(s.order(), s.table(), s.order(), s.table(),
                              limits, [](const std::vector<int>&) { return true; });
}

}  // namespace invsem
