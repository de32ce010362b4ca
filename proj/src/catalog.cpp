#include "invsem/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "invsem/errors.hpp"

namespace invsem {

std::vector<int> canonical_table(int order, const std::vector<int>& table) {
  const int n = order;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = table;
  std::vector<int> relabeled(table.size());
  do {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        relabeled[perm[i] * n + perm[j]] = perm[table[i * n + j]];
    if (relabeled < best) best = relabeled;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x + 1);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// The ambient symmetric inverse monoid I_n with integer element ids.
struct Ambient {
  int n;
  std::vector<std::vector<int>> maps;  // id -> mapping vector
  std::vector<int> code_to_id;         // base-(n+1) code -> id
  std::vector<int> inv;                // id -> id of the inverse
  std::vector<std::vector<int>> conj;  // perm index -> id -> conjugated id

  explicit Ambient(int universe) : n(universe) {
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == n) {
        maps.push_back(map);
        return;
      }
      self(self, i + 1);
      for (int j = 0; j < n; ++j) {
        if (used[j]) continue;
        used[j] = 1;
        map[i] = j;
        self(self, i + 1);
        map[i] = -1;
        used[j] = 0;
      }
    };
    rec(rec, 0);
    std::sort(maps.begin(), maps.end());

    int codes = 1;
    for (int i = 0; i < n; ++i) codes *= n + 1;
    code_to_id.assign(std::max(codes, 1), -1);
    for (std::size_t id = 0; id < maps.size(); ++id)
      code_to_id[encode(maps[id])] = static_cast<int>(id);

    inv.resize(maps.size());
    for (std::size_t id = 0; id < maps.size(); ++id) {
      std::vector<int> iv(n, -1);
      for (int i = 0; i < n; ++i)
        if (maps[id][i] >= 0) iv[maps[id][i]] = i;
      inv[id] = code_to_id[encode(iv)];
    }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> row(maps.size());
      for (std::size_t id = 0; id < maps.size(); ++id) {
        std::vector<int> c(n, -1);
        for (int i = 0; i < n; ++i)
          if (maps[id][i] >= 0) c[perm[i]] = perm[maps[id][i]];
        row[id] = code_to_id[encode(c)];
      }
      conj.push_back(std::move(row));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  int encode(const std::vector<int>& map) const {
    int code = 0;
    for (int i = n - 1; i >= 0; --i) code = code * (n + 1) + (map[i] + 1);
    return code;
  }

  int compose(int a, int b) const {
    std::vector<int> c(n, -1);
    for (int i = 0; i < n; ++i) {
      int j = maps[a][i];
      if (j >= 0) c[i] = maps[b][j];
    }
    return code_to_id[encode(c)];
  }

  // inverse-closed closure of `seed`; empty result signals the cap burst
  std::vector<int> closure(std::vector<int> seed, std::size_t cap) const {
    std::unordered_set<int> in(seed.begin(), seed.end());
    std::vector<int> members(in.begin(), in.end());
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i)
      if (in.insert(inv[members[i]]).second) members.push_back(inv[members[i]]);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members.size() > cap) return {};
      for (std::size_t j = 0; j <= i; ++j) {
        for (int p : {compose(members[i], members[j]),
                      compose(members[j], members[i])}) {
          if (in.insert(p).second) {
            members.push_back(p);
            if (in.insert(inv[p]).second) members.push_back(inv[p]);
          }
        }
      }
    }
    if (members.size() > cap) return {};
    std::sort(members.begin(), members.end());
    return members;
  }

  std::vector<int> canon(const std::vector<int>& sorted_ids) const {
    std::vector<int> best;
    std::vector<int> cur(sorted_ids.size());
    for (const auto& row : conj) {
      for (std::size_t i = 0; i < sorted_ids.size(); ++i)
        cur[i] = row[sorted_ids[i]];
      std::sort(cur.begin(), cur.end());
      if (best.empty() || cur < best) best = cur;
    }
    return best;
  }
};

}  // namespace

Catalog build_catalog(int max_order, const Limits& limits) {
  if (max_order < 0) throw InvalidInput("catalog: negative order bound");
  if (max_order > limits.catalog_bound)
    throw CapExceeded("catalog: order bound " + std::to_string(max_order) +
                      " exceeds configured limit " +
                      std::to_string(limits.catalog_bound));
  Catalog catalog;
  catalog.max_order = max_order;
  if (max_order == 0) return catalog;

  Ambient amb(max_order);
  const std::size_t cap = static_cast<std::size_t>(max_order);

  // candidate generators: elements with small monogenic closure
  std::vector<int> candidates;
  for (std::size_t id = 0; id < amb.maps.size(); ++id)
    if (!amb.closure({static_cast<int>(id)}, cap).empty())
      candidates.push_back(static_cast<int>(id));

  std::unordered_set<std::vector<int>, VecHash> seen;
  std::vector<std::vector<int>> states;  // canonical sorted id vectors
  seen.emplace();                        // the empty set
  states.push_back({});
  for (std::size_t head = 0; head < states.size(); ++head) {
    std::vector<int> base = states[head];
    std::unordered_set<int> present(base.begin(), base.end());
    for (int y : candidates) {
      if (present.count(y)) continue;
      std::vector<int> seed = base;
      seed.push_back(y);
      std::vector<int> closed = amb.closure(std::move(seed), cap);
      if (closed.empty()) continue;
      std::vector<int> canonical = amb.canon(closed);
      if (seen.insert(canonical).second) states.push_back(std::move(canonical));
    }
  }

  // abstract tables, deduplicated by canonical form
  std::set<std::pair<int, std::vector<int>>> classes;
  for (const auto& state : states) {
    if (state.empty()) continue;
    const int k = static_cast<int>(state.size());
    std::vector<int> local(amb.maps.size(), -1);
    for (int i = 0; i < k; ++i) local[state[i]] = i;
    std::vector<int> table(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        table[i * k + j] = local[amb.compose(state[i], state[j])];
    classes.emplace(k, canonical_table(k, table));
  }

  for (const auto& key : classes)
    catalog.members.push_back(
        FiniteInverseSemigroup::from_table(key.first, key.second));
  return catalog;
}

std::vector<int> catalog_counts(const Catalog& catalog) {
  std::vector<int> counts(catalog.max_order + 1, 0);
  for (const auto& m : catalog.members) ++counts[m.order()];
  return counts;
}

std::vector<Semilattice> enumerate_semilattices(int max_order) {
  std::vector<Semilattice> out;
  for (int n = 1; n <= max_order; ++n) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) cells.emplace_back(i, j);
    std::vector<int> meet(static_cast<std::size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i) meet[i * n + i] = i;

    auto get = [&](int a, int b) { return meet[a * n + b]; };
    auto put = [&](int a, int b, int v) {
      meet[a * n + b] = v;
      meet[b * n + a] = v;
    };

    auto rec = [&](auto&& self, std::size_t ci) -> void {
      if (ci == cells.size()) {
        if (associativity_defect(n, meet)) return;
        if (canonical_table(n, meet) != meet) return;
        out.push_back(Semilattice::from_meet_table(n, meet));
        return;
      }
      auto [i, j] = cells[ci];
      for (int c = 0; c < n; ++c) {
        // c = i ^ j requires c ^ i = c and c ^ j = c where already known
        if (get(std::min(c, i), std::max(c, i)) != -1 &&
            get(std::min(c, i), std::max(c, i)) != c)
          continue;
        if (get(std::min(c, j), std::max(c, j)) != -1 &&
            get(std::min(c, j), std::max(c, j)) != c)
          continue;
        put(i, j, c);
        self(self, ci + 1);
        put(i, j, -1);
      }
    };
    rec(rec, 0);
  }
  return out;
}

}  // namespace invsem
