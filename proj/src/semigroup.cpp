#include "invsem/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "invsem/errors.hpp"

namespace invsem {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

void check_table_range(int n, const std::vector<int>& table) {
  if (n < 0) throw InvalidInput("table: negative order");
  if (table.size() != static_cast<std::size_t>(n) * n)
    throw InvalidInput("table: expected " + std::to_string(n * n) +
                       " entries, got " + std::to_string(table.size()));
  for (int v : table)
    if (v < 0 || v >= n)
      throw InvalidInput("table: entry " + std::to_string(v) + " out of range");
}

// Light's associativity test: with G a generating set of the magma,
// (a g) b == a (g b) for all a, b and g in G implies associativity.
std::optional<std::array<int, 3>> light_defect(int n,
                                               const std::vector<int>& t) {
  std::vector<char> in(n, 0);
  std::vector<int> members, gens;
  auto close = [&]() {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        int p = t[members[i] * n + members[j]];
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
        int q = t[members[j] * n + members[i]];
        if (!in[q]) {
          in[q] = 1;
          members.push_back(q);
        }
      }
    }
  };
  for (int x = 0; x < n; ++x) {
    if (in[x]) continue;
    in[x] = 1;
    members.push_back(x);
    gens.push_back(x);
    close();
  }
  for (int g : gens)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (t[t[a * n + g] * n + b] != t[a * n + t[g * n + b]])
          return std::array<int, 3>{a, g, b};
  return std::nullopt;
}

constexpr int kNaiveAssocLimit = 128;

}  // namespace

std::optional<std::array<int, 3>> associativity_defect(
    int order, const std::vector<int>& table) {
  const int n = order;
  if (n > kNaiveAssocLimit) return light_defect(n, table);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = table[a * n + b];
      for (int c = 0; c < n; ++c)
        if (table[ab * n + c] != table[a * n + table[b * n + c]])
          return std::array<int, 3>{a, b, c};
    }
  return std::nullopt;
}

std::array<GreenPartition, 5> compute_green(int order,
                                            const std::vector<int>& table) {
  const int n = order;
  std::vector<Bitset> lid(n, Bitset(n)), rid(n, Bitset(n)), jid;
  for (int x = 0; x < n; ++x) {
    lid[x].set(x);
    rid[x].set(x);
    for (int s = 0; s < n; ++s) {
      lid[x].set(table[s * n + x]);
      rid[x].set(table[x * n + s]);
    }
  }
  jid.reserve(n);
  for (int x = 0; x < n; ++x) {
    Bitset j = lid[x] | rid[x];
    for (int s = 0; s < n; ++s) j |= rid[table[s * n + x]];
    jid.push_back(std::move(j));
  }

  auto partition_by_ideal = [n](GreenRelation rel,
                                const std::vector<Bitset>& ideal) {
    GreenPartition p;
    p.relation = rel;
    p.block_of.assign(n, -1);
    std::unordered_map<Bitset, int, BitsetHash> seen;
    for (int x = 0; x < n; ++x) {
      auto [it, fresh] = seen.emplace(ideal[x], static_cast<int>(p.blocks.size()));
      if (fresh) p.blocks.emplace_back();
      p.block_of[x] = it->second;
      p.blocks[it->second].push_back(x);
    }
    p.block_leq.assign(p.blocks.size(),
                       std::vector<bool>(p.blocks.size(), false));
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
      for (std::size_t j = 0; j < p.blocks.size(); ++j)
        p.block_leq[i][j] = ideal[p.blocks[i][0]].subset_of(ideal[p.blocks[j][0]]);
    return p;
  };

  GreenPartition l = partition_by_ideal(GreenRelation::L, lid);
  GreenPartition r = partition_by_ideal(GreenRelation::R, rid);
  GreenPartition j = partition_by_ideal(GreenRelation::J, jid);

  GreenPartition h;
  h.relation = GreenRelation::H;
  h.block_of.assign(n, -1);
  {
    std::unordered_map<std::uint64_t, int> seen;
    for (int x = 0; x < n; ++x) {
      std::uint64_t key =
          (static_cast<std::uint64_t>(l.block_of[x]) << 32) |
          static_cast<std::uint32_t>(r.block_of[x]);
      auto [it, fresh] = seen.emplace(key, static_cast<int>(h.blocks.size()));
      if (fresh) h.blocks.emplace_back();
      h.block_of[x] = it->second;
      h.blocks[it->second].push_back(x);
    }
  }

  // D = join of L and R (components of the union relation)
  GreenPartition d;
  d.relation = GreenRelation::D;
  d.block_of.assign(n, -1);
  {
    std::vector<int> parent(n);
    for (int x = 0; x < n; ++x) parent[x] = x;
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto& blk : l.blocks)
      for (std::size_t i = 1; i < blk.size(); ++i) unite(blk[0], blk[i]);
    for (const auto& blk : r.blocks)
      for (std::size_t i = 1; i < blk.size(); ++i) unite(blk[0], blk[i]);
    std::unordered_map<int, int> seen;
    for (int x = 0; x < n; ++x) {
      int root = find(x);
      auto [it, fresh] = seen.emplace(root, static_cast<int>(d.blocks.size()));
      if (fresh) d.blocks.emplace_back();
      d.block_of[x] = it->second;
      d.blocks[it->second].push_back(x);
    }
  }

  // finite semigroups satisfy D = J; block ids agree because both use
  // first-seen order over ascending elements
  if (d.block_of != j.block_of)
    throw InvariantFailure("compute_green: D != J on a finite table");
  d.block_leq = j.block_leq;

  return {std::move(h), std::move(l), std::move(r), std::move(d),
          std::move(j)};
}

PlainSemigroup PlainSemigroup::from_table(int order, std::vector<int> table) {
  check_table_range(order, table);
  if (auto w = associativity_defect(order, table))
    throw InvalidInput("table not associative: witness " +
                       triple((*w)[0], (*w)[1], (*w)[2]));
  PlainSemigroup s;
  s._order = order;
  s._table = std::move(table);
  return s;
}

FiniteInverseSemigroup FiniteInverseSemigroup::from_table(
    int order, std::vector<int> table, std::optional<std::vector<int>> inv,
    std::optional<std::vector<PartialBijection>> rep) {
  const int n = order;
  check_table_range(n, table);
  if (inv && inv->size() != static_cast<std::size_t>(n))
    throw InvalidInput("inv: expected " + std::to_string(n) + " entries");
  if (inv)
    for (int v : *inv)
      if (v < 0 || v >= n) throw InvalidInput("inv: entry out of range");

  if (auto w = associativity_defect(n, table))
    throw InvalidInput("table not associative: witness " +
                       triple((*w)[0], (*w)[1], (*w)[2]));

  // regularity: every x needs some y with xyx = x and yxy = y
  std::vector<int> computed_inv(n, -1);
  std::vector<int> candidate_count(n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int xy = table[x * n + y];
      if (table[xy * n + x] != x) continue;
      int yx = table[y * n + x];
      if (table[yx * n + y] != y) continue;
      ++candidate_count[x];
      if (computed_inv[x] == -1) computed_inv[x] = y;
    }
    if (computed_inv[x] == -1)
      throw InvalidInput("table not regular: element " + std::to_string(x) +
                         " has no inverse");
  }

  // commuting idempotents (with regularity this certifies uniqueness of
  // inverses, i.e. the inverse-semigroup axioms)
  std::vector<int> idems;
  for (int x = 0; x < n; ++x)
    if (table[x * n + x] == x) idems.push_back(x);
  for (int e : idems)
    for (int f : idems)
      if (table[e * n + f] != table[f * n + e])
        throw InvalidInput("idempotents do not commute: witness (" +
                           std::to_string(e) + "," + std::to_string(f) + ")");

  for (int x = 0; x < n; ++x)
    if (candidate_count[x] > 1)
      throw InvalidInput("ambiguous inverse for element " + std::to_string(x));

  if (inv) {
    for (int x = 0; x < n; ++x) {
      int y = (*inv)[x];
      if (table[table[x * n + y] * n + x] != x ||
          table[table[y * n + x] * n + y] != y)
        throw InvalidInput("inv entry " + std::to_string(y) +
                           " is not an inverse of " + std::to_string(x));
    }
  } else {
    inv = computed_inv;
  }

  for (int x = 0; x < n; ++x)
    if ((*inv)[(*inv)[x]] != x)
      throw InvariantFailure("inverse map is not an involution at " +
                             std::to_string(x));

  if (rep) {
    if (rep->size() != static_cast<std::size_t>(n))
      throw InvalidInput("concrete_rep: expected " + std::to_string(n) +
                         " partial bijections");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((*rep)[i] == (*rep)[j])
          throw InvalidInput("concrete_rep not faithful: elements " +
                             std::to_string(i) + " and " + std::to_string(j) +
                             " coincide");
    for (int i = 0; i < n; ++i) {
      if ((*rep)[(*inv)[i]] != (*rep)[i].inverse())
        throw InvalidInput("concrete_rep: inverse of element " +
                           std::to_string(i) + " misrepresented");
      for (int j = 0; j < n; ++j)
        if ((*rep)[i] * (*rep)[j] != (*rep)[table[i * n + j]])
          throw InvalidInput("concrete_rep not multiplicative at (" +
                             std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  FiniteInverseSemigroup s;
  s._order = n;
  s._table = std::move(table);
  s._inv = std::move(*inv);
  s._rep = std::move(rep);
  s._idempotents = std::move(idems);
  s.build_caches();
  return s;
}

void FiniteInverseSemigroup::build_caches() {
  const int n = _order;
  _green = compute_green(n, _table);

  _leq.assign(n, Bitset(n));
  for (int a = 0; a < n; ++a) {
    int e = product(a, _inv[a]);  // a a^-1
    for (int b = 0; b < n; ++b)
      if (product(e, b) == a) _leq[a].set(b);
  }

  _nongroup_flag.assign(n, 0);
  for (int a = 0; a < n; ++a)
    if (product(a, _inv[a]) != product(_inv[a], a)) {
      _nongroup_flag[a] = 1;
      _nongroup.push_back(a);
    }

  const auto& h = green(GreenRelation::H);
  _combinatorial = true;
  for (const auto& blk : h.blocks)
    if (blk.size() > 1) {
      _combinatorial = false;
      break;
    }

  _fundamental = true;
  for (int x = 0; x < n && _fundamental; ++x)
    for (int y = x + 1; y < n && _fundamental; ++y) {
      bool separated = false;
      for (int e : _idempotents) {
        int cx = product(product(_inv[x], e), x);
        int cy = product(product(_inv[y], e), y);
        if (cx != cy) {
          separated = true;
          break;
        }
      }
      if (!separated) _fundamental = false;
    }

  const auto& d = green(GreenRelation::D);
  _isolated.clear();
  _has_ntis = false;
  for (int e : _idempotents) {
    std::size_t dsz = d.blocks[d.block_of[e]].size();
    std::size_t hsz = h.blocks[h.block_of[e]].size();
    if (dsz == hsz) {
      _isolated.push_back(e);
      if (hsz > 1) _has_ntis = true;
    }
  }
}

Bitset FiniteInverseSemigroup::closure(const Bitset& seed, bool inverse_closed,
                                       std::size_t cap) const {
  Bitset in(_order);
  std::vector<int> members;
  auto add = [&](int x) {
    if (in.test(x)) return;
    in.set(x);
    members.push_back(x);
    if (inverse_closed && !in.test(_inv[x])) {
      in.set(_inv[x]);
      members.push_back(_inv[x]);
    }
  };
  seed.for_each(add);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members.size() > cap) throw CapExceeded("closure cap exceeded");
    for (std::size_t j = 0; j <= i; ++j) {
      add(product(members[i], members[j]));
      add(product(members[j], members[i]));
    }
  }
  if (members.size() > cap) throw CapExceeded("closure cap exceeded");
  return in;
}

Bitset FiniteInverseSemigroup::closure_of(const std::vector<int>& seed,
                                          bool inverse_closed,
                                          std::size_t cap) const {
  Bitset b(_order);
  for (int x : seed) b.set(x);
  return closure(b, inverse_closed, cap);
}

FiniteInverseSemigroup FiniteInverseSemigroup::subsemigroup(
    const Bitset& members, std::vector<int>* index_map) const {
  std::vector<int> elems = members.members();
  std::vector<int> local(_order, -1);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<int>(i);
  const int k = static_cast<int>(elems.size());
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int p = product(elems[i], elems[j]);
      if (local[p] < 0)
        throw InvalidInput("subsemigroup: subset not closed under product");
      table[i * k + j] = local[p];
    }
  std::optional<std::vector<int>> inv;
  {
    std::vector<int> iv(k);
    for (int i = 0; i < k; ++i) {
      if (local[_inv[elems[i]]] < 0)
        throw InvalidInput("subsemigroup: subset not closed under inverse");
      iv[i] = local[_inv[elems[i]]];
    }
    inv = std::move(iv);
  }
  std::optional<std::vector<PartialBijection>> rep;
  if (_rep) {
    std::vector<PartialBijection> r;
    r.reserve(k);
    for (int e : elems) r.push_back((*_rep)[e]);
    rep = std::move(r);
  }
  if (index_map) *index_map = elems;
  return from_table(k, std::move(table), std::move(inv), std::move(rep));
}

MonogenicReport FiniteInverseSemigroup::monogenic(int x) const {
  MonogenicReport rep;
  rep.generator = x;
  Bitset u = closure_of({x});
  rep.elements = u.members();

  int xxi = product(x, _inv[x]);
  int xix = product(_inv[x], x);
  if (xxi == xix) {
    rep.kind = MonogenicReport::Case::group;
  } else if (!natural_leq(xxi, xix) && !natural_leq(xix, xxi)) {
    rep.kind = MonogenicReport::Case::incomparable;
  } else {
    // the bicyclic case: impossible in a finite semigroup
    throw InvariantFailure("monogenic: comparable distinct xx^-1, x^-1x");
  }

  std::vector<int> parent_of;
  FiniteInverseSemigroup sub = subsemigroup(u, &parent_of);
  const auto& j = sub.green(GreenRelation::J);
  int min_block = -1;
  for (std::size_t b = 0; b < j.blocks.size(); ++b) {
    bool minimal = true;
    for (std::size_t c = 0; c < j.blocks.size(); ++c)
      if (!j.block_leq[b][c]) {
        minimal = false;
        break;
      }
    if (minimal) {
      min_block = static_cast<int>(b);
      break;
    }
  }
  if (min_block < 0)
    throw InvariantFailure("monogenic: no minimal ideal in a finite semigroup");
  for (int e : j.blocks[min_block]) rep.kernel.push_back(parent_of[e]);

  // the kernel of a finite monogenic inverse semigroup is a cyclic group
  rep.kernel_kind = MonogenicReport::KernelKind::none;
  {
    const auto& k = rep.kernel;
    Bitset kb(_order);
    for (int e : k) kb.set(e);
    bool group = true;
    int identity = -1;
    for (int a : k) {
      for (int b : k)
        if (!kb.test(product(a, b))) group = false;
      if (is_idempotent(a)) {
        if (identity != -1) group = false;  // a group has one idempotent
        identity = a;
      }
      if (!kb.test(_inv[a])) group = false;
    }
    if (group && identity != -1) {
      for (int g : k) {  // cyclic: some element's powers cover the kernel
        std::size_t covered = 1;
        Bitset seen(_order);
        seen.set(g);
        int p = g;
        while (true) {
          p = product(p, g);
          if (seen.test(p)) break;
          seen.set(p);
          ++covered;
        }
        if (covered == k.size()) {
          rep.kernel_kind = MonogenicReport::KernelKind::cyclic_group;
          break;
        }
      }
    }
  }
  return rep;
}

FiniteInverseSemigroup generate_closure(
    std::size_t universe_size, const std::vector<PartialBijection>& generators,
    const Limits& limits) {
  if (universe_size > limits.universe_cap)
    throw CapExceeded("generate_closure: universe size " +
                      std::to_string(universe_size) + " exceeds cap " +
                      std::to_string(limits.universe_cap));
  for (const auto& g : generators)
    if (g.universe_size() != universe_size)
      throw InvalidInput("generate_closure: generator universe mismatch");

  std::unordered_set<PartialBijection> seen;
  std::vector<PartialBijection> members;
  auto add = [&](const PartialBijection& p) {
    if (seen.insert(p).second) {
      members.push_back(p);
      members.push_back(p.inverse());
      if (!seen.insert(members.back()).second) members.pop_back();
    }
  };
  for (const auto& g : generators) add(g);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members.size() > limits.closure_cap)
      throw CapExceeded("generate_closure: closure cap exceeded");
    for (std::size_t j = 0; j <= i; ++j) {
      add(members[i] * members[j]);
      add(members[j] * members[i]);
    }
  }
  if (members.size() > limits.closure_cap)
    throw CapExceeded("generate_closure: closure cap exceeded");

  std::sort(members.begin(), members.end());
  std::unordered_map<PartialBijection, int> index;
  for (std::size_t i = 0; i < members.size(); ++i)
    index.emplace(members[i], static_cast<int>(i));

  const int n = static_cast<int>(members.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) {
    inv[i] = index.at(members[i].inverse());
    for (int j = 0; j < n; ++j)
      table[i * n + j] = index.at(members[i] * members[j]);
  }
  return FiniteInverseSemigroup::from_table(n, std::move(table), std::move(inv),
                                            std::move(members));
}

FiniteInverseSemigroup wagner_preston(const FiniteInverseSemigroup& s) {
  const int n = s.order();
  std::vector<PartialBijection> rep;
  rep.reserve(n);
  for (int x = 0; x < n; ++x) {
    int e = s.product(x, s.inverse(x));
    std::vector<int> m(n, PartialBijection::undefined);
    for (int a = 0; a < n; ++a)
      if (s.product(a, e) == a) m[a] = s.product(a, x);
    rep.emplace_back(static_cast<std::size_t>(n), std::move(m));
  }
  try {
    return FiniteInverseSemigroup::from_table(n, s.table(), s.inv(),
                                              std::move(rep));
  } catch (const InvalidInput& err) {
    throw InvariantFailure(std::string("wagner_preston: ") + err.what());
  }
}

std::array<GreenPartition, 4> green_from_representation(
    const FiniteInverseSemigroup& s) {
  const auto* rep = s.concrete_rep();
  if (!rep)
    throw InvalidInput("green_from_representation: no concrete_rep present");
  const int n = s.order();

  auto partition_by = [&](GreenRelation rel, auto key_of) {
    GreenPartition p;
    p.relation = rel;
    p.block_of.assign(n, -1);
    std::unordered_map<Bitset, int, BitsetHash> seen;
    for (int x = 0; x < n; ++x) {
      auto [it, fresh] =
          seen.emplace(key_of((*rep)[x]), static_cast<int>(p.blocks.size()));
      if (fresh) p.blocks.emplace_back();
      p.block_of[x] = it->second;
      p.blocks[it->second].push_back(x);
    }
    return p;
  };
  auto dom_bits = [](const PartialBijection& pb) {
    Bitset b(pb.universe_size());
    for (int i : pb.domain()) b.set(i);
    return b;
  };
  auto im_bits = [](const PartialBijection& pb) {
    Bitset b(pb.universe_size());
    for (int i : pb.image()) b.set(i);
    return b;
  };

  // with left-to-right composition: R is same-domain, L is same-image
  GreenPartition r = partition_by(GreenRelation::R, dom_bits);
  GreenPartition l = partition_by(GreenRelation::L, im_bits);

  GreenPartition h;
  h.relation = GreenRelation::H;
  h.block_of.assign(n, -1);
  {
    std::unordered_map<std::uint64_t, int> seen;
    for (int x = 0; x < n; ++x) {
      std::uint64_t key =
          (static_cast<std::uint64_t>(l.block_of[x]) << 32) |
          static_cast<std::uint32_t>(r.block_of[x]);
      auto [it, fresh] = seen.emplace(key, static_cast<int>(h.blocks.size()));
      if (fresh) h.blocks.emplace_back();
      h.block_of[x] = it->second;
      h.blocks[it->second].push_back(x);
    }
  }

  GreenPartition d;
  d.relation = GreenRelation::D;
  d.block_of.assign(n, -1);
  {
    std::vector<int> parent(n);
    for (int x = 0; x < n; ++x) parent[x] = x;
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& blk : l.blocks)
      for (std::size_t i = 1; i < blk.size(); ++i)
        parent[find(blk[i])] = find(blk[0]);
    for (const auto& blk : r.blocks)
      for (std::size_t i = 1; i < blk.size(); ++i)
        parent[find(blk[i])] = find(blk[0]);
    std::unordered_map<int, int> seen;
    for (int x = 0; x < n; ++x) {
      auto [it, fresh] = seen.emplace(find(x), static_cast<int>(d.blocks.size()));
      if (fresh) d.blocks.emplace_back();
      d.block_of[x] = it->second;
      d.blocks[it->second].push_back(x);
    }
  }

  return {std::move(h), std::move(l), std::move(r), std::move(d)};
}

bool check_conjugation_criterion(const FiniteInverseSemigroup& s,
                                 const FiniteInverseSemigroup& t,
                                 const std::vector<int>& phi) {
  const int n = s.order();
  if (!s.is_fundamental())
    throw InvalidInput("conjugation criterion: S is not fundamental");
  if (t.order() != n || phi.size() != static_cast<std::size_t>(n))
    throw InvalidInput("conjugation criterion: phi is not a bijection of S onto T");
  std::vector<char> hit(n, 0);
  for (int v : phi) {
    if (v < 0 || v >= n || hit[v])
      throw InvalidInput("conjugation criterion: phi is not a bijection of S onto T");
    hit[v] = 1;
  }
  // phi restricted to E_S must be a semilattice isomorphism onto E_T
  {
    std::size_t e_count = 0;
    for (int e : s.idempotents()) {
      if (!t.is_idempotent(phi[e]))
        throw InvalidInput(
            "conjugation criterion: phi|E does not map onto E_T");
      ++e_count;
    }
    if (e_count != t.idempotents().size())
      throw InvalidInput("conjugation criterion: |E_S| != |E_T|");
    for (int e : s.idempotents())
      for (int f : s.idempotents())
        if (phi[s.product(e, f)] != t.product(phi[e], phi[f]))
          throw InvalidInput(
              "conjugation criterion: phi|E is not a semilattice isomorphism");
  }

  bool criterion = true;
  for (int x = 0; x < n && criterion; ++x)
    for (int e : s.idempotents()) {
      int lhs = phi[s.product(s.product(s.inverse(x), e), x)];
      int rhs = t.product(t.product(t.inverse(phi[x]), phi[e]), phi[x]);
      if (lhs != rhs) {
        criterion = false;
        break;
      }
    }

  bool direct = true;
  for (int a = 0; a < n && direct; ++a)
    for (int b = 0; b < n; ++b)
      if (phi[s.product(a, b)] != t.product(phi[a], phi[b])) {
        direct = false;
        break;
      }

  if (criterion != direct)
    throw TheoryViolation(
        "conjugation criterion disagrees with direct homomorphism check");
  return criterion;
}

}  // namespace invsem
