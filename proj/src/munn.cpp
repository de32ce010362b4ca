#include "invsem/munn.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "invsem/errors.hpp"

namespace invsem {

std::vector<PartialBijection> ideal_isomorphisms(const Semilattice& e_lat,
                                                 int e, int f) {
  const std::vector<int> src = e_lat.principal_ideal(e);
  const std::vector<int> dst = e_lat.principal_ideal(f);
  std::vector<PartialBijection> out;
  if (src.size() != dst.size()) return out;
  const int k = static_cast<int>(src.size());

  // meet-isomorphisms preserve down-set sizes within the ideal
  auto depth_profile = [&](const std::vector<int>& ideal) {
    std::vector<int> depth(ideal.size(), 0);
    for (std::size_t i = 0; i < ideal.size(); ++i)
      for (int y : ideal)
        if (e_lat.leq(y, ideal[i])) ++depth[i];
    return depth;
  };
  const std::vector<int> sdepth = depth_profile(src);
  const std::vector<int> ddepth = depth_profile(dst);

  std::vector<int> image(k, -1);
  std::vector<char> used(k, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      // full meet-preservation check
      std::vector<int> map_of(e_lat.order(), -1);
      for (int a = 0; a < k; ++a) map_of[src[a]] = dst[image[a]];
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          if (map_of[e_lat.meet(src[a], src[b])] !=
              e_lat.meet(map_of[src[a]], map_of[src[b]]))
            return;
      std::vector<int> m(e_lat.order(), PartialBijection::undefined);
      for (int a = 0; a < k; ++a) m[src[a]] = dst[image[a]];
      out.emplace_back(static_cast<std::size_t>(e_lat.order()), std::move(m));
      return;
    }
    for (int j = 0; j < k; ++j) {
      if (used[j] || ddepth[j] != sdepth[i]) continue;
      used[j] = 1;
      image[i] = j;
      self(self, i + 1);
      image[i] = -1;
      used[j] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

int MunnSemigroup::element_of(const PartialBijection& map) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i].map == map) return static_cast<int>(i);
  return -1;
}

MunnSemigroup munn_semigroup(const Semilattice& e_lat, const Limits& limits) {
  const int ne = e_lat.order();
  std::vector<MunnElement> elems;
  for (int e = 0; e < ne; ++e)
    for (int f = 0; f < ne; ++f) {
      for (auto& iso : ideal_isomorphisms(e_lat, e, f)) {
        elems.push_back(MunnElement{e, f, std::move(iso)});
        if (elems.size() > limits.munn_cap)
          throw CapExceeded("munn_semigroup: size cap " +
                            std::to_string(limits.munn_cap) + " exceeded");
      }
    }
  std::sort(elems.begin(), elems.end(),
            [](const MunnElement& a, const MunnElement& b) {
              if (a.source != b.source) return a.source < b.source;
              if (a.target != b.target) return a.target < b.target;
              return a.map < b.map;
            });

  const int n = static_cast<int>(elems.size());
  std::unordered_map<PartialBijection, int> index;
  for (int i = 0; i < n; ++i) index.emplace(elems[i].map, i);

  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<int> inv(n);
  std::vector<PartialBijection> rep;
  rep.reserve(n);
  for (int i = 0; i < n; ++i) rep.push_back(elems[i].map);
  for (int i = 0; i < n; ++i) {
    auto it = index.find(elems[i].map.inverse());
    if (it == index.end())
      throw InvariantFailure("munn_semigroup: inverse fell outside T_E");
    inv[i] = it->second;
    for (int j = 0; j < n; ++j) {
      auto p = index.find(elems[i].map * elems[j].map);
      if (p == index.end())
        throw InvariantFailure(
            "munn_semigroup: composite of ideal isomorphisms fell outside T_E");
      table[i * n + j] = p->second;
    }
  }

  MunnSemigroup out{FiniteInverseSemigroup::from_table(
                        n, std::move(table), std::move(inv), std::move(rep)),
                    std::move(elems),
                    std::vector<int>(ne, -1)};

  // idempotents are exactly the ideal identities, one per element of E
  for (int e = 0; e < ne; ++e) {
    PartialBijection ide = PartialBijection::partial_identity(
        static_cast<std::size_t>(ne), e_lat.principal_ideal(e));
    int idx = out.element_of(ide);
    if (idx < 0 || !out.sg.is_idempotent(idx))
      throw InvariantFailure("munn_semigroup: missing ideal identity");
    out.idempotent_of[e] = idx;
  }
  if (out.sg.idempotents().size() != static_cast<std::size_t>(ne))
    throw InvariantFailure("munn_semigroup: |E_{T_E}| != |E|");
  return out;
}

MunnRepresentation munn_representation(const FiniteInverseSemigroup& s,
                                       const Limits& limits) {
  const auto& idems = s.idempotents();
  const int ne = static_cast<int>(idems.size());
  std::vector<int> e_index(s.order(), -1);
  for (int i = 0; i < ne; ++i) e_index[idems[i]] = i;

  std::vector<int> meet(static_cast<std::size_t>(ne) * ne);
  for (int i = 0; i < ne; ++i)
    for (int j = 0; j < ne; ++j)
      meet[i * ne + j] = e_index[s.product(idems[i], idems[j])];
  Semilattice e_lat = Semilattice::from_meet_table(ne, std::move(meet));

  MunnRepresentation rep{e_lat, std::move(e_index), munn_semigroup(e_lat, limits),
                         std::vector<int>(s.order(), -1), true};

  for (int x = 0; x < s.order(); ++x) {
    int xxi = s.product(x, s.inverse(x));
    std::vector<int> m(ne, PartialBijection::undefined);
    for (int i = 0; i < ne; ++i) {
      if (!s.natural_leq(idems[i], xxi)) continue;
      int img = s.product(s.product(s.inverse(x), idems[i]), x);
      m[i] = rep.e_index[img];
    }
    PartialBijection delta(static_cast<std::size_t>(ne), std::move(m));
    int idx = rep.te.element_of(delta);
    if (idx < 0)
      throw InvariantFailure(
          "munn_representation: induced ideal map is not in T_E");
    rep.embedding[x] = idx;
  }

  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y)
      if (rep.te.sg.product(rep.embedding[x], rep.embedding[y]) !=
          rep.embedding[s.product(x, y)])
        throw InvariantFailure("munn_representation: not a homomorphism");

  for (int x = 0; x < s.order(); ++x)
    for (int y = x + 1; y < s.order(); ++y)
      if (rep.embedding[x] == rep.embedding[y]) rep.injective = false;

  return rep;
}

}  // namespace invsem
