#include "invsem/pa.hpp"

#include <algorithm>

#include "invsem/connectivity.hpp"
#include "invsem/errors.hpp"

namespace invsem {

namespace {

struct SubTable {
  std::vector<int> members;  // ascending parent indices
  std::vector<int> table;    // local
};

SubTable extract(const std::vector<int>& parent_table, int parent_order,
                 const Bitset& node) {
  SubTable st;
  st.members = node.members();
  std::vector<int> local(parent_order, -1);
  for (std::size_t i = 0; i < st.members.size(); ++i)
    local[st.members[i]] = static_cast<int>(i);
  const int k = static_cast<int>(st.members.size());
  st.table.resize(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int p = parent_table[st.members[i] * parent_order + st.members[j]];
      if (local[p] < 0)
        throw InvariantFailure("pa: lattice node not closed under product");
      st.table[i * k + j] = local[p];
    }
  return st;
}

bool is_chain(const FiniteInverseSemigroup& s) {
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y)
      if (!s.natural_leq(x, y) && !s.natural_leq(y, x)) return false;
  return true;
}

bool all_idempotent(const FiniteInverseSemigroup& s) {
  return s.idempotents().size() == static_cast<std::size_t>(s.order());
}

}  // namespace

PartialAutomorphismMonoid PartialAutomorphismMonoid::assemble(
    SubsemigroupLattice&& lattice, const Limits& limits) {
  PartialAutomorphismMonoid pa;
  pa._mode = lattice.mode();
  pa._lattice = std::move(lattice);
  const SubsemigroupLattice& lat = *pa._lattice;
  const int n = lat.parent_order();
  const int nn = static_cast<int>(lat.node_count());

  std::vector<SubTable> subs;
  subs.reserve(nn);
  for (int i = 0; i < nn; ++i)
    subs.push_back(extract(lat.parent_table(), n, lat.node(i)));

  struct Element {
    PaLabel label;
    PartialBijection map;
  };
  std::vector<Element> elems;
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j) {
      if (lat.node(i).count() != lat.node(j).count()) continue;
      const int k = static_cast<int>(subs[i].members.size());
      auto isos = enumerate_isomorphisms(k, subs[i].table, k, subs[j].table,
                                         IsoLimits{limits.iso_step_limit});
      for (const auto& local : isos.found) {
        std::vector<int> m(n, PartialBijection::undefined);
        for (int a = 0; a < k; ++a)
          m[subs[i].members[a]] = subs[j].members[local[a]];
        elems.push_back(
            Element{PaLabel{i, j},
                    PartialBijection(static_cast<std::size_t>(n), std::move(m))});
        if (elems.size() > limits.pa_cap)
          throw CapExceeded("partial automorphism monoid: element cap " +
                            std::to_string(limits.pa_cap) + " exceeded");
      }
    }

  std::sort(elems.begin(), elems.end(), [](const Element& a, const Element& b) {
    if (a.label.dom_node != b.label.dom_node)
      return a.label.dom_node < b.label.dom_node;
    if (a.label.ran_node != b.label.ran_node)
      return a.label.ran_node < b.label.ran_node;
    return a.map < b.map;
  });

  const int m = static_cast<int>(elems.size());
  std::unordered_map<PartialBijection, int> index;
  for (int i = 0; i < m; ++i) {
    pa._maps.push_back(elems[i].map);
    pa._labels.push_back(elems[i].label);
    index.emplace(elems[i].map, i);
  }

  std::vector<int> table(static_cast<std::size_t>(m) * m);
  std::vector<int> inv(m);
  for (int i = 0; i < m; ++i) {
    auto iv = index.find(pa._maps[i].inverse());
    if (iv == index.end())
      throw InvariantFailure("pa: inverse map missing from the monoid");
    inv[i] = iv->second;
    for (int j = 0; j < m; ++j) {
      auto p = index.find(pa._maps[i] * pa._maps[j]);
      if (p == index.end())
        throw InvariantFailure("pa: composite map missing from the monoid");
      table[i * m + j] = p->second;
    }
  }
  pa._monoid = FiniteInverseSemigroup::from_table(m, std::move(table),
                                                  std::move(inv), pa._maps);

  auto idp = index.find(PartialBijection::identity(static_cast<std::size_t>(n)));
  if (idp == index.end())
    throw InvariantFailure("pa: identity of the parent missing");
  pa._identity = idp->second;

  // idempotents are exactly the node identities, and their semilattice
  // realizes the node lattice (product = identity on the intersection)
  const auto& idems = pa._monoid->idempotents();
  if (idems.size() != static_cast<std::size_t>(nn))
    throw InvariantFailure("pa: idempotent count differs from node count");
  for (int e : idems) {
    if (!pa._maps[e].is_idempotent())
      throw InvariantFailure("pa: an idempotent is not an identity map");
    if (pa.node_of_idempotent(e) < 0)
      throw InvariantFailure("pa: idempotent domain is not a lattice node");
  }
  for (int e : idems)
    for (int f : idems) {
      int ef = pa._monoid->product(e, f);
      Bitset expect =
          lat.node(pa.node_of_idempotent(e)) & lat.node(pa.node_of_idempotent(f));
      if (lat.node(pa.node_of_idempotent(ef)) != expect)
        throw InvariantFailure(
            "pa: idempotent semilattice does not realize node intersections");
    }

  const auto& h = pa._monoid->green(GreenRelation::H);
  pa._unit_group_order = h.blocks[h.block_of[pa._identity]].size();
  return pa;
}

PartialAutomorphismMonoid PartialAutomorphismMonoid::build(
    const FiniteInverseSemigroup& s, LatticeMode mode, const Limits& limits) {
  return assemble(SubsemigroupLattice::enumerate(s, mode, limits.lattice_cap),
                  limits);
}

PartialAutomorphismMonoid PartialAutomorphismMonoid::build_plain(
    int order, const std::vector<int>& table, const Limits& limits) {
  PlainSemigroup::from_table(order, table);  // validate associativity
  return assemble(
      SubsemigroupLattice::enumerate_plain(order, table, limits.lattice_cap),
      limits);
}

int PartialAutomorphismMonoid::element_of(const PartialBijection& map) const {
  for (std::size_t i = 0; i < _maps.size(); ++i)
    if (_maps[i] == map) return static_cast<int>(i);
  return -1;
}

int PartialAutomorphismMonoid::node_of_idempotent(int i) const {
  Bitset dom(_lattice->parent_order());
  for (int x : _maps[i].domain()) dom.set(x);
  return _lattice->node_of(dom);
}

PAIsoEnumeration pa_isomorphisms(const PartialAutomorphismMonoid& pa_s,
                                 const PartialAutomorphismMonoid& pa_t,
                                 const IsoLimits& limits,
                                 std::size_t max_results) {
  PAIsoEnumeration out;
  auto isos = enumerate_isomorphisms(pa_s.monoid(), pa_t.monoid(), limits,
                                     max_results);
  out.complete = isos.complete;
  for (auto& f : isos.found)
    out.found.push_back(PAIsomorphism{&pa_s, &pa_t, std::move(f)});
  return out;
}

LatticeIsomorphism induced_lattice_isomorphism(const PAIsomorphism& phi) {
  const auto& src = *phi.src;
  const auto& dst = *phi.dst;
  const SubsemigroupLattice& ls = src.lattice();
  const SubsemigroupLattice& lt = dst.lattice();
  const int nn = static_cast<int>(ls.node_count());
  std::vector<int> node_map(nn, -1);
  for (int i = 0; i < nn; ++i) {
    int one_h = src.element_of(PartialBijection::partial_identity(
        static_cast<std::size_t>(ls.parent_order()), ls.node(i).members()));
    if (one_h < 0)
      throw InvariantFailure("induced lattice isomorphism: missing 1_H");
    int img = phi.map[one_h];
    if (!dst.maps()[img].is_idempotent())
      throw InvariantFailure(
          "induced lattice isomorphism: idempotent image is not an identity map");
    node_map[i] = dst.node_of_idempotent(img);
    if (node_map[i] < 0)
      throw InvariantFailure(
          "induced lattice isomorphism: image domain is not a node");
  }
  std::vector<char> hit(nn, 0);
  for (int v : node_map) {
    if (hit[v])
      throw InvariantFailure("induced lattice isomorphism: not a bijection");
    hit[v] = 1;
  }
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j)
      if (ls.leq(i, j) != lt.leq(node_map[i], node_map[j]))
        throw InvariantFailure(
            "induced lattice isomorphism: inclusion not preserved");
  return LatticeIsomorphism{&ls, &lt, std::move(node_map)};
}

bool pa_is_induced_by(const PAIsomorphism& phi, const std::vector<int>& f) {
  const auto& src = *phi.src;
  const auto& dst = *phi.dst;
  const int ns = src.lattice().parent_order();
  const int nt = dst.lattice().parent_order();
  if (f.size() != static_cast<std::size_t>(ns) || ns != nt) return false;
  for (int i = 0; i < src.order(); ++i) {
    const PartialBijection& m = src.maps()[i];
    std::vector<int> conj(nt, PartialBijection::undefined);
    for (int x = 0; x < ns; ++x)
      if (m.defined_at(x)) conj[f[x]] = f[m.apply(x)];
    if (PartialBijection(static_cast<std::size_t>(nt), std::move(conj)) !=
        dst.maps()[phi.map[i]])
      return false;
  }
  return true;
}

PAIsomorphism check_restriction_psa_to_pa(
    const PartialAutomorphismMonoid& psa_s, const PartialAutomorphismMonoid& psa_t,
    const PAIsomorphism& phi_psa, const PartialAutomorphismMonoid& pa_s,
    const PartialAutomorphismMonoid& pa_t) {
  if (phi_psa.src != &psa_s || phi_psa.dst != &psa_t)
    throw InvalidInput("restriction: isomorphism does not match the monoids");
  std::vector<int> restricted(pa_s.order(), -1);
  std::vector<char> hit(pa_t.order(), 0);
  for (int i = 0; i < pa_s.order(); ++i) {
    int in_psa = psa_s.element_of(pa_s.maps()[i]);
    if (in_psa < 0)
      throw InvariantFailure("restriction: PA(S) element missing from PSA(S)");
    int image = phi_psa.map[in_psa];
    int in_pa_t = pa_t.element_of(psa_t.maps()[image]);
    if (in_pa_t < 0)
      throw TheoryViolation(
          "restriction: image of a partial automorphism leaves PA(T) at "
          "element " +
          std::to_string(i));
    restricted[i] = in_pa_t;
    if (hit[in_pa_t])
      throw TheoryViolation("restriction: not injective on PA(S)");
    hit[in_pa_t] = 1;
  }
  if (pa_s.order() != pa_t.order())
    throw TheoryViolation("restriction: |PA(S)| != |PA(T)|");
  for (int a = 0; a < pa_s.order(); ++a)
    for (int b = 0; b < pa_s.order(); ++b)
      if (restricted[pa_s.monoid().product(a, b)] !=
          pa_t.monoid().product(restricted[a], restricted[b]))
        throw InvariantFailure("restriction: not multiplicative");
  return PAIsomorphism{&pa_s, &pa_t, std::move(restricted)};
}

bool dually_isomorphic_chains(const FiniteInverseSemigroup& s,
                              const FiniteInverseSemigroup& t) {
  if (s.order() != t.order()) return false;
  if (!is_chain(s) || !is_chain(t)) return false;
  // finite chains of equal size always reverse onto each other
  return true;
}

Thm32Report verify_theorem_3_2(const FiniteInverseSemigroup& s,
                               const FiniteInverseSemigroup& t,
                               const Limits& limits) {
  Thm32Report rep;
  rep.tightly_connected = is_tightly_connected(s);
  rep.fundamental = s.is_fundamental();
  rep.no_ntis = !s.has_nontrivial_isolated_subgroups();

  PAIsoEnumeration phis;
  try {
    PartialAutomorphismMonoid pa_s = PartialAutomorphismMonoid::build(
        s, LatticeMode::inverse_subsemigroups, limits);
    PartialAutomorphismMonoid pa_t = PartialAutomorphismMonoid::build(
        t, LatticeMode::inverse_subsemigroups, limits);
    rep.pa_s_order = pa_s.order();
    rep.pa_t_order = pa_t.order();
    phis = pa_isomorphisms(pa_s, pa_t, IsoLimits{limits.iso_step_limit},
                           limits.harness_iso_cap);
    if (!phis.complete) {
      rep.inconclusive = true;
      rep.cap_note = "PA-isomorphism enumeration truncated";
    }
    rep.pa_isomorphic = !phis.found.empty();
    rep.isomorphic = find_isomorphism(s, t, IsoLimits{limits.iso_step_limit})
                         .has_value();
    rep.dual_chains = dually_isomorphic_chains(s, t);
    rep.iff_holds = rep.pa_isomorphic == (rep.isomorphic || rep.dual_chains);
    if (rep.hypotheses() && !rep.iff_holds) ++rep.failures;

    for (const auto& phi : phis.found) {
      PhiRecord rec;
      try {
        LatticeIsomorphism star = induced_lattice_isomorphism(phi);
        EBijection eb = e_bijection(s, t, star);
        rec.phi_e_kind = eb.kind == EBijectionKind::isomorphism
                             ? "isomorphism"
                             : eb.kind == EBijectionKind::dual_isomorphism
                                   ? "dual-isomorphism"
                                   : "weak-isomorphism";
        if (!rep.hypotheses()) {
          rec.verdict = "out-of-scope";
          rep.records.push_back(std::move(rec));
          continue;
        }
        if (eb.kind == EBijectionKind::dual_isomorphism) {
          rec.branch = "dual-chains";
          // the dual branch forces S = E_S and T = E_T, chains both
          if (!all_idempotent(s) || !all_idempotent(t) || !is_chain(s) ||
              !is_chain(t))
            throw TheoryViolation(
                "dual E-bijection on a non-chain or non-semilattice input");
          std::vector<int> base = base_partial_bijection(s, t, star);
          if (base != eb.map)
            throw TheoryViolation("base bijection differs from phi_E on a "
                                  "semilattice");
          for (int x = 0; x < s.order(); ++x)
            for (int y = 0; y < s.order(); ++y)
              if (s.natural_leq(x, y) !=
                  t.natural_leq(base[y], base[x]))
                throw TheoryViolation("phi is not a dual isomorphism");
          if (!pa_is_induced_by(phi, base))
            throw TheoryViolation("dual isomorphism does not induce Phi");
        } else if (eb.kind == EBijectionKind::isomorphism) {
          rec.branch = "isomorphism";
          std::vector<int> hat = base_bijection(s, t, star);
          for (int a = 0; a < s.order(); ++a)
            for (int b = 0; b < s.order(); ++b)
              if (hat[s.product(a, b)] != t.product(hat[a], hat[b]))
                throw TheoryViolation(
                    "base bijection is not an isomorphism of S onto T");
          // finite => completely semisimple: hat induces Phi, uniquely
          if (!pa_is_induced_by(phi, hat))
            throw TheoryViolation("base bijection does not induce Phi");
          auto isos =
              enumerate_isomorphisms(s, t, IsoLimits{limits.iso_step_limit});
          int inducing = 0;
          for (const auto& f : isos.found)
            if (pa_is_induced_by(phi, f)) ++inducing;
          if (inducing != 1)
            throw TheoryViolation(
                "inducing isomorphism not unique (count=" +
                std::to_string(inducing) + ")");
        } else {
          throw TheoryViolation(
              "phi_E neither an isomorphism nor a dual isomorphism under the "
              "theorem's hypotheses");
        }
        rec.verdict = "pass";
      } catch (const TheoryViolation& tv) {
        rec.verdict = "fail";
        rec.witness = tv.what();
        ++rep.failures;
      }
      rep.records.push_back(std::move(rec));
    }
  } catch (const CapExceeded& cap) {
    rep.inconclusive = true;
    rep.cap_note = cap.what();
  }

  rep.verdict = rep.failures > 0
                    ? "fail"
                    : rep.inconclusive
                          ? "inconclusive"
                          : rep.hypotheses() ? "pass" : "out-of-scope";
  return rep;
}

Result31Report verify_result_3_1(const FiniteInverseSemigroup& s,
                                 const FiniteInverseSemigroup& t,
                                 const Limits& limits) {
  if (!all_idempotent(s))
    throw InvalidInput("result 3.1: S must be a semilattice");
  Result31Report rep;
  try {
    PartialAutomorphismMonoid pa_s = PartialAutomorphismMonoid::build(
        s, LatticeMode::inverse_subsemigroups, limits);
    PartialAutomorphismMonoid pa_t = PartialAutomorphismMonoid::build(
        t, LatticeMode::inverse_subsemigroups, limits);
    PAIsoEnumeration phis = pa_isomorphisms(
        pa_s, pa_t, IsoLimits{limits.iso_step_limit}, limits.harness_iso_cap);
    if (!phis.complete) {
      rep.inconclusive = true;
      rep.cap_note = "PA-isomorphism enumeration truncated";
    }
    rep.pa_isomorphic = !phis.found.empty();
    rep.isomorphic =
        find_isomorphism(s, t, IsoLimits{limits.iso_step_limit}).has_value();

    rep.chain_dual = false;
    if (is_chain(s)) {
      // S^d: the chain upside down, i.e. meet becomes the maximum
      const int n = s.order();
      std::vector<int> dual(static_cast<std::size_t>(n) * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          dual[a * n + b] = s.natural_leq(a, b) ? b : a;
      rep.chain_dual = find_isomorphism(n, dual, t.order(), t.table(),
                                        IsoLimits{limits.iso_step_limit})
                           .has_value();
    }

    rep.iff_holds = rep.pa_isomorphic == (rep.isomorphic || rep.chain_dual);
    rep.finite_collapse_holds = rep.pa_isomorphic == rep.isomorphic;
    if (!rep.iff_holds || !rep.finite_collapse_holds) ++rep.failures;

    for (const auto& phi : phis.found) {
      PhiRecord rec;
      try {
        LatticeIsomorphism star = induced_lattice_isomorphism(phi);
        EBijection eb = e_bijection(s, t, star);
        rec.phi_e_kind = eb.kind == EBijectionKind::isomorphism
                             ? "isomorphism"
                             : eb.kind == EBijectionKind::dual_isomorphism
                                   ? "dual-isomorphism"
                                   : "weak-isomorphism";
        if (eb.kind == EBijectionKind::weak_only)
          throw TheoryViolation(
              "phi_E neither an isomorphism nor a dual isomorphism");
        if (!all_idempotent(t))
          throw TheoryViolation("PA-isomorphic to a semilattice but not a "
                                "semilattice");
        if (!pa_is_induced_by(phi, eb.map))
          throw TheoryViolation("phi_E does not induce Phi");
        rec.verdict = "pass";
      } catch (const TheoryViolation& tv) {
        rec.verdict = "fail";
        rec.witness = tv.what();
        ++rep.failures;
      }
      rep.records.push_back(std::move(rec));
    }
  } catch (const CapExceeded& cap) {
    rep.inconclusive = true;
    rep.cap_note = cap.what();
  }
  rep.verdict = rep.failures > 0
                    ? "fail"
                    : rep.inconclusive ? "inconclusive" : "pass";
  return rep;
}

Thm34Report verify_theorem_3_4(const FiniteInverseSemigroup& s, int t_order,
                               const std::vector<int>& t_table,
                               const Limits& limits) {
  Thm34Report rep;
  rep.tightly_connected = is_tightly_connected(s);
  rep.fundamental = s.is_fundamental();
  rep.no_ntis = !s.has_nontrivial_isolated_subgroups();

  std::optional<FiniteInverseSemigroup> t_fis;
  try {
    t_fis = FiniteInverseSemigroup::from_table(t_order, t_table);
    rep.t_inverse = true;
    rep.t_no_ntis = !t_fis->has_nontrivial_isolated_subgroups();
  } catch (const InvalidInput&) {
    rep.t_inverse = false;
  }

  try {
    PartialAutomorphismMonoid psa_s = PartialAutomorphismMonoid::build(
        s, LatticeMode::all_subsemigroups, limits);
    PartialAutomorphismMonoid psa_t =
        PartialAutomorphismMonoid::build_plain(t_order, t_table, limits);
    rep.psa_s_order = psa_s.order();
    rep.psa_t_order = psa_t.order();
    PAIsoEnumeration phis = pa_isomorphisms(
        psa_s, psa_t, IsoLimits{limits.iso_step_limit}, limits.harness_iso_cap);
    if (!phis.complete) {
      rep.inconclusive = true;
      rep.cap_note = "PSA-isomorphism enumeration truncated";
    }
    rep.psa_isomorphic = !phis.found.empty();
    rep.isomorphic = find_isomorphism(s.order(), s.table(), t_order, t_table,
                                      IsoLimits{limits.iso_step_limit})
                         .has_value();
    rep.dual_chains =
        rep.t_inverse && dually_isomorphic_chains(s, *t_fis);
    rep.iff_holds = rep.psa_isomorphic == (rep.isomorphic || rep.dual_chains);
    if (rep.hypotheses() && !rep.iff_holds) ++rep.failures;

    if (rep.psa_isomorphic && rep.hypotheses()) {
      // Corollary-4.14(b)-style transfer: T must be inverse without
      // nontrivial isolated subgroups
      if (!rep.t_inverse || !rep.t_no_ntis) {
        PhiRecord rec;
        rec.verdict = "fail";
        rec.witness = "PSA-isomorphic yet T is not an inverse semigroup "
                      "without nontrivial isolated subgroups";
        rep.records.push_back(std::move(rec));
        ++rep.failures;
      } else {
        PartialAutomorphismMonoid pa_s = PartialAutomorphismMonoid::build(
            s, LatticeMode::inverse_subsemigroups, limits);
        PartialAutomorphismMonoid pa_t = PartialAutomorphismMonoid::build(
            *t_fis, LatticeMode::inverse_subsemigroups, limits);
        for (const auto& phi : phis.found) {
          PhiRecord rec;
          try {
            check_restriction_psa_to_pa(psa_s, psa_t, phi, pa_s, pa_t);
            rec.verdict = "pass";
          } catch (const TheoryViolation& tv) {
            rec.verdict = "fail";
            rec.witness = tv.what();
            ++rep.failures;
          }
          rep.records.push_back(std::move(rec));
        }
      }
    }
  } catch (const CapExceeded& cap) {
    rep.inconclusive = true;
    rep.cap_note = cap.what();
  }

  rep.verdict = rep.failures > 0
                    ? "fail"
                    : rep.inconclusive
                          ? "inconclusive"
                          : rep.hypotheses() ? "pass" : "out-of-scope";
  return rep;
}

}  // namespace invsem
