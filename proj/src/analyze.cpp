#include "invsem/analyze.hpp"

namespace invsem {

using nlohmann::json;

namespace {

json green_summary(const FiniteInverseSemigroup& s) {
  json out;
  const char* names[] = {"H", "L", "R", "D", "J"};
  for (GreenRelation k : {GreenRelation::H, GreenRelation::L, GreenRelation::R,
                          GreenRelation::D, GreenRelation::J}) {
    const auto& p = s.green(k);
    json sizes = json::array();
    for (const auto& blk : p.blocks) sizes.push_back(blk.size());
    out[names[static_cast<int>(k)]] = {{"classes", p.blocks.size()},
                                       {"sizes", sizes}};
  }
  return out;
}

json phi_records(const std::vector<PhiRecord>& records) {
  json arr = json::array();
  for (const auto& r : records) {
    json rec = {{"phi_E_kind", r.phi_e_kind}, {"verdict", r.verdict}};
    if (!r.branch.empty()) rec["branch"] = r.branch;
    if (!r.witness.empty()) rec["witness"] = r.witness;
    arr.push_back(std::move(rec));
  }
  return arr;
}

}  // namespace

json analysis_report(const FiniteInverseSemigroup& s,
                     const std::string& input_digest) {
  json monogenic = json::array();
  for (int x = 0; x < s.order(); ++x) {
    MonogenicReport m = s.monogenic(x);
    monogenic.push_back(
        {{"generator", x},
         {"size", m.elements.size()},
         {"case", m.kind == MonogenicReport::Case::group ? "group"
                                                         : "incomparable"},
         {"kernel",
          {{"size", m.kernel.size()},
           {"kind", m.kernel_kind == MonogenicReport::KernelKind::cyclic_group
                        ? "cyclic-group"
                        : "none"}}}});
  }
  return json{
      {"schema", 1},
      {"digest", input_digest},
      {"order", s.order()},
      {"idempotent_count", s.idempotents().size()},
      {"nongroup_count", s.nongroup_elements().size()},
      {"green", green_summary(s)},
      {"flags",
       {{"combinatorial", s.is_combinatorial()},
        {"fundamental", s.is_fundamental()},
        {"shortly_connected", is_shortly_connected(s)},
        {"tightly_connected", is_tightly_connected(s)},
        {"order_ideal", order_ideal_check(s)},
        {"has_nontrivial_isolated_subgroups",
         s.has_nontrivial_isolated_subgroups()},
        // finite semigroups contain no bicyclic subsemigroup
        {"completely_semisimple", true}}},
      {"isolated_idempotents", s.isolated_idempotents()},
      {"monogenic", monogenic}};
}

json bypass_json(const Bypass& b) {
  return json{{"x", b.x},
              {"chain", b.chain},
              {"stages", b.stages},
              {"tight", b.tight}};
}

json thm24_json(const Thm24Report& rep) {
  json records = json::array();
  for (const auto& r : rep.records) {
    json rec = {{"psi_E_kind", r.psi_e_kind},
                {"hypotheses",
                 {{"tightly_connected", rep.tightly_connected},
                  {"fundamental", rep.fundamental},
                  {"no_ntis", rep.no_ntis}}},
                {"verdict", r.verdict}};
    if (r.verdict == "pass") {
      rec["base_is_isomorphism"] = r.base_is_isomorphism;
      rec["induces"] = r.induces;
      rec["unique_inducing"] = r.unique_inducing;
    }
    if (!r.witness.empty()) rec["witness"] = r.witness;
    records.push_back(std::move(rec));
  }
  json out = {{"schema", 1},
              {"mode", "lattice"},
              {"hypotheses",
               {{"tightly_connected", rep.tightly_connected},
                {"fundamental", rep.fundamental},
                {"no_ntis", rep.no_ntis}}},
              {"lattice_isomorphism_count", rep.lattice_isomorphism_count},
              {"qualifying", rep.qualifying},
              {"failures", rep.failures},
              {"records", records},
              {"verdict", rep.verdict}};
  if (!rep.cap_note.empty()) out["cap_note"] = rep.cap_note;
  return out;
}

json thm32_json(const Thm32Report& rep) {
  json out = {{"schema", 1},
              {"mode", "pa"},
              {"hypotheses",
               {{"tightly_connected", rep.tightly_connected},
                {"fundamental", rep.fundamental},
                {"no_ntis", rep.no_ntis}}},
              {"pa_isomorphic", rep.pa_isomorphic},
              {"isomorphic", rep.isomorphic},
              {"dually_isomorphic_chains", rep.dual_chains},
              {"iff_holds", rep.iff_holds},
              {"pa_s_order", rep.pa_s_order},
              {"pa_t_order", rep.pa_t_order},
              {"failures", rep.failures},
              {"records", phi_records(rep.records)},
              {"verdict", rep.verdict}};
  if (!rep.cap_note.empty()) out["cap_note"] = rep.cap_note;
  return out;
}

json result31_json(const Result31Report& rep) {
  json out = {{"schema", 1},
              {"mode", "pa-semilattice"},
              {"pa_isomorphic", rep.pa_isomorphic},
              {"isomorphic", rep.isomorphic},
              {"chain_dual", rep.chain_dual},
              {"iff_holds", rep.iff_holds},
              {"finite_collapse_holds", rep.finite_collapse_holds},
              {"failures", rep.failures},
              {"records", phi_records(rep.records)},
              {"verdict", rep.verdict}};
  if (!rep.cap_note.empty()) out["cap_note"] = rep.cap_note;
  return out;
}

json thm34_json(const Thm34Report& rep) {
  json out = {{"schema", 1},
              {"mode", "psa"},
              {"hypotheses",
               {{"tightly_connected", rep.tightly_connected},
                {"fundamental", rep.fundamental},
                {"no_ntis", rep.no_ntis}}},
              {"psa_isomorphic", rep.psa_isomorphic},
              {"isomorphic", rep.isomorphic},
              {"dually_isomorphic_chains", rep.dual_chains},
              {"t_inverse", rep.t_inverse},
              {"t_no_ntis", rep.t_no_ntis},
              {"iff_holds", rep.iff_holds},
              {"psa_s_order", rep.psa_s_order},
              {"psa_t_order", rep.psa_t_order},
              {"failures", rep.failures},
              {"records", phi_records(rep.records)},
              {"verdict", rep.verdict}};
  if (!rep.cap_note.empty()) out["cap_note"] = rep.cap_note;
  return out;
}

json pa_summary_json(const PartialAutomorphismMonoid& pa) {
  return json{{"order", pa.order()},
              {"idempotent_count", pa.monoid().idempotents().size()},
              {"unit_group_order", pa.unit_group_order()}};
}

json catalog_json(const Catalog& catalog) {
  json members = json::array();
  for (const auto& m : catalog.members) {
    json rows = json::array();
    for (int i = 0; i < m.order(); ++i) {
      json row = json::array();
      for (int j = 0; j < m.order(); ++j) row.push_back(m.product(i, j));
      rows.push_back(std::move(row));
    }
    members.push_back(
        {{"order", m.order()}, {"table", rows}, {"inv", m.inv()}});
  }
  return json{{"schema", 1},
              {"max_order", catalog.max_order},
              {"count", catalog.members.size()},
              {"provenance",
               "enumerated as inverse subsemigroups of the symmetric inverse "
               "monoid, deduplicated up to isomorphism"},
              {"members", members}};
}

}  // namespace invsem
