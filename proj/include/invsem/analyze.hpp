// analyze.hpp -- machine-readable reports (all JSON carries schema: 1)
#ifndef INVSEM_ANALYZE_HPP_
#define INVSEM_ANALYZE_HPP_

#include <string>

#include "json.hpp"

#include "invsem/catalog.hpp"
#include "invsem/connectivity.hpp"
#include "invsem/lattice.hpp"
#include "invsem/pa.hpp"
#include "invsem/semigroup.hpp"

namespace invsem {

// order, idempotent count, Green class summary, predicate flags and the
// per-element monogenic classification; a pure function of the input
nlohmann::json analysis_report(const FiniteInverseSemigroup& s,
                               const std::string& input_digest);

nlohmann::json bypass_json(const Bypass& b);

nlohmann::json thm24_json(const Thm24Report& rep);
nlohmann::json thm32_json(const Thm32Report& rep);
nlohmann::json result31_json(const Result31Report& rep);
nlohmann::json thm34_json(const Thm34Report& rep);

nlohmann::json pa_summary_json(const PartialAutomorphismMonoid& pa);

nlohmann::json catalog_json(const Catalog& catalog);

}  // namespace invsem

#endif  // INVSEM_ANALYZE_HPP_
