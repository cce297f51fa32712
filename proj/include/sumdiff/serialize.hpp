#ifndef SUMDIFF_SERIALIZE_HPP
#define SUMDIFF_SERIALIZE_HPP

#include <vector>

#include "json.hpp"
#include "sumdiff/bounds.hpp"
#include "sumdiff/families.hpp"
#include "sumdiff/labelling.hpp"
#include "sumdiff/solvers.hpp"

namespace sumdiff {

using Json = nlohmann::ordered_json;

/// {"0": f(0), "1": f(1), ...} in vertex order.
Json labelling_to_json(const VertexLabelling& f);
VertexLabelling labelling_from_json(const Json& j);

/// {graph6, labelling, kind, claimed}.
Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

/// {family, parameters, graph6, certificates: [...]}.
Json family_to_json(const FamilyInstance& inst);

/// Accepts one certificate object, an array of them, or a family bundle.
std::vector<Certificate> certificates_from_json(const Json& j);

/// {invariant, value, witness, range_used, exhaustive, escalation_trace,
///  nodes_expanded, wall_ms}. Timing and node counts are left out when
/// `include_run_stats` is false.
Json index_result_to_json(const IndexResult& r, bool include_run_stats = true);
Json exclusive_result_to_json(const ExclusiveResult& r, bool include_run_stats = true);
Json sum_number_result_to_json(const SumNumberResult& r, bool include_run_stats = true);

Json bound_report_to_json(const BoundReport& r);

}  // namespace sumdiff

#endif  // SUMDIFF_SERIALIZE_HPP
