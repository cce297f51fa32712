#include "sumdiff/serialize.hpp"

#include <string>

#include "sumdiff/errors.hpp"
#include "sumdiff/graph_io.hpp"

namespace sumdiff {

Json labelling_to_json(const VertexLabelling& f) {
  Json j = Json::object();
  for (std::size_t v = 0; v < f.size(); ++v) j[std::to_string(v)] = f[static_cast<Vertex>(v)];
  return j;
}

VertexLabelling labelling_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("labelling must be a JSON object {vertex: label}");
  std::vector<Label> values(j.size());
  std::vector<char> seen(j.size(), 0);
  for (const auto& [key, value] : j.items()) {
    std::size_t vertex = 0;
    try {
      std::size_t used = 0;
      vertex = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ValidationError("labelling key '" + key + "' is not a vertex id");
    }
    if (vertex >= values.size() || seen[vertex]) {
      throw ValidationError("labelling vertices must be exactly 0.." +
                            std::to_string(values.size() - 1));
    }
    if (!value.is_number_integer()) throw ValidationError("labels must be integers");
    seen[vertex] = 1;
    values[vertex] = value.get<Label>();
  }
  return VertexLabelling(std::move(values));
}

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["graph6"] = emit_graph6(c.graph);
  j["labelling"] = labelling_to_json(c.labelling);
  j["kind"] = std::string(to_string(c.kind));
  j["claimed"] = c.claimed_value;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  for (const char* key : {"graph6", "labelling", "kind", "claimed"}) {
    if (!j.contains(key)) throw ValidationError(std::string("certificate lacks '") + key + "'");
  }
  Certificate c;
  c.graph = parse_graph6(j.at("graph6").get<std::string>());
  c.labelling = labelling_from_json(j.at("labelling"));
  c.kind = label_kind_from_string(j.at("kind").get<std::string>());
  c.claimed_value = j.at("claimed").get<std::int64_t>();
  if (static_cast<int>(c.labelling.size()) != c.graph.order()) {
    throw ValidationError("certificate labelling covers " + std::to_string(c.labelling.size()) +
                          " vertices, graph has " + std::to_string(c.graph.order()));
  }
  return c;
}

Json family_to_json(const FamilyInstance& inst) {
  Json j;
  j["family"] = inst.family;
  j["parameters"] = Json::object();
  for (const auto& [name, value] : inst.parameters) j["parameters"][name] = value;
  j["graph6"] = emit_graph6(inst.graph);
  j["certificates"] = Json::array();
  for (const auto& c : inst.certificates) j["certificates"].push_back(certificate_to_json(c));
  return j;
}

std::vector<Certificate> certificates_from_json(const Json& j) {
  std::vector<Certificate> out;
  if (j.is_array()) {
    for (const auto& item : j) out.push_back(certificate_from_json(item));
  } else if (j.is_object() && j.contains("certificates")) {
    for (const auto& item : j.at("certificates")) out.push_back(certificate_from_json(item));
  } else {
    out.push_back(certificate_from_json(j));
  }
  return out;
}

Json index_result_to_json(const IndexResult& r, bool include_run_stats) {
  Json j;
  j["invariant"] = std::string(to_string(r.invariant));
  j["value"] = r.value;
  j["witness"] = labelling_to_json(r.witness);
  j["range_used"] = r.range_used;
  j["exhaustive"] = r.exhaustive_within_range;
  Json trace = Json::array();
  for (const auto& [bound, value] : r.escalation_trace) trace.push_back({bound, value});
  j["escalation_trace"] = trace;
  if (include_run_stats) {
    j["nodes_expanded"] = r.nodes_expanded;
    j["wall_ms"] = r.wall_ms;
  }
  return j;
}

Json exclusive_result_to_json(const ExclusiveResult& r, bool include_run_stats) {
  Json j = index_result_to_json(r.bound, include_run_stats);
  j["upper_bound"] = true;
  j["found"] = r.found;
  j["S"] = r.witness.S;
  j["T"] = r.witness.T;
  return j;
}

Json sum_number_result_to_json(const SumNumberResult& r, bool include_run_stats) {
  Json j = index_result_to_json(r.bound, include_run_stats);
  j["upper_bound"] = true;
  j["found"] = r.found;
  j["isolated_labels"] = r.isolated_labels;
  return j;
}

Json bound_report_to_json(const BoundReport& r) {
  Json j;
  j["graph_id"] = r.graph_id;
  Json odd = Json::object();
  for (const auto& [k, entry] : r.odd_cycle_bounds) {
    odd[std::to_string(k)] = {{"cycles", entry.cycles}, {"bound", entry.bound}};
  }
  j["odd_cycle_bounds"] = odd;
  j["diff_degree_bound"] = r.diff_degree_bound;
  j["sum_degree_bound"] = r.sum_degree_bound;
  j["min_degree_bound"] = r.min_degree_bound;
  j["best_sm_lower"] = r.best_sm_lower;
  j["best_df_lower"] = r.best_df_lower;
  return j;
}

}  // namespace sumdiff
