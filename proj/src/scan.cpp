#include "sumdiff/scan.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "sumdiff/errors.hpp"
#include "sumdiff/graph_algorithms.hpp"
#include "sumdiff/graph_io.hpp"

namespace sumdiff {
namespace {

std::int64_t half_up(std::int64_t x) { return (x + 1) / 2; }

}  // namespace

ScanChecks parse_scan_checks(std::string_view list) {
  ScanChecks checks{false, false, false};
  std::size_t pos = 0;
  while (pos <= list.size()) {
    std::size_t end = list.find(',', pos);
    if (end == std::string_view::npos) end = list.size();
    const auto name = list.substr(pos, end - pos);
    pos = end + 1;
    if (name.empty()) continue;
    if (name == "conj42") checks.conj42 = true;
    else if (name == "conj44") checks.conj44 = true;
    else if (name == "dflesm") checks.df_le_sm = true;
    else throw ValidationError("unknown scan check '" + std::string(name) + "'");
  }
  return checks;
}

ScanRecord scan_graph(const Graph& g, const SearchConfig& cfg, int max_k_cycles) {
  ScanRecord rec;
  rec.graph6 = emit_graph6(g);
  rec.n = g.order();
  rec.m = g.size();
  rec.bipartite = is_bipartite(g).bipartite;
  rec.sm = sum_index(g, cfg);
  rec.df = difference_index(g, cfg);
  rec.bounds = bound_report(g, max_k_cycles);
  rec.inconclusive = !rec.sm.exhaustive_within_range || !rec.df.exhaustive_within_range;
  const std::int64_t sm = rec.sm.value;
  const std::int64_t df = rec.df.value;
  rec.conj42_holds = df == half_up(sm);
  rec.conj44_holds = half_up(sm) <= df && df <= sm;
  rec.df_le_sm = df <= sm;
  rec.bipartite_guard_violation = !rec.inconclusive && rec.bipartite && df < half_up(sm);
  return rec;
}

ScanReport scan_conjectures(std::span<const Graph> graphs, const SearchConfig& cfg,
                            const ScanChecks& checks, unsigned workers, int max_k_cycles) {
  ScanReport report;
  report.config = cfg;
  report.checks = checks;
  report.max_k_cycles = max_k_cycles;
  report.records.resize(graphs.size());

  SearchConfig per_graph = cfg;
  per_graph.workers = 1;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) return;
      try {
        report.records[i] = scan_graph(graphs[i], per_graph, max_k_cycles);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(graphs.size());
        return;
      }
    }
  };
  const unsigned width =
      std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(graphs.size())));
  if (width == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < width; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& rec = report.records[i];
    if (rec.inconclusive) {
      ++report.inconclusive;
      continue;
    }
    if (rec.bipartite_guard_violation) ++report.bipartite_guard_violations;
    if (checks.conj42 && !rec.conj42_holds) report.counterexamples_42.push_back(i);
    if (checks.conj44 && !rec.conj44_holds) report.counterexamples_44.push_back(i);
    if (checks.df_le_sm && !rec.df_le_sm) report.counterexamples_df_le_sm.push_back(i);
  }
  return report;
}

Json scan_report_to_json(const ScanReport& report) {
  Json j;
  j["schema"] = kScanSchemaVersion;
  Json config;
  config["label_bound"] = report.config.label_bound;
  config["escalate"] = report.config.escalate;
  config["node_budget"] = report.config.node_budget ? Json(*report.config.node_budget) : Json();
  Json checks = Json::array();
  if (report.checks.conj42) checks.push_back("conj42");
  if (report.checks.conj44) checks.push_back("conj44");
  if (report.checks.df_le_sm) checks.push_back("dflesm");
  config["checks"] = checks;
  config["max_k_cycles"] = report.max_k_cycles;
  j["config"] = config;

  Json totals;
  totals["graphs"] = report.records.size();
  totals["inconclusive"] = report.inconclusive;
  totals["counterexamples_42"] = report.counterexamples_42.size();
  totals["counterexamples_44"] = report.counterexamples_44.size();
  totals["counterexamples_df_le_sm"] = report.counterexamples_df_le_sm.size();
  totals["bipartite_guard_violations"] = report.bipartite_guard_violations;
  j["totals"] = totals;

  auto names = [&](const std::vector<std::size_t>& idx) {
    Json out = Json::array();
    for (auto i : idx) out.push_back(report.records[i].graph6);
    return out;
  };
  j["counterexamples_42"] = names(report.counterexamples_42);
  j["counterexamples_44"] = names(report.counterexamples_44);
  j["counterexamples_df_le_sm"] = names(report.counterexamples_df_le_sm);

  Json records = Json::array();
  for (const auto& rec : report.records) {
    Json r;
    r["graph6"] = rec.graph6;
    r["n"] = rec.n;
    r["m"] = rec.m;
    r["bipartite"] = rec.bipartite;
    r["sm"] = index_result_to_json(rec.sm, false);
    r["df"] = index_result_to_json(rec.df, false);
    r["bounds"] = bound_report_to_json(rec.bounds);
    r["conj42_holds"] = rec.conj42_holds;
    r["conj44_holds"] = rec.conj44_holds;
    r["df_le_sm"] = rec.df_le_sm;
    r["inconclusive"] = rec.inconclusive;
    records.push_back(std::move(r));
  }
  j["records"] = records;
  return j;
}

}  // namespace sumdiff
