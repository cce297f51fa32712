#ifndef SUMDIFF_SCAN_HPP
#define SUMDIFF_SCAN_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumdiff/bounds.hpp"
#include "sumdiff/graph.hpp"
#include "sumdiff/serialize.hpp"
#include "sumdiff/solvers.hpp"

namespace sumdiff {

inline constexpr int kScanSchemaVersion = 1;

struct ScanChecks {
  bool conj42 = true;    // df = ceil(sm/2)
  bool conj44 = true;    // ceil(sm/2) <= df <= sm
  bool df_le_sm = true;  // df <= sm
};

/// Parses a comma list drawn from "conj42", "conj44", "dflesm".
ScanChecks parse_scan_checks(std::string_view list);

struct ScanRecord {
  std::string graph6;
  int n = 0;
  std::size_t m = 0;
  bool bipartite = false;
  IndexResult sm;
  IndexResult df;
  BoundReport bounds;
  bool conj42_holds = true;
  bool conj44_holds = true;
  bool df_le_sm = true;
  /// A solver hit its node budget; the record never counts as a
  /// counterexample.
  bool inconclusive = false;
  /// Bipartite with df < ceil(sm/2), which bipartite graphs never have:
  /// a solver bug.
  bool bipartite_guard_violation = false;
};

struct ScanReport {
  SearchConfig config;
  ScanChecks checks;
  int max_k_cycles = 3;
  std::vector<ScanRecord> records;
  std::vector<std::size_t> counterexamples_42;
  std::vector<std::size_t> counterexamples_44;
  std::vector<std::size_t> counterexamples_df_le_sm;
  std::size_t inconclusive = 0;
  std::size_t bipartite_guard_violations = 0;

  bool has_counterexample() const {
    return !counterexamples_42.empty() || !counterexamples_44.empty() ||
           !counterexamples_df_le_sm.empty();
  }
};

/// Computes sm and df of every graph on a pool of `workers` threads, each
/// solver running single-threaded. Records keep input order.
ScanReport scan_conjectures(std::span<const Graph> graphs, const SearchConfig& cfg,
                            const ScanChecks& checks, unsigned workers, int max_k_cycles = 3);

ScanRecord scan_graph(const Graph& g, const SearchConfig& cfg, int max_k_cycles);

/// Byte-stable JSON: no timings, node counts or worker counts.
Json scan_report_to_json(const ScanReport& report);

}  // namespace sumdiff

#endif  // SUMDIFF_SCAN_HPP
