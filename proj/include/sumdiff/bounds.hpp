#ifndef SUMDIFF_BOUNDS_HPP
#define SUMDIFF_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <string>

#include "sumdiff/graph.hpp"

namespace sumdiff {

/// Lower bound on the sum index from the number s of (2k+1)-cycles:
/// ((4k+2)s)^(1/(2k+1)) + 1, or 1 when there are no such cycles.
double odd_cycle_bound(const Graph& g, int k);

/// Least integer L with (L-1)^(2k+1) >= (4k+2)s, the integer strengthening
/// of the real bound. Requires s > 0.
std::int64_t odd_cycle_integer_bound(std::uint64_t s, int k);

/// max over k of delta_{2k} - k + 1 (difference index), floored at 0.
std::int64_t diff_degree_bound(const Graph& g);

/// max over k of delta_k + delta_{k+1} - k (sum index), floored at 0.
std::int64_t sum_degree_bound(const Graph& g);

struct OddCycleEntry {
  std::uint64_t cycles = 0;
  double bound = 1.0;
};

struct BoundReport {
  std::string graph_id;
  std::map<int, OddCycleEntry> odd_cycle_bounds;  // keyed by k, cycles of length 2k+1
  std::int64_t diff_degree_bound = 0;
  std::int64_t sum_degree_bound = 0;
  std::int64_t min_degree_bound = 0;  // df >= delta(G)
  std::int64_t best_sm_lower = 0;
  std::int64_t best_df_lower = 0;
};

/// Evaluates every bound, with odd cycles of length 2k+1 for 1 <= k <=
/// max_k_cycles. Edgeless graphs report zero for every integer bound.
BoundReport bound_report(const Graph& g, int max_k_cycles);

}  // namespace sumdiff

#endif  // SUMDIFF_BOUNDS_HPP
