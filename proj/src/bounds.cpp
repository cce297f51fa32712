#include "sumdiff/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "sumdiff/errors.hpp"
#include "sumdiff/graph_algorithms.hpp"
#include "sumdiff/graph_io.hpp"

namespace sumdiff {
namespace {

// (base)^exp compared against target without overflow.
bool power_at_least(std::int64_t base, int exp, unsigned __int128 target) {
  unsigned __int128 acc = 1;
  for (int i = 0; i < exp; ++i) {
    acc *= static_cast<unsigned __int128>(base);
    if (acc >= target) return true;
  }
  return acc >= target;
}

}  // namespace

double odd_cycle_bound(const Graph& g, int k) {
  if (k < 1) throw ValidationError("odd cycle bound needs k >= 1");
  const std::uint64_t s = count_cycles_of_length(g, 2 * k + 1);
  if (s == 0) return 1.0;
  return std::pow(static_cast<double>(4 * k + 2) * static_cast<double>(s),
                  1.0 / static_cast<double>(2 * k + 1)) +
         1.0;
}

std::int64_t odd_cycle_integer_bound(std::uint64_t s, int k) {
  if (k < 1 || s == 0) throw ValidationError("odd cycle integer bound needs k >= 1, s > 0");
  const unsigned __int128 target = static_cast<unsigned __int128>(4 * k + 2) * s;
  std::int64_t root = static_cast<std::int64_t>(
      std::floor(std::pow(static_cast<long double>(target), 1.0L / (2 * k + 1))));
  root = std::max<std::int64_t>(root - 1, 0);
  while (!power_at_least(root, 2 * k + 1, target)) ++root;
  return root + 1;
}

std::int64_t diff_degree_bound(const Graph& g) {
  const auto deg = degree_sequence(g);
  const auto n = static_cast<std::int64_t>(deg.size());
  std::int64_t best = 0;
  for (std::int64_t k = 1; 2 * k <= n; ++k) {
    best = std::max(best, deg.delta(2 * k) - k + 1);
  }
  return best;
}

std::int64_t sum_degree_bound(const Graph& g) {
  const auto deg = degree_sequence(g);
  const auto n = static_cast<std::int64_t>(deg.size());
  std::int64_t best = 0;
  for (std::int64_t k = 1; k + 1 <= n; ++k) {
    best = std::max(best, deg.delta(k) + deg.delta(k + 1) - k);
  }
  return best;
}

BoundReport bound_report(const Graph& g, int max_k_cycles) {
  BoundReport r;
  r.graph_id = g.order() <= kMaxGraph6Order ? emit_graph6(g) : std::string{};
  const bool nonempty = !g.empty_of_edges();
  r.diff_degree_bound = diff_degree_bound(g);
  r.sum_degree_bound = sum_degree_bound(g);
  r.min_degree_bound = g.order() > 0 ? degree_sequence(g).delta(1) : 0;
  r.best_sm_lower = std::max<std::int64_t>(r.sum_degree_bound, nonempty ? 1 : 0);
  r.best_df_lower = std::max({r.diff_degree_bound, r.min_degree_bound,
                              static_cast<std::int64_t>(nonempty ? 1 : 0)});
  for (int k = 1; k <= max_k_cycles; ++k) {
    OddCycleEntry entry;
    entry.cycles = count_cycles_of_length(g, 2 * k + 1);
    if (entry.cycles > 0) {
      entry.bound = std::pow(static_cast<double>(4 * k + 2) * static_cast<double>(entry.cycles),
                             1.0 / static_cast<double>(2 * k + 1)) +
                    1.0;
      r.best_sm_lower = std::max(r.best_sm_lower, odd_cycle_integer_bound(entry.cycles, k));
    }
    r.odd_cycle_bounds.emplace(k, entry);
  }
  return r;
}

}  // namespace sumdiff
