#ifndef SUMDIFF_TESTS_ORACLES_HPP
#define SUMDIFF_TESTS_ORACLES_HPP

// Test-only brute-force oracles. None of these share code with the solvers
// they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <vector>

#include "sumdiff/graph.hpp"

namespace sumdiff::oracle {

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

/// Calls visit(labels) for every injective map V -> {lo..hi}.
inline void for_each_injective(int n, std::int64_t lo, std::int64_t hi,
                               const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> labels(n);
  std::vector<char> used(static_cast<std::size_t>(hi - lo + 1), 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      visit(labels);
      return;
    }
    for (std::int64_t x = lo; x <= hi; ++x) {
      if (used[x - lo]) continue;
      used[x - lo] = 1;
      labels[v] = x;
      rec(v + 1);
      used[x - lo] = 0;
    }
  };
  rec(0);
}

/// Minimum distinct edge sums (or differences) over injective f: V -> {0..B}.
inline std::int64_t min_distinct(const Graph& g, bool sums, std::int64_t bound) {
  if (g.size() == 0) return 0;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for_each_injective(g.order(), 0, bound, [&](const std::vector<std::int64_t>& f) {
    std::set<std::int64_t> values;
    for (const Edge& e : g.edges()) {
      values.insert(sums ? f[e.u] + f[e.v] : std::abs(f[e.u] - f[e.v]));
    }
    best = std::min<std::int64_t>(best, static_cast<std::int64_t>(values.size()));
  });
  return best;
}

/// Least |T| with G = G+(S, T), S drawn from {1..B}; -1 if none.
inline std::int64_t min_exclusive(const Graph& g, std::int64_t bound) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  const int n = g.order();
  for_each_injective(n, 1, bound, [&](const std::vector<std::int64_t>& f) {
    std::set<std::int64_t> t;
    for (const Edge& e : g.edges()) t.insert(f[e.u] + f[e.v]);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (!g.adjacent(a, b) && t.count(f[a] + f[b])) return;
    best = std::min<std::int64_t>(best, static_cast<std::int64_t>(t.size()));
  });
  return best == std::numeric_limits<std::int64_t>::max() ? -1 : best;
}

/// Least number of isolated vertices r such that G + rK1 is a sum graph with
/// the labels of G in {1..B}; -1 if none.
inline std::int64_t min_sum_number(const Graph& g, std::int64_t bound) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  const int n = g.order();
  for_each_injective(n, 1, bound, [&](const std::vector<std::int64_t>& f) {
    std::set<std::int64_t> labels(f.begin(), f.end());
    std::vector<std::int64_t> all = f;
    for (const Edge& e : g.edges()) {
      const auto s = f[e.u] + f[e.v];
      if (!labels.count(s) && std::find(all.begin() + n, all.end(), s) == all.end()) all.push_back(s);
    }
    std::set<std::int64_t> everything(all.begin(), all.end());
    const int total = static_cast<int>(all.size());
    for (int a = 0; a < total; ++a) {
      for (int b = a + 1; b < total; ++b) {
        const bool edge = a < n && b < n && g.adjacent(a, b);
        if (edge != (everything.count(all[a] + all[b]) > 0)) return;
      }
    }
    best = std::min<std::int64_t>(best, total - n);
  });
  return best == std::numeric_limits<std::int64_t>::max() ? -1 : best;
}

/// Cycles of length L counted as vertex sequences / (2L).
inline std::uint64_t brute_cycles(const Graph& g, int length) {
  std::uint64_t sequences = 0;
  const int n = g.order();
  std::vector<int> seq;
  std::vector<char> used(n, 0);
  std::function<void()> rec = [&] {
    if (static_cast<int>(seq.size()) == length) {
      if (g.adjacent(seq.back(), seq.front())) ++sequences;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || (!seq.empty() && !g.adjacent(seq.back(), v))) continue;
      used[v] = 1;
      seq.push_back(v);
      rec();
      seq.pop_back();
      used[v] = 0;
    }
  };
  rec();
  return sequences / (2 * static_cast<std::uint64_t>(length));
}

}  // namespace sumdiff::oracle

#endif  // SUMDIFF_TESTS_ORACLES_HPP
