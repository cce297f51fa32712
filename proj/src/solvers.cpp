#include "sumdiff/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <set>

#include "search.hpp"
#include "sumdiff/bounds.hpp"
#include "sumdiff/errors.hpp"

namespace sumdiff {
namespace {

using Clock = std::chrono::steady_clock;

// Odd cycles up to length 5 feed the root bound; longer ones are rarely
// stronger and expensive to count on dense graphs.
constexpr int kRootBoundCycleK = 2;

std::int64_t root_lower_bound(const Graph& g, LabelKind kind) {
  if (g.empty_of_edges()) return 0;
  const BoundReport report = bound_report(g, kRootBoundCycleK);
  int max_degree = 0;
  for (Vertex v = 0; v < g.order(); ++v) max_degree = std::max(max_degree, g.degree(v));
  if (kind == LabelKind::Sum) {
    // Edges at one vertex carry distinct sums.
    return std::max<std::int64_t>(report.best_sm_lower, max_degree);
  }
  // Edges at one vertex take each difference at most twice.
  return std::max<std::int64_t>(report.best_df_lower, (max_degree + 1) / 2);
}

void check_range(Label bound, int n, Label min_bound) {
  if (bound < min_bound) {
    throw ValidationError("label bound " + std::to_string(bound) + " is below " +
                          std::to_string(min_bound) + ", too small for " + std::to_string(n) +
                          " distinct labels");
  }
}

struct RoundResult {
  bool found = false;
  std::int64_t value = 0;
  std::vector<Label> labels;
  bool exhaustive = true;
};

// One label range: iterative deepening on the number of distinct values,
// starting at the root lower bound. The first feasible target is the
// optimum within range; its witness comes from the lexicographic pass.
RoundResult solve_round(const Graph& g, LabelKind kind, bool exclusive, Label base, Label span,
                        unsigned workers, detail::NodeBudget& budget) {
  RoundResult r;
  const int n = g.order();
  if (g.empty_of_edges()) {
    r.found = true;
    r.value = 0;
    for (int v = 0; v < n; ++v) r.labels.push_back(base + v);
    return r;
  }
  detail::SearchProblem problem{&g, kind, exclusive, span};
  const auto upper = static_cast<std::int64_t>(g.size());
  for (std::int64_t target = root_lower_bound(g, kind); target <= upper; ++target) {
    const auto decided = detail::decide_feasible(problem, target, workers, budget);
    if (decided.status == detail::SearchStatus::BudgetExhausted) {
      r.exhaustive = false;
      break;
    }
    if (decided.status == detail::SearchStatus::Infeasible) continue;
    const auto lex = detail::lex_least_feasible(problem, target, base, budget);
    r.found = true;
    r.value = target;
    if (lex.status == detail::SearchStatus::Feasible) {
      r.labels = lex.labels;
    } else {
      // Budget ran out in the lexicographic pass: keep the value but fall
      // back to the translated decision witness.
      r.exhaustive = false;
      const Label lo = *std::min_element(decided.labels.begin(), decided.labels.end());
      for (Label x : decided.labels) r.labels.push_back(x - lo + base);
    }
    return r;
  }
  if (!r.exhaustive && !exclusive) {
    // Identity labelling as a certified upper bound.
    r.found = true;
    for (int v = 0; v < n; ++v) r.labels.push_back(base + v);
    r.value = static_cast<std::int64_t>(
        distinct_edge_values(g, VertexLabelling(r.labels), kind));
  }
  return r;
}

IndexResult solve_labelling_invariant(const Graph& g, const SearchConfig& cfg, Invariant inv,
                                      bool& found_out) {
  const auto start = Clock::now();
  const int n = g.order();
  const bool exclusive = inv == Invariant::ExclusiveSumNumber;
  const LabelKind kind = inv == Invariant::DifferenceIndex ? LabelKind::Difference : LabelKind::Sum;
  const Label base = exclusive ? 1 : 0;
  Label bound = cfg.label_bound > 0 ? cfg.label_bound : default_label_bound(inv, n);
  // {0..B} needs B >= n-1; {1..B} needs B >= n.
  check_range(bound, n, exclusive ? n : n - 1);

  detail::NodeBudget budget(cfg.node_budget);
  IndexResult result;
  result.invariant = inv;
  found_out = false;
  std::optional<std::int64_t> previous;
  const int rounds = cfg.escalate ? std::max(1, cfg.max_rounds) : 1;
  for (int round = 0; round < rounds; ++round) {
    const Label span = bound - base;
    RoundResult r = solve_round(g, kind, exclusive, base, span, cfg.workers, budget);
    result.range_used = bound;
    result.exhaustive_within_range = r.exhaustive;
    if (r.found) {
      found_out = true;
      result.value = r.value;
      result.witness = VertexLabelling(r.labels);
      result.escalation_trace.emplace_back(bound, r.value);
      if (previous && *previous == r.value) break;
      previous = r.value;
    }
    if (!r.exhaustive) break;
    bound *= 2;
  }
  result.nodes_expanded = budget.used();
  result.wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

}  // namespace

std::string_view to_string(Invariant inv) {
  switch (inv) {
    case Invariant::SumIndex: return "sum_index";
    case Invariant::DifferenceIndex: return "difference_index";
    case Invariant::SumNumber: return "sum_number";
    case Invariant::ExclusiveSumNumber: return "exclusive_sum_number";
  }
  return "unknown";
}

Label default_label_bound(Invariant inv, int n) {
  const Label nn = n;
  if (inv == Invariant::SumIndex || inv == Invariant::DifferenceIndex) {
    return std::max<Label>(nn * (nn - 1) / 2 + nn, 1);
  }
  return std::max<Label>(4 * nn * nn, 1);
}

IndexResult sum_index(const Graph& g, const SearchConfig& cfg) {
  bool found = false;
  return solve_labelling_invariant(g, cfg, Invariant::SumIndex, found);
}

IndexResult difference_index(const Graph& g, const SearchConfig& cfg) {
  bool found = false;
  return solve_labelling_invariant(g, cfg, Invariant::DifferenceIndex, found);
}

ExclusiveResult exclusive_sum_number(const Graph& g, const SearchConfig& cfg) {
  if (g.order() < 2) throw ValidationError("exclusive sum number needs at least two vertices");
  ExclusiveResult out;
  out.bound = solve_labelling_invariant(g, cfg, Invariant::ExclusiveSumNumber, out.found);
  if (out.found) {
    const auto& f = out.bound.witness;
    out.witness.assignment = f;
    out.witness.S = f.values();
    std::sort(out.witness.S.begin(), out.witness.S.end());
    std::set<Label> sums;
    for (const Edge& e : g.edges()) sums.insert(f[e.u] + f[e.v]);
    out.witness.T.assign(sums.begin(), sums.end());
  }
  return out;
}

Graph realize_gplus(std::span<const Label> S, std::span<const Label> T) {
  std::vector<Label> s(S.begin(), S.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const std::set<Label> t(T.begin(), T.end());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (t.count(checked_add(s[i], s[j]))) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph(static_cast<int>(s.size()), edges);
}

bool shift_equivalence_check(std::span<const Label> S, std::span<const Label> T, Label r) {
  std::vector<Label> s2;
  std::vector<Label> t2;
  for (Label x : S) s2.push_back(checked_add(x, r));
  for (Label x : T) t2.push_back(checked_add(x, checked_mul(2, r)));
  return realize_gplus(S, T) == realize_gplus(s2, t2);
}

bool verify_exclusive_witness(const Graph& g, const ExclusiveWitness& w) {
  const auto& f = w.assignment;
  if (static_cast<int>(f.size()) != g.order()) return false;
  std::vector<Label> s = f.values();
  std::sort(s.begin(), s.end());
  if (s != w.S) return false;
  const std::set<Label> t(w.T.begin(), w.T.end());
  std::set<Label> edge_sums;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const Label sum = f[u] + f[v];
      if (g.adjacent(u, v)) {
        if (!t.count(sum)) return false;
        edge_sums.insert(sum);
      } else if (t.count(sum)) {
        return false;
      }
    }
  }
  return edge_sums == t;
}

bool verify_sum_labelling(const Graph& g, const VertexLabelling& f, std::span<const Label> isolated) {
  if (static_cast<int>(f.size()) != g.order()) return false;
  std::vector<Label> all = f.values();
  all.insert(all.end(), isolated.begin(), isolated.end());
  const std::set<Label> labels(all.begin(), all.end());
  if (labels.size() != all.size()) return false;
  const int total = static_cast<int>(all.size());
  for (int a = 0; a < total; ++a) {
    for (int b = a + 1; b < total; ++b) {
      const bool edge = a < g.order() && b < g.order() && g.adjacent(a, b);
      if (edge != (labels.count(all[a] + all[b]) > 0)) return false;
    }
  }
  return true;
}

}  // namespace sumdiff
