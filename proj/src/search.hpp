#ifndef SUMDIFF_SRC_SEARCH_HPP
#define SUMDIFF_SRC_SEARCH_HPP

// Feasibility search shared by the sum index, difference index and exclusive
// sum number solvers: does some injective labelling with bounded span produce
// at most `target` distinct edge values?

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "sumdiff/graph.hpp"
#include "sumdiff/labelling.hpp"

namespace sumdiff::detail {

/// Node counter shared between workers. Workers charge in batches.
class NodeBudget {
 public:
  explicit NodeBudget(std::optional<std::uint64_t> limit) : limit_(limit) {}

  /// Adds `nodes`; returns false once the limit has been passed.
  bool charge(std::uint64_t nodes) {
    const auto total = used_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
    if (limit_ && total > *limit_) {
      exhausted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }

 private:
  std::optional<std::uint64_t> limit_;
  std::atomic<std::uint64_t> used_{0};
  std::atomic<bool> exhausted_{false};
};

struct SearchProblem {
  const Graph* graph = nullptr;
  LabelKind kind = LabelKind::Sum;
  /// Non-adjacent pairs must not sum to any edge value (exclusive sum
  /// labellings). Only meaningful with LabelKind::Sum.
  bool exclusive = false;
  /// max label - min label <= span.
  Label span = 0;
};

enum class SearchStatus { Feasible, Infeasible, BudgetExhausted };

struct SearchOutcome {
  SearchStatus status = SearchStatus::Infeasible;
  std::vector<Label> labels;  // per vertex, when feasible
};

/// Decides feasibility modulo translation and reflection: the first vertex
/// of a degree-driven order is pinned at 0, the second is positive, labels
/// lie in [-span, span]. Work is split across `workers` at the second
/// vertex. The returned labels are not canonical.
SearchOutcome decide_feasible(const SearchProblem& problem, std::int64_t target, unsigned workers,
                              NodeBudget& budget);

/// First labelling in lexicographic order (vertex 0 first, ascending values)
/// with labels in [base, base + span] and at most `target` distinct values.
SearchOutcome lex_least_feasible(const SearchProblem& problem, std::int64_t target, Label base,
                                 NodeBudget& budget);

/// Vertex order used by decide_feasible: highest degree first, then most
/// already-placed neighbours, ties by degree then index.
std::vector<Vertex> branching_order(const Graph& g);

}  // namespace sumdiff::detail

#endif  // SUMDIFF_SRC_SEARCH_HPP
