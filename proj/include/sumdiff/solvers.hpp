#ifndef SUMDIFF_SOLVERS_HPP
#define SUMDIFF_SOLVERS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "sumdiff/graph.hpp"
#include "sumdiff/labelling.hpp"

namespace sumdiff {

enum class Invariant { SumIndex, DifferenceIndex, SumNumber, ExclusiveSumNumber };

std::string_view to_string(Invariant inv);

struct SearchConfig {
  /// Label range bound B; 0 selects default_label_bound().
  Label label_bound = 0;
  /// Double B until two consecutive rounds agree.
  bool escalate = false;
  std::optional<std::uint64_t> node_budget;
  unsigned workers = 1;
  /// Cap on escalation rounds.
  int max_rounds = 8;
};

/// n(n-1)/2 + n for the sum and difference index; 4n^2 for the sum number
/// and exclusive sum number.
Label default_label_bound(Invariant inv, int n);

struct IndexResult {
  Invariant invariant = Invariant::SumIndex;
  std::int64_t value = 0;
  VertexLabelling witness;
  Label range_used = 0;
  std::vector<std::pair<Label, std::int64_t>> escalation_trace;
  bool exhaustive_within_range = true;
  std::uint64_t nodes_expanded = 0;
  double wall_ms = 0.0;
};

/// Minimum number of distinct f+ values over injective f: V -> {0..B}.
/// Edgeless graphs have value 0. The witness is the lexicographically least
/// optimal labelling.
IndexResult sum_index(const Graph& g, const SearchConfig& cfg = {});

/// As sum_index, for f- = |f(u) - f(v)|.
IndexResult difference_index(const Graph& g, const SearchConfig& cfg = {});

/// G is realised as G+(S, T): vertex v gets assignment[v] in S, and u, v
/// are adjacent iff their labels sum into T.
struct ExclusiveWitness {
  std::vector<Label> S;  // sorted
  std::vector<Label> T;  // sorted, exactly the edge sums
  VertexLabelling assignment;
};

struct ExclusiveResult {
  /// value = |T|; an upper bound on the exclusive sum number, exhaustive
  /// within labels {1..B} when flagged.
  IndexResult bound;
  bool found = false;
  ExclusiveWitness witness;
};

ExclusiveResult exclusive_sum_number(const Graph& g, const SearchConfig& cfg = {});

struct SumNumberResult {
  /// value = number of isolated vertices; an upper bound on the sum number.
  IndexResult bound;
  bool found = false;
  /// Labels of the added isolated vertices (the non-vertex edge sums).
  std::vector<Label> isolated_labels;
};

/// Smallest r found such that G plus r isolated vertices has a sum labelling
/// with the labels of G in {1..B}. Requires a connected graph with at least
/// two vertices.
SumNumberResult sum_number(const Graph& g, const SearchConfig& cfg = {});

/// Graph on |S| vertices (sorted order of S), a ~ b iff a + b in T.
Graph realize_gplus(std::span<const Label> S, std::span<const Label> T);

/// realize_gplus(S, T) equals realize_gplus(S + r, T + 2r) under the sorted
/// order bijection.
bool shift_equivalence_check(std::span<const Label> S, std::span<const Label> T, Label r);

/// Checks both witness invariants against g.
bool verify_exclusive_witness(const Graph& g, const ExclusiveWitness& w);

/// Checks that f on V(G) together with the isolated labels forms a sum
/// labelling of G plus |isolated| isolated vertices.
bool verify_sum_labelling(const Graph& g, const VertexLabelling& f,
                          std::span<const Label> isolated);

}  // namespace sumdiff

#endif  // SUMDIFF_SOLVERS_HPP
