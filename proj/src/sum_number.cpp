#include <algorithm>
#include <chrono>
#include <limits>

#include "search.hpp"
#include "sumdiff/errors.hpp"
#include "sumdiff/graph_algorithms.hpp"
#include "sumdiff/solvers.hpp"

namespace sumdiff {
namespace {

// Branch and bound over labellings of V(G) in {1..B}, vertex 0 first with
// ascending values. For a complete labelling the isolated vertices are
// forced: R = (edge sums) \ f(V). The labelling is valid iff no non-edge sum
// lies in f(V) or among the edge sums, and no sum involving an isolated
// label lands on a label.
class SumNumberSearch {
 public:
  SumNumberSearch(const Graph& g, Label bound, detail::NodeBudget& budget)
      : g_(g), n_(g.order()), bound_(bound), budget_(budget) {
    label_.assign(n_, 0);
    is_label_.assign(static_cast<std::size_t>(bound_ + 1), 0);
    edge_count_.assign(static_cast<std::size_t>(2 * bound_ + 1), 0);
    other_count_.assign(edge_count_.size(), 0);
    incumbent_ = static_cast<std::int64_t>(g.size()) + 1;
  }

  void run() { extend(0); }

  bool found() const { return !best_labels_.empty(); }
  std::int64_t best() const { return incumbent_; }
  const std::vector<Label>& best_labels() const { return best_labels_; }
  const std::vector<Label>& best_isolated() const { return best_isolated_; }
  bool aborted() const { return aborted_; }

 private:
  // Edge-sum values that are not yet vertex labels.
  std::int64_t pending_isolated() const { return distinct_edge_sums_ - working_; }

  bool place(Vertex v, Label x) {
    if (other_count_[x] > 0) return false;
    std::vector<Label> added_edges;
    std::vector<Label> added_others;
    auto undo = [&] {
      for (Label s : added_edges) {
        if (--edge_count_[s] == 0) {
          --distinct_edge_sums_;
          if (s <= bound_ && is_label_[s]) --working_;
        }
      }
      for (Label s : added_others) --other_count_[s];
      return false;
    };
    for (Vertex u = 0; u < v; ++u) {
      const Label s = x + label_[u];
      if (g_.adjacent(u, v)) {
        if (other_count_[s] > 0) return undo();
        if (edge_count_[s]++ == 0) {
          ++distinct_edge_sums_;
          if (s <= bound_ && is_label_[s]) ++working_;
        }
        added_edges.push_back(s);
      } else {
        if (edge_count_[s] > 0 || (s <= bound_ && is_label_[s]) || s == x) return undo();
        ++other_count_[s];
        added_others.push_back(s);
      }
    }
    label_[v] = x;
    is_label_[x] = 1;
    if (edge_count_[x] > 0) ++working_;
    history_.push_back({std::move(added_edges), std::move(added_others)});
    return true;
  }

  void remove(Vertex v) {
    const Label x = label_[v];
    if (edge_count_[x] > 0) --working_;
    is_label_[x] = 0;
    auto [added_edges, added_others] = std::move(history_.back());
    history_.pop_back();
    for (Label s : added_edges) {
      if (--edge_count_[s] == 0) {
        --distinct_edge_sums_;
        if (s <= bound_ && is_label_[s]) --working_;
      }
    }
    for (Label s : added_others) --other_count_[s];
  }

  void evaluate_leaf() {
    std::vector<Label> isolated;
    for (Label s = 1; s <= 2 * bound_; ++s) {
      if (edge_count_[s] > 0 && !(s <= bound_ && is_label_[s])) isolated.push_back(s);
    }
    if (static_cast<std::int64_t>(isolated.size()) >= incumbent_) return;
    if (!verify_sum_labelling(g_, VertexLabelling(label_), isolated)) return;
    incumbent_ = static_cast<std::int64_t>(isolated.size());
    best_labels_ = label_;
    best_isolated_ = std::move(isolated);
  }

  void extend(Vertex v) {
    if (aborted_ || incumbent_ <= 1) return;
    if (v == n_) {
      evaluate_leaf();
      return;
    }
    for (Label x = 1; x <= bound_; ++x) {
      if (is_label_[x]) continue;
      if (++local_nodes_ >= 4096) {
        if (!budget_.charge(local_nodes_)) aborted_ = true;
        local_nodes_ = 0;
        if (aborted_) return;
      }
      if (!place(v, x)) continue;
      // Each remaining vertex can absorb at most one pending edge sum.
      if (pending_isolated() - (n_ - v - 1) < incumbent_) extend(v + 1);
      remove(v);
      if (aborted_ || incumbent_ <= 1) return;
    }
  }

 public:
  void flush() {
    budget_.charge(local_nodes_);
    local_nodes_ = 0;
  }

 private:
  const Graph& g_;
  int n_;
  Label bound_;
  detail::NodeBudget& budget_;
  std::vector<Label> label_;
  std::vector<char> is_label_;
  std::vector<int> edge_count_;
  std::vector<int> other_count_;
  std::int64_t distinct_edge_sums_ = 0;
  std::int64_t working_ = 0;
  std::vector<std::pair<std::vector<Label>, std::vector<Label>>> history_;
  std::int64_t incumbent_;
  std::vector<Label> best_labels_;
  std::vector<Label> best_isolated_;
  std::uint64_t local_nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

SumNumberResult sum_number(const Graph& g, const SearchConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const int n = g.order();
  if (n < 2 || !is_connected(g)) {
    throw ValidationError("sum number search needs a connected graph with at least two vertices");
  }
  Label bound = cfg.label_bound > 0 ? cfg.label_bound : default_label_bound(Invariant::SumNumber, n);
  if (bound < n) {
    throw ValidationError("label bound " + std::to_string(bound) + " is below " +
                          std::to_string(n) + ", too small for distinct positive labels");
  }
  detail::NodeBudget budget(cfg.node_budget);
  SumNumberResult out;
  out.bound.invariant = Invariant::SumNumber;
  std::optional<std::int64_t> previous;
  const int rounds = cfg.escalate ? std::max(1, cfg.max_rounds) : 1;
  for (int round = 0; round < rounds; ++round) {
    SumNumberSearch search(g, bound, budget);
    search.run();
    search.flush();
    out.bound.range_used = bound;
    out.bound.exhaustive_within_range = !search.aborted();
    if (search.found()) {
      out.found = true;
      out.bound.value = search.best();
      out.bound.witness = VertexLabelling(search.best_labels());
      out.isolated_labels = search.best_isolated();
      out.bound.escalation_trace.emplace_back(bound, search.best());
      if (previous && *previous == search.best()) break;
      previous = search.best();
    }
    if (search.aborted()) break;
    bound *= 2;
  }
  out.bound.nodes_expanded = budget.used();
  out.bound.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace sumdiff
