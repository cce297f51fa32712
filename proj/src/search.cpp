#include "search.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

namespace sumdiff::detail {
namespace {

constexpr std::uint64_t kChargeBatch = 4096;

class Searcher {
 public:
  Searcher(const SearchProblem& problem, std::vector<Vertex> order, Label lo, Label hi,
           std::int64_t target, NodeBudget& budget, const std::atomic<bool>* stop)
      : g_(*problem.graph),
        kind_(problem.kind),
        exclusive_(problem.exclusive),
        span_(problem.span),
        order_(std::move(order)),
        lo_(lo),
        hi_(hi),
        target_(target),
        budget_(budget),
        stop_(stop) {
    const int n = g_.order();
    std::vector<int> position(n);
    for (int d = 0; d < n; ++d) position[order_[d]] = d;
    earlier_neighbours_.resize(n);
    earlier_others_.resize(n);
    for (int d = 0; d < n; ++d) {
      const Vertex v = order_[d];
      for (int e = 0; e < d; ++e) {
        const Vertex u = order_[e];
        (g_.adjacent(u, v) ? earlier_neighbours_ : earlier_others_)[d].push_back(u);
      }
    }
    value_min_ = std::min<Label>(2 * lo_, 0);
    const Label value_max = std::max<Label>(2 * hi_, hi_ - lo_);
    edge_count_.assign(static_cast<std::size_t>(value_max - value_min_ + 1), 0);
    if (exclusive_) other_count_.assign(edge_count_.size(), 0);
    used_.assign(static_cast<std::size_t>(hi_ - lo_ + 1), 0);
    label_.assign(n, 0);
    candidates_.resize(n);
  }

  std::uint64_t pending_nodes() const { return local_nodes_; }
  bool found() const { return found_; }
  const std::vector<Label>& labels() const { return label_; }

  /// Places order_[depth] at x. Returns false (with no residue) when the
  /// placement breaks a constraint.
  bool assign(int depth, Label x) {
    const std::size_t edge_mark = applied_edges_.size();
    const std::size_t other_mark = applied_others_.size();
    for (Vertex u : earlier_neighbours_[depth]) {
      const Label value = edge_value(x, label_[u]);
      const std::size_t idx = index(value);
      if (exclusive_ && other_count_[idx] > 0) return rollback(edge_mark, other_mark);
      if (edge_count_[idx]++ == 0) {
        present_.push_back(value);
        applied_edges_.push_back(idx);
        if (static_cast<std::int64_t>(present_.size()) > target_) {
          return rollback(edge_mark, other_mark);
        }
      } else {
        applied_edges_.push_back(idx);
      }
    }
    if (exclusive_) {
      for (Vertex w : earlier_others_[depth]) {
        const std::size_t idx = index(x + label_[w]);
        if (edge_count_[idx] > 0) return rollback(edge_mark, other_mark);
        ++other_count_[idx];
        applied_others_.push_back(idx);
      }
    }
    const Vertex v = order_[depth];
    label_[v] = x;
    used_[static_cast<std::size_t>(x - lo_)] = 1;
    extents_.emplace_back(current_min_, current_max_);
    if (depth == 0) {
      current_min_ = current_max_ = x;
    } else {
      current_min_ = std::min(current_min_, x);
      current_max_ = std::max(current_max_, x);
    }
    marks_.emplace_back(edge_mark, other_mark);
    return true;
  }

  void unassign(int depth) {
    const Vertex v = order_[depth];
    used_[static_cast<std::size_t>(label_[v] - lo_)] = 0;
    const auto [edge_mark, other_mark] = marks_.back();
    marks_.pop_back();
    std::tie(current_min_, current_max_) = extents_.back();
    extents_.pop_back();
    rollback(edge_mark, other_mark);
  }

  /// Candidate values for order_[depth], ascending.
  const std::vector<Label>& candidates(int depth, bool positive_only) {
    auto& out = candidates_[depth];
    out.clear();
    Label from = lo_;
    Label to = hi_;
    if (depth > 0) {
      from = std::max(from, current_max_ - span_);
      to = std::min(to, current_min_ + span_);
    }
    if (positive_only) from = std::max<Label>(from, 1);
    const auto& earlier = earlier_neighbours_[depth];
    if (!earlier.empty() && static_cast<std::int64_t>(present_.size()) == target_) {
      // Every new edge value must already be present.
      const Label anchor = label_[earlier.front()];
      for (Label value : present_) {
        if (kind_ == LabelKind::Sum) {
          out.push_back(value - anchor);
        } else {
          out.push_back(anchor - value);
          out.push_back(anchor + value);
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      out.erase(std::remove_if(out.begin(), out.end(),
                               [&](Label x) { return x < from || x > to || is_used(x); }),
                out.end());
    } else {
      for (Label x = from; x <= to; ++x) {
        if (!is_used(x)) out.push_back(x);
      }
    }
    return out;
  }

  /// Depth-first completion from `depth`. Returns true when a full
  /// labelling is found; labels() then holds it.
  bool complete(int depth) {
    if (depth == g_.order()) {
      found_ = true;
      return true;
    }
    const auto& cands = candidates(depth, false);
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (!tick()) return false;
      const Label x = candidates_[depth][i];
      if (!assign(depth, x)) continue;
      const bool done = complete(depth + 1);
      if (done) return true;
      unassign(depth);
      if (aborted_) return false;
    }
    return false;
  }

  bool aborted() const { return aborted_; }

  void flush() {
    if (local_nodes_ > 0) {
      budget_.charge(local_nodes_);
      local_nodes_ = 0;
    }
  }

 private:
  Label edge_value(Label x, Label y) const {
    if (kind_ == LabelKind::Sum) return x + y;
    return x > y ? x - y : y - x;
  }
  std::size_t index(Label value) const { return static_cast<std::size_t>(value - value_min_); }
  bool is_used(Label x) const { return used_[static_cast<std::size_t>(x - lo_)] != 0; }

  bool rollback(std::size_t edge_mark, std::size_t other_mark) {
    while (applied_edges_.size() > edge_mark) {
      const std::size_t idx = applied_edges_.back();
      applied_edges_.pop_back();
      if (--edge_count_[idx] == 0) present_.pop_back();
    }
    while (applied_others_.size() > other_mark) {
      --other_count_[applied_others_.back()];
      applied_others_.pop_back();
    }
    return false;
  }

  bool tick() {
    if (aborted_) return false;
    if (++local_nodes_ >= kChargeBatch) {
      const bool ok = budget_.charge(local_nodes_);
      local_nodes_ = 0;
      if (!ok || budget_.exhausted()) aborted_ = true;
    }
    if (stop_ && (local_nodes_ & 255) == 0 && stop_->load(std::memory_order_relaxed)) {
      aborted_ = true;
    }
    return !aborted_;
  }

  const Graph& g_;
  LabelKind kind_;
  bool exclusive_;
  Label span_;
  std::vector<Vertex> order_;
  Label lo_;
  Label hi_;
  std::int64_t target_;
  NodeBudget& budget_;
  const std::atomic<bool>* stop_;

  std::vector<std::vector<Vertex>> earlier_neighbours_;
  std::vector<std::vector<Vertex>> earlier_others_;
  Label value_min_ = 0;
  std::vector<int> edge_count_;
  std::vector<int> other_count_;
  std::vector<Label> present_;
  std::vector<std::size_t> applied_edges_;
  std::vector<std::size_t> applied_others_;
  std::vector<std::pair<std::size_t, std::size_t>> marks_;
  std::vector<std::pair<Label, Label>> extents_;
  std::vector<char> used_;
  std::vector<Label> label_;
  Label current_min_ = 0;
  Label current_max_ = 0;
  std::vector<std::vector<Label>> candidates_;
  std::uint64_t local_nodes_ = 0;
  bool found_ = false;
  bool aborted_ = false;
};

}  // namespace

std::vector<Vertex> branching_order(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> order;
  std::vector<int> placed_neighbours(n, 0);
  std::vector<char> placed(n, 0);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best < 0 || placed_neighbours[v] > placed_neighbours[best] ||
          (placed_neighbours[v] == placed_neighbours[best] && g.degree(v) > g.degree(best))) {
        best = v;
      }
    }
    placed[best] = 1;
    order.push_back(best);
    for (Vertex w : g.neighbours(best)) ++placed_neighbours[w];
  }
  return order;
}

SearchOutcome decide_feasible(const SearchProblem& problem, std::int64_t target, unsigned workers,
                              NodeBudget& budget) {
  const Graph& g = *problem.graph;
  const int n = g.order();
  SearchOutcome outcome;
  const auto order = branching_order(g);
  if (n <= 1) {
    outcome.status = SearchStatus::Feasible;
    outcome.labels.assign(n, 0);
    return outcome;
  }
  const Label span = problem.span;

  // Second-vertex values form the work items.
  std::vector<Label> roots;
  {
    Searcher probe(problem, order, -span, span, target, budget, nullptr);
    if (!probe.assign(0, 0)) return outcome;
    roots = probe.candidates(1, true);
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex result_mutex;
  std::optional<std::pair<std::size_t, std::vector<Label>>> winner;

  auto work = [&] {
    Searcher searcher(problem, order, -span, span, target, budget, &stop);
    searcher.assign(0, 0);
    for (;;) {
      const std::size_t item = next.fetch_add(1);
      if (item >= roots.size() || stop.load() || searcher.aborted()) break;
      if (!searcher.assign(1, roots[item])) continue;
      if (searcher.complete(2)) {
        std::lock_guard lock(result_mutex);
        if (!winner || item < winner->first) winner.emplace(item, searcher.labels());
        stop.store(true);
        break;
      }
      searcher.unassign(1);
    }
    searcher.flush();
  };

  const unsigned width = std::max(1u, std::min<unsigned>(workers, roots.size()));
  if (width == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < width; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  if (winner) {
    outcome.status = SearchStatus::Feasible;
    outcome.labels = std::move(winner->second);
  } else if (budget.exhausted()) {
    outcome.status = SearchStatus::BudgetExhausted;
  }
  return outcome;
}

SearchOutcome lex_least_feasible(const SearchProblem& problem, std::int64_t target, Label base,
                                 NodeBudget& budget) {
  const Graph& g = *problem.graph;
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  Searcher searcher(problem, order, base, base + problem.span, target, budget, nullptr);
  SearchOutcome outcome;
  const bool ok = searcher.complete(0);
  searcher.flush();
  if (ok) {
    outcome.status = SearchStatus::Feasible;
    outcome.labels = searcher.labels();
  } else if (searcher.aborted()) {
    outcome.status = SearchStatus::BudgetExhausted;
  }
  return outcome;
}

}  // namespace sumdiff::detail
