#include "sumdiff/graph_algorithms.hpp"

#include <algorithm>
#include <queue>

#include "sumdiff/errors.hpp"
#include "sumdiff/graph_io.hpp"

namespace sumdiff {

BipartiteVerdict is_bipartite(const Graph& g) {
  const int n = g.order();
  BipartiteVerdict verdict;
  std::vector<int> colour(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbours(u)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push(w);
        } else if (colour[w] == colour[u]) {
          // Same-parity endpoints: join the two tree paths at their meeting
          // point to get an odd cycle.
          std::vector<Vertex> left{u};
          std::vector<Vertex> right{w};
          Vertex a = u;
          Vertex b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          verdict.bipartite = false;
          verdict.odd_cycle.assign(left.begin(), left.end());
          verdict.odd_cycle.insert(verdict.odd_cycle.end(), right.rbegin(), right.rend());
          return verdict;
        }
      }
    }
  }
  verdict.colouring = std::move(colour);
  return verdict;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbours(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = n + 1;
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbours(u)) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

namespace {

struct CycleCounter {
  const Graph& g;
  int length;
  Vertex root = 0;
  std::vector<Vertex> path{};
  std::vector<char> on_path{};
  std::uint64_t count = 0;

  void extend() {
    const Vertex last = path.back();
    if (static_cast<int>(path.size()) == length) {
      if (g.adjacent(last, root) && path[1] < last) ++count;
      return;
    }
    for (Vertex w : g.neighbours(last)) {
      if (w <= root || on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      extend();
      path.pop_back();
      on_path[w] = 0;
    }
  }
};

}  // namespace

std::uint64_t count_cycles_of_length(const Graph& g, int length) {
  if (length < 3) throw ValidationError("cycle length must be at least 3");
  if (length > g.order()) return 0;
  CycleCounter counter{g, length};
  counter.on_path.assign(g.order(), 0);
  for (Vertex r = 0; r < g.order(); ++r) {
    counter.root = r;
    counter.path.assign(1, r);
    counter.on_path[r] = 1;
    counter.extend();
    counter.on_path[r] = 0;
  }
  return counter.count;
}

namespace {

// Branches over which vertex takes canonical position p. Bits of column p
// (pairs (i,p), i < p) extend the prefix; a branch whose prefix exceeds the
// incumbent's is cut.
struct CanonicalSearch {
  const Graph& g;
  int n;
  std::vector<Vertex> order{};  // position -> original vertex
  std::vector<char> used{};
  std::vector<char> bits{};     // current prefix bits
  std::vector<char> best_bits{};
  std::vector<Vertex> best_order{};
  bool have_best = false;
  std::size_t best_version = 0;

  // strictly_less: the current prefix is already below the incumbent's.
  void place(int position, bool strictly_less) {
    if (position == n) {
      if (!have_best || strictly_less) {
        best_bits = bits;
        best_order = order;
        have_best = true;
        ++best_version;
      }
      return;
    }
    const std::size_t column_start = static_cast<std::size_t>(position) * (position - 1) / 2;
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool less = strictly_less;
      bool greater = false;
      for (int i = 0; i < position; ++i) {
        const char bit = g.adjacent(order[i], v) ? 1 : 0;
        bits[column_start + i] = bit;
        if (have_best && !less && !greater) {
          const char ref = best_bits[column_start + i];
          if (bit < ref) less = true;
          else if (bit > ref) greater = true;
        }
      }
      if (greater) continue;
      used[v] = 1;
      order[position] = v;
      const std::size_t version = best_version;
      place(position + 1, less);
      used[v] = 0;
      // A new incumbent found below shares this prefix.
      if (best_version != version) strictly_less = false;
    }
  }
};

}  // namespace

std::vector<Vertex> canonical_labelling(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) {
    throw UnsupportedSizeError("canonical form supports n <= 8, got n = " +
                               std::to_string(n));
  }
  CanonicalSearch search{g, n};
  search.order.assign(n, 0);
  search.used.assign(n, 0);
  search.bits.assign(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2, 0);
  search.place(0, false);
  std::vector<Vertex> perm(n);
  for (int p = 0; p < n; ++p) perm[search.best_order[p]] = p;
  return perm;
}

std::string canonical_form(const Graph& g) {
  const auto perm = canonical_labelling(g);
  return emit_graph6(g.relabelled(perm));
}

}  // namespace sumdiff
