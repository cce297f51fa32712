#ifndef SUMDIFF_GRAPH_HPP
#define SUMDIFF_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace sumdiff {

using Vertex = int;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws ValidationError on loops or endpoints outside [0, n). Duplicate
  /// pairs collapse.
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty_of_edges() const noexcept { return edges_.empty(); }

  bool adjacent(Vertex a, Vertex b) const noexcept {
    return adjacency_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }
  std::span<const Vertex> neighbours(Vertex v) const noexcept {
    return neighbours_[v];
  }
  int degree(Vertex v) const noexcept {
    return static_cast<int>(neighbours_[v].size());
  }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Graph with vertex v renamed to perm[v].
  Graph relabelled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<char> adjacency_;
  std::vector<std::vector<Vertex>> neighbours_;
};

/// Nondecreasing degree list; delta(k) is the k-th smallest degree (1-based).
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> sorted_degrees)
      : degrees_(std::move(sorted_degrees)) {}

  std::size_t size() const noexcept { return degrees_.size(); }
  int delta(std::size_t k) const;
  const std::vector<int>& sorted() const noexcept { return degrees_; }

 private:
  std::vector<int> degrees_;
};

DegreeSequence degree_sequence(const Graph& g);

}  // namespace sumdiff

#endif  // SUMDIFF_GRAPH_HPP
