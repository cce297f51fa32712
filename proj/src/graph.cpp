#include "sumdiff/graph.hpp"

#include <algorithm>
#include <string>

#include "sumdiff/errors.hpp"

namespace sumdiff {

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw ValidationError("negative vertex count");
  adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
  neighbours_.resize(n);
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw ValidationError("edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ") outside vertex range 0.." +
                            std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw ValidationError("loop at vertex " + std::to_string(e.u));
    }
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u) * n + e.v] = 1;
    adjacency_[static_cast<std::size_t>(e.v) * n + e.u] = 1;
    neighbours_[e.u].push_back(e.v);
    neighbours_[e.v].push_back(e.u);
  }
  for (auto& nb : neighbours_) std::sort(nb.begin(), nb.end());
}

Graph Graph::relabelled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw ValidationError("permutation size does not match vertex count");
  }
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (const Edge& e : edges_) mapped.emplace_back(perm[e.u], perm[e.v]);
  return Graph(n_, mapped);
}

int DegreeSequence::delta(std::size_t k) const {
  if (k < 1 || k > degrees_.size()) {
    throw std::out_of_range("degree index " + std::to_string(k) +
                            " outside 1.." + std::to_string(degrees_.size()));
  }
  return degrees_[k - 1];
}

DegreeSequence degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return DegreeSequence(std::move(d));
}

}  // namespace sumdiff
