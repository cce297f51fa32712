#ifndef SUMDIFF_GRAPH_ALGORITHMS_HPP
#define SUMDIFF_GRAPH_ALGORITHMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumdiff/graph.hpp"

namespace sumdiff {

struct BipartiteVerdict {
  bool bipartite = true;
  /// Proper 2-colouring (0/1 per vertex) when bipartite.
  std::vector<int> colouring;
  /// Vertices of an odd cycle, in cyclic order, when not bipartite.
  std::vector<Vertex> odd_cycle;
};

BipartiteVerdict is_bipartite(const Graph& g);

bool is_connected(const Graph& g);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Number of simple cycles of exactly `length` vertices, each counted once.
std::uint64_t count_cycles_of_length(const Graph& g, int length);

inline constexpr int kMaxCanonicalOrder = 8;

/// Permutation perm with g.relabelled(perm) the canonical representative:
/// the relabelling whose upper-triangle adjacency bits (graph6 column order)
/// are lexicographically least.
std::vector<Vertex> canonical_labelling(const Graph& g);

/// graph6 text of the canonical representative; equal iff isomorphic.
std::string canonical_form(const Graph& g);

}  // namespace sumdiff

#endif  // SUMDIFF_GRAPH_ALGORITHMS_HPP
