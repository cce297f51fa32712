#include "sumdiff/enumerate.hpp"

#include <map>
#include <string>

#include "sumdiff/errors.hpp"
#include "sumdiff/graph_algorithms.hpp"
#include "sumdiff/graph_io.hpp"

namespace sumdiff {
namespace {

// All isomorphism classes (connected or not) on n vertices, keyed by
// canonical form. Each class on n vertices arises by attaching a new vertex
// to some class on n-1 vertices.
std::map<std::string, Graph> all_classes(int n) {
  std::map<std::string, Graph> classes;
  if (n == 1) {
    Graph g(1);
    classes.emplace(canonical_form(g), g);
    return classes;
  }
  const int m = n - 1;
  for (const auto& [key, smaller] : all_classes(m)) {
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<Edge> edges = smaller.edges();
      for (int v = 0; v < m; ++v) {
        if (mask & (1u << v)) edges.emplace_back(v, m);
      }
      Graph g(n, edges);
      Graph rep = g.relabelled(canonical_labelling(g));
      std::string form = emit_graph6(rep);
      classes.try_emplace(std::move(form), std::move(rep));
    }
  }
  return classes;
}

}  // namespace

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw UnsupportedSizeError("connected-graph enumeration supports 1 <= n <= 7, got n = " +
                               std::to_string(n));
  }
  std::vector<Graph> out;
  for (auto& [form, g] : all_classes(n)) {
    if (is_connected(g)) out.push_back(g);
  }
  return out;
}

std::vector<Graph> enumerate_connected_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto level = enumerate_connected(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace sumdiff
