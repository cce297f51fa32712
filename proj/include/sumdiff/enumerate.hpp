#ifndef SUMDIFF_ENUMERATE_HPP
#define SUMDIFF_ENUMERATE_HPP

#include <vector>

#include "sumdiff/graph.hpp"

namespace sumdiff {

inline constexpr int kMaxEnumerationOrder = 7;

/// One canonical representative per isomorphism class of connected graphs on
/// n vertices (1 <= n <= 7), ordered by canonical form.
std::vector<Graph> enumerate_connected(int n);

/// All connected classes for orders 1..max_n, concatenated in order.
std::vector<Graph> enumerate_connected_up_to(int max_n);

}  // namespace sumdiff

#endif  // SUMDIFF_ENUMERATE_HPP
