#ifndef SUMDIFF_FAMILIES_HPP
#define SUMDIFF_FAMILIES_HPP

#include <map>
#include <string>
#include <vector>

#include "sumdiff/graph.hpp"
#include "sumdiff/labelling.hpp"

namespace sumdiff {

struct FamilyInstance {
  std::string family;
  std::map<std::string, int> parameters;
  Graph graph;
  /// Every certificate verifies; generators throw otherwise.
  std::vector<Certificate> certificates;
};

/// Path v_1..v_{2sk+1} (vertices 0..2sk) plus chords v_{2(a-1)k+1} v_{2ak+1},
/// a = 1..s: s cycles of length 2k+1 in a chain. Carries the difference
/// certificate f(v_i) = i with values {1, 2k}.
FamilyInstance chained_odd_cycles(int k, int s);

/// C_n x K_2: outer cycle 0..n-1, inner cycle n..2n-1, spokes i ~ i+n.
FamilyInstance prism(int n);

/// K_n with edge {0,1} subdivided by vertex n. Carries a difference
/// certificate with n-1 values and a sum certificate with 2n-4 values.
FamilyInstance subdivided_complete(int n);

/// K_n with every edge inside {v_1..v_k} and inside {v_{n-k+1}..v_n}
/// subdivided. Branch vertices are 0..n-1; subdivision vertices follow, the
/// low clique's pairs first, each clique in lexicographic pair order.
/// Requires k >= 2 and n >= C(k,2) + 2k; carries a sum certificate with
/// 2n - 2k - 1 values.
FamilyInstance subdivided_complete_kk(int n, int k);

/// K_{n,k} with parts U = 0..n-1 and W = n..n+k-1, plus v_1, v_2, v_3 =
/// n+k, n+k+1, n+k+2. Vertex v_i misses the i-th block of k-2 consecutive
/// U vertices and is adjacent to the rest of U. Requires k >= 3 and
/// n >= 3k - 6; carries a sum certificate with at most n + k values.
FamilyInstance gnk(int n, int k);

}  // namespace sumdiff

#endif  // SUMDIFF_FAMILIES_HPP
