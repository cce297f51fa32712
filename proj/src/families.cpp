#include "sumdiff/families.hpp"

#include <string>

#include "sumdiff/errors.hpp"

namespace sumdiff {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

Certificate make_certificate(const Graph& g, std::vector<Label> labels, LabelKind kind) {
  VertexLabelling f(std::move(labels));
  const auto observed = static_cast<std::int64_t>(distinct_edge_values(g, f, kind));
  return Certificate{g, std::move(f), kind, observed};
}

// Generation-time check of the value each construction promises.
void expect_value(const Certificate& c, std::int64_t expected, const std::string& family) {
  const auto verdict = verify_certificate(c);
  if (!verdict.pass || verdict.observed != expected) {
    throw Error(family + ": certificate yields " + std::to_string(verdict.observed) +
                " distinct values, construction promises " + std::to_string(expected));
  }
}

}  // namespace

FamilyInstance chained_odd_cycles(int k, int s) {
  require(k >= 1 && s >= 1, "chained odd cycles need k >= 1 and s >= 1");
  const int n = 2 * s * k + 1;
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  for (int a = 1; a <= s; ++a) edges.emplace_back(2 * (a - 1) * k, 2 * a * k);
  Graph g(n, edges);

  std::vector<Label> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  FamilyInstance inst{"chained-cycles", {{"k", k}, {"s", s}}, g, {}};
  inst.certificates.push_back(make_certificate(g, std::move(labels), LabelKind::Difference));
  expect_value(inst.certificates.back(), 2, inst.family);
  return inst;
}

FamilyInstance prism(int n) {
  require(n >= 3, "prism needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(n + i, n + (i + 1) % n);
    edges.emplace_back(i, n + i);
  }
  return FamilyInstance{"prism", {{"n", n}}, Graph(2 * n, edges), {}};
}

FamilyInstance subdivided_complete(int n) {
  require(n >= 4, "subdivided complete graph needs n >= 4");
  const Vertex u = 0;
  const Vertex v = 1;
  const Vertex w = n;
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (a == u && b == v) continue;
      edges.emplace_back(a, b);
    }
  }
  edges.emplace_back(u, w);
  edges.emplace_back(v, w);
  Graph g(n + 1, edges);
  FamilyInstance inst{"subdivided-complete", {{"n", n}}, g, {}};

  // Difference: u -> 0, v -> n, everything else takes 1..n-1 in vertex order.
  std::vector<Label> diff(n + 1);
  diff[u] = 0;
  diff[v] = n;
  Label next = 1;
  for (Vertex x = 0; x <= n; ++x) {
    if (x != u && x != v) diff[x] = next++;
  }
  inst.certificates.push_back(make_certificate(g, std::move(diff), LabelKind::Difference));
  expect_value(inst.certificates.back(), n - 1, inst.family);

  // Sum: u -> n-1, v -> n, w -> 0, remaining branch vertices take 1..n-2.
  std::vector<Label> sum(n + 1);
  sum[u] = n - 1;
  sum[v] = n;
  sum[w] = 0;
  next = 1;
  for (Vertex x = 0; x < n; ++x) {
    if (x != u && x != v) sum[x] = next++;
  }
  inst.certificates.push_back(make_certificate(g, std::move(sum), LabelKind::Sum));
  expect_value(inst.certificates.back(), 2 * n - 4, inst.family);
  return inst;
}

FamilyInstance subdivided_complete_kk(int n, int k) {
  require(k >= 2, "subdivided_complete_kk needs k >= 2");
  const int pairs = k * (k - 1) / 2;
  require(n >= pairs + 2 * k, "subdivided_complete_kk needs n >= C(k,2) + 2k = " +
                                  std::to_string(pairs + 2 * k) + ", got n = " +
                                  std::to_string(n));
  auto in_low = [&](int i) { return i < k; };
  auto in_high = [&](int i) { return i >= n - k; };

  std::vector<Edge> edges;
  std::vector<Label> labels(n + 2 * pairs);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  Vertex next_vertex = n;
  // Low-clique subdivisions take n+1, n+2, ...; high-clique ones take
  // 1-C(k,2), ..., 0. Sums then stay inside {k+2, ..., 2n-k}.
  Label low_label = n + 1;
  Label high_label = 1 - pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!(in_low(a) && in_low(b)) && !(in_high(a) && in_high(b))) edges.emplace_back(a, b);
    }
  }
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      edges.emplace_back(a, next_vertex);
      edges.emplace_back(b, next_vertex);
      labels[next_vertex++] = low_label++;
    }
  }
  for (int a = n - k; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      edges.emplace_back(a, next_vertex);
      edges.emplace_back(b, next_vertex);
      labels[next_vertex++] = high_label++;
    }
  }
  Graph g(n + 2 * pairs, edges);
  FamilyInstance inst{"subdivided-complete-kk", {{"n", n}, {"k", k}}, g, {}};
  inst.certificates.push_back(make_certificate(g, std::move(labels), LabelKind::Sum));
  expect_value(inst.certificates.back(), 2 * n - 2 * k - 1, inst.family);
  return inst;
}

FamilyInstance gnk(int n, int k) {
  require(k >= 3, "gnk needs k >= 3");
  require(n >= 3 * k - 6, "gnk needs n >= 3k - 6 = " + std::to_string(3 * k - 6) +
                              ", got n = " + std::to_string(n));
  const int block = k - 2;
  const Vertex w0 = n;
  const Vertex v1 = n + k;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (int j = 0; j < k; ++j) edges.emplace_back(u, w0 + j);
  }
  for (int i = 0; i < 3; ++i) {
    for (Vertex u = 0; u < n; ++u) {
      const bool missed = u >= i * block && u < (i + 1) * block;
      if (!missed) edges.emplace_back(u, v1 + i);
    }
  }
  Graph g(n + k + 3, edges);

  // f(v1) = n+1, f(v3) = n+k+3, f(U) = [n] with 1 on the first vertex v1
  // misses and n on the last vertex v3 misses; W then v2 take n+2..n+k+2.
  std::vector<Label> labels(n + k + 3);
  const Vertex top = 3 * block - 1;
  labels[top] = n;
  Label next = 1;
  for (Vertex u = 0; u < n; ++u) {
    if (u != top) labels[u] = next++;
  }
  labels[v1] = n + 1;
  next = n + 2;
  for (int j = 0; j < k; ++j) labels[w0 + j] = next++;
  labels[v1 + 1] = next++;
  labels[v1 + 2] = n + k + 3;

  FamilyInstance inst{"gnk", {{"n", n}, {"k", k}}, g, {}};
  inst.certificates.push_back(make_certificate(g, std::move(labels), LabelKind::Sum));
  const auto verdict = verify_certificate(inst.certificates.back());
  if (!verdict.pass || verdict.observed > n + k) {
    throw Error("gnk: certificate yields " + std::to_string(verdict.observed) +
                " distinct sums, construction promises at most " + std::to_string(n + k));
  }
  return inst;
}

}  // namespace sumdiff
