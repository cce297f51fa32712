#ifndef SUMDIFF_LABELLING_HPP
#define SUMDIFF_LABELLING_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sumdiff/graph.hpp"

namespace sumdiff {

using Label = std::int64_t;

/// Injective map vertex -> integer; values()[v] is the label of vertex v.
class VertexLabelling {
 public:
  VertexLabelling() = default;
  /// Throws ValidationError if two vertices share a value.
  explicit VertexLabelling(std::vector<Label> values);

  std::size_t size() const noexcept { return values_.size(); }
  Label operator[](Vertex v) const noexcept { return values_[v]; }
  const std::vector<Label>& values() const noexcept { return values_; }

  VertexLabelling translated(Label c) const;
  VertexLabelling negated() const;
  VertexLabelling scaled(Label a) const;

  friend bool operator==(const VertexLabelling&, const VertexLabelling&) = default;

 private:
  std::vector<Label> values_;
};

enum class LabelKind { Sum, Difference };

std::string_view to_string(LabelKind kind);
LabelKind label_kind_from_string(std::string_view s);

struct EdgeLabelling {
  LabelKind kind = LabelKind::Sum;
  std::vector<std::pair<Edge, Label>> labels;
};

/// f+ (uv -> f(u)+f(v)) or f- (uv -> |f(u)-f(v)|). Throws ValidationError if
/// f does not cover exactly the graph's vertices.
EdgeLabelling derive_edge_labelling(const Graph& g, const VertexLabelling& f, LabelKind kind);

std::size_t distinct_value_count(const EdgeLabelling& e);

/// distinct_value_count(derive_edge_labelling(g, f, kind)).
std::size_t distinct_edge_values(const Graph& g, const VertexLabelling& f, LabelKind kind);

struct Certificate {
  Graph graph;
  VertexLabelling labelling;
  LabelKind kind = LabelKind::Sum;
  std::int64_t claimed_value = 0;
};

struct CertificateVerdict {
  bool pass = false;
  std::int64_t observed = 0;
};

CertificateVerdict verify_certificate(const Certificate& c);

/// Lines of "vertex value"; every vertex 0..n-1 must appear exactly once.
VertexLabelling parse_labelling(std::string_view text);
std::string emit_labelling(const VertexLabelling& f);

Label checked_add(Label a, Label b);
Label checked_sub(Label a, Label b);
Label checked_mul(Label a, Label b);

}  // namespace sumdiff

#endif  // SUMDIFF_LABELLING_HPP
