#include "sumdiff/labelling.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

#include "sumdiff/errors.hpp"

namespace sumdiff {

Label checked_add(Label a, Label b) {
  Label r;
  if (__builtin_add_overflow(a, b, &r)) throw ValidationError("label arithmetic overflow");
  return r;
}

Label checked_sub(Label a, Label b) {
  Label r;
  if (__builtin_sub_overflow(a, b, &r)) throw ValidationError("label arithmetic overflow");
  return r;
}

Label checked_mul(Label a, Label b) {
  Label r;
  if (__builtin_mul_overflow(a, b, &r)) throw ValidationError("label arithmetic overflow");
  return r;
}

VertexLabelling::VertexLabelling(std::vector<Label> values) : values_(std::move(values)) {
  std::vector<Label> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw ValidationError("labelling is not injective: value " + std::to_string(*dup) +
                          " repeats");
  }
}

VertexLabelling VertexLabelling::translated(Label c) const {
  std::vector<Label> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(values_[i], c);
  return VertexLabelling(std::move(out));
}

VertexLabelling VertexLabelling::negated() const { return scaled(-1); }

VertexLabelling VertexLabelling::scaled(Label a) const {
  if (a == 0) throw ValidationError("scaling by zero destroys injectivity");
  std::vector<Label> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_mul(values_[i], a);
  return VertexLabelling(std::move(out));
}

std::string_view to_string(LabelKind kind) {
  return kind == LabelKind::Sum ? "SUM" : "DIFF";
}

LabelKind label_kind_from_string(std::string_view s) {
  if (s == "SUM" || s == "sum") return LabelKind::Sum;
  if (s == "DIFF" || s == "diff") return LabelKind::Difference;
  throw ValidationError("unknown labelling kind '" + std::string(s) + "'");
}

EdgeLabelling derive_edge_labelling(const Graph& g, const VertexLabelling& f, LabelKind kind) {
  if (static_cast<int>(f.size()) != g.order()) {
    throw ValidationError("labelling covers " + std::to_string(f.size()) +
                          " vertices, graph has " + std::to_string(g.order()));
  }
  EdgeLabelling out{kind, {}};
  out.labels.reserve(g.size());
  for (const Edge& e : g.edges()) {
    Label value = kind == LabelKind::Sum ? checked_add(f[e.u], f[e.v])
                                         : checked_sub(f[e.u], f[e.v]);
    if (kind == LabelKind::Difference && value < 0) value = -value;
    out.labels.emplace_back(e, value);
  }
  return out;
}

std::size_t distinct_value_count(const EdgeLabelling& e) {
  std::vector<Label> values;
  values.reserve(e.labels.size());
  for (const auto& [edge, value] : e.labels) values.push_back(value);
  std::sort(values.begin(), values.end());
  return static_cast<std::size_t>(std::unique(values.begin(), values.end()) - values.begin());
}

std::size_t distinct_edge_values(const Graph& g, const VertexLabelling& f, LabelKind kind) {
  return distinct_value_count(derive_edge_labelling(g, f, kind));
}

CertificateVerdict verify_certificate(const Certificate& c) {
  const auto observed =
      static_cast<std::int64_t>(distinct_edge_values(c.graph, c.labelling, c.kind));
  return {observed == c.claimed_value, observed};
}

VertexLabelling parse_labelling(std::string_view text) {
  std::vector<std::pair<long long, Label>> entries;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    std::istringstream in(line);
    std::string a, b, extra;
    if (!(in >> a)) continue;
    if (a.front() == '#') continue;
    if (!(in >> b) || (in >> extra)) {
      throw ParseError("labelling line " + std::to_string(line_no) +
                           ": expected 'vertex value'",
                       line_no);
    }
    long long vertex = 0;
    Label value = 0;
    auto r1 = std::from_chars(a.data(), a.data() + a.size(), vertex);
    auto r2 = std::from_chars(b.data(), b.data() + b.size(), value);
    if (r1.ec != std::errc{} || r1.ptr != a.data() + a.size() || vertex < 0 ||
        r2.ec != std::errc{} || r2.ptr != b.data() + b.size()) {
      throw ParseError("labelling line " + std::to_string(line_no) + ": malformed number",
                       line_no);
    }
    entries.emplace_back(vertex, value);
  }
  std::vector<Label> values(entries.size());
  std::vector<char> seen(entries.size(), 0);
  for (const auto& [vertex, value] : entries) {
    if (vertex >= static_cast<long long>(entries.size()) || seen[vertex]) {
      throw ValidationError("labelling vertices must be exactly 0.." +
                            std::to_string(entries.size() - 1));
    }
    seen[vertex] = 1;
    values[vertex] = value;
  }
  return VertexLabelling(std::move(values));
}

std::string emit_labelling(const VertexLabelling& f) {
  std::ostringstream os;
  for (std::size_t v = 0; v < f.size(); ++v) os << v << ' ' << f[static_cast<Vertex>(v)] << '\n';
  return os.str();
}

}  // namespace sumdiff
