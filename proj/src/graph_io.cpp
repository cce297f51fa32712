#include "sumdiff/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "sumdiff/errors.hpp"

namespace sumdiff {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim_line_end(line);
  std::size_t offset = 0;
  if (line.starts_with(kGraph6Header)) offset = kGraph6Header.size();
  for (std::size_t i = offset; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6: non-printable byte at offset " + std::to_string(i), i);
    }
  }
  if (offset >= line.size()) {
    throw ParseError("graph6: missing length byte at offset " + std::to_string(offset),
                     offset);
  }
  const int first = static_cast<unsigned char>(line[offset]);
  if (first == 126) {
    throw ParseError("graph6: long-form length (n > 62) at offset " +
                         std::to_string(offset) + " is not supported",
                     offset);
  }
  const int n = first - 63;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body_bytes = (bits + 5) / 6;
  const std::size_t body_start = offset + 1;
  if (line.size() < body_start + body_bytes) {
    throw ParseError("graph6: truncated body, expected " + std::to_string(body_bytes) +
                         " bytes at offset " + std::to_string(line.size()),
                     line.size());
  }
  if (line.size() > body_start + body_bytes) {
    const std::size_t extra = body_start + body_bytes;
    throw ParseError("graph6: unexpected trailing byte at offset " + std::to_string(extra),
                     extra);
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(line[body_start + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw UnsupportedSizeError("graph6 output supports n <= 62, got n = " +
                               std::to_string(n));
  }
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> tokens;
    std::size_t t = 0;
    while (t < line.size()) {
      while (t < line.size() && (line[t] == ' ' || line[t] == '\t')) ++t;
      std::size_t s = t;
      while (t < line.size() && line[t] != ' ' && line[t] != '\t') ++t;
      if (t > s) tokens.push_back(line.substr(s, t - s));
    }
    auto to_int = [&](std::string_view tok) {
      int value = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || p != tok.data() + tok.size() || value < 0) {
        throw ParseError("edge list line " + std::to_string(line_no) +
                             ": malformed token '" + std::string(tok) + "'",
                         line_no);
      }
      return value;
    };

    if (n < 0) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw ParseError("edge list line " + std::to_string(line_no) +
                             ": expected header 'n <count>'",
                         line_no);
      }
      n = to_int(tokens[1]);
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError("edge list line " + std::to_string(line_no) +
                           ": expected two vertex ids",
                       line_no);
    }
    const int u = to_int(tokens[0]);
    const int v = to_int(tokens[1]);
    if (u >= n || v >= n) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": vertex id " +
                           std::to_string(u >= n ? u : v) + " >= n = " + std::to_string(n),
                       line_no);
    }
    if (u == v) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": loop at vertex " +
                           std::to_string(u),
                       line_no);
    }
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError("edge list: missing 'n <count>' header", line_no);
  return Graph(n, edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::vector<Graph> parse_graph6_stream(std::string_view text) {
  std::vector<Graph> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty() || line == kGraph6Header) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("write to '" + path + "' failed");
}

std::vector<Graph> read_graphs(const std::string& path, GraphFormat format) {
  const std::string text = read_text_file(path);
  if (format == GraphFormat::EdgeList) return {parse_edge_list(text)};
  return parse_graph6_stream(text);
}

}  // namespace sumdiff
