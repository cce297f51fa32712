#ifndef SUMDIFF_GRAPH_IO_HPP
#define SUMDIFF_GRAPH_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "sumdiff/graph.hpp"

namespace sumdiff {

inline constexpr int kMaxGraph6Order = 62;

/// Short-form graph6 (n <= 62). A leading ">>graph6<<" header and trailing
/// line terminators are tolerated.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

/// "n <count>" header followed by one "u v" pair per line. Blank lines and
/// lines starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

enum class GraphFormat { Graph6, EdgeList };

/// graph6 files hold one graph per non-empty line; edge-list files hold one
/// graph.
std::vector<Graph> read_graphs(const std::string& path, GraphFormat format);
std::vector<Graph> parse_graph6_stream(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace sumdiff

#endif  // SUMDIFF_GRAPH_IO_HPP
