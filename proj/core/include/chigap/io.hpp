#pragma once

#include "chigap/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chigap {

enum class GraphFormat { graph6, edge_list };

/// graph6 line for g (no trailing newline): N(n) followed by the upper
/// triangle of the adjacency matrix read column by column, six bits per
/// character, offset 63.
std::string to_graph6(const Graph& g);

/// Parses one graph6 line. Rejects bad characters, wrong length and nonzero
/// padding bits.
Graph from_graph6(std::string_view line);

/// One graph per nonempty line; an optional ">>graph6<<" header is skipped.
std::vector<Graph> read_graph6(std::istream& in);

/// Edge-list text: `n m` header line, then m `u v` lines with 0-based ids.
/// `#` starts a comment. Several graphs may follow one another in a stream.
std::vector<Graph> read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// graph6 when the first nonblank line starts with a graph6 byte (63..126),
/// edge list when it starts with a digit or comment, nullopt for an empty
/// stream.
std::optional<GraphFormat> detect_format(std::string_view text);

/// Reads every graph in the stream, inferring the format unless given.
std::vector<Graph> read_graphs(std::istream& in, std::optional<GraphFormat> format = {});

}  // namespace chigap
