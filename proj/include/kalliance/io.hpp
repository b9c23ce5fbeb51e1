#pragma once

#include <iosfwd>
#include <string>

#include "kalliance/graph.hpp"

namespace kalliance {

// Edge-list text format:
//
//   # optional comment lines
//   n m
//   u v        (m lines, 0-indexed)
//
// Blank lines and lines whose first non-space character is '#' are ignored.
// The writer emits edges with u < v in lexicographic order, so writing then
// parsing reproduces the graph and writing again reproduces the bytes.

/// Throws ParseError (with the 1-based line number) on malformed input,
/// repeated edges, or a header whose edge count does not match.
Graph parse_graph(std::istream& in);
Graph parse_graph_text(const std::string& text);
/// Throws InputError when the file cannot be opened.
Graph parse_graph_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
std::string write_graph_text(const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace kalliance
