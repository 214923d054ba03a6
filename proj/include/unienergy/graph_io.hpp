#ifndef UNIENERGY_GRAPH_IO_HPP
#define UNIENERGY_GRAPH_IO_HPP

#include <string>
#include <vector>

#include "unienergy/graph.hpp"

namespace unienergy {

// Text edge list `n; u v; u v; ...` (0-based). Lines starting with
// `>>graph6<<` or containing no `;` parse as graph6.
LabeledGraph parse_graph_line(const std::string& line);

// Whole file: ignores blank lines and `#` comments; one graph per line.
std::vector<LabeledGraph> parse_graph_file(const std::string& path);

// First graph of a file.
LabeledGraph load_graph(const std::string& path);

std::string write_graph_text(const LabeledGraph& g);

LabeledGraph parse_graph6(const std::string& s);

}  // namespace unienergy

#endif
