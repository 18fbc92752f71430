#pragma once

#include <iosfwd>
#include <string>

#include "ramsey_forge/coloring.hpp"
#include "ramsey_forge/graph.hpp"

namespace rf {

// Edge-list text format: header "n m", then one "u v" per line, 0-indexed.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Adjacency-matrix text format: n rows of 0/1 characters.
Graph read_adjacency_matrix(std::istream& in);
void write_adjacency_matrix(std::ostream& out, const Graph& g);

// Colored edge list: header "n m r", then "u v c" with colors 1..r.
EdgeColoring read_colored_edge_list(std::istream& in);
void write_colored_edge_list(std::ostream& out, const EdgeColoring& c);

Graph read_graph_file(const std::string& path);  // picks format by content
EdgeColoring read_coloring_file(const std::string& path);

}  // namespace rf
