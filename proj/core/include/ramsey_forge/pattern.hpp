#pragma once

#include <vector>

#include "ramsey_forge/graph.hpp"

namespace rf {

// A pattern graph H carries the structure the embedding procedures need:
// a degeneracy ordering (each vertex has at most `degeneracy` neighbors
// earlier in the order) and a proper coloring of chromatic size.
class PatternGraph {
public:
    explicit PatternGraph(Graph h);

    static PatternGraph clique(int k) { return PatternGraph(Graph::complete(k)); }
    static PatternGraph empty(int k) { return PatternGraph(Graph::empty(k)); }
    static PatternGraph path(int k) { return PatternGraph(Graph::path(k)); }
    static PatternGraph cycle(int k) { return PatternGraph(Graph::cycle(k)); }
    static PatternGraph star(int leaves) { return PatternGraph(Graph::star(leaves)); }

    const Graph& graph() const { return g_; }
    int k() const { return g_.vertex_count(); }
    bool edge(int i, int j) const { return g_.adjacent(i, j); }

    int degeneracy() const { return degeneracy_; }
    // order[pos] = vertex; vertex at position p has <= degeneracy()
    // neighbors among positions 0..p-1
    const std::vector<int>& degeneracy_order() const { return order_; }

    int chromatic_number() const { return chromatic_; }
    const std::vector<int>& proper_coloring() const { return coloring_; }  // colors 0..chi-1

    // back-neighbor count D(i,j) over the degeneracy order: number of
    // H-neighbors of the vertex at position j among positions 0..i-1
    int back_neighbors(int i, int j) const;

private:
    Graph g_;
    int degeneracy_ = 0;
    std::vector<int> order_;
    int chromatic_ = 0;
    std::vector<int> coloring_;
};

}  // namespace rf
