#pragma once

#include <vector>

#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/rational.hpp"

namespace rf {

// Total edge coloring of a host graph (or of K_n) with colors 1..r.
// Stored as one bitset adjacency per color so color-restricted
// neighborhoods are single AND+popcount operations.
class EdgeColoring {
public:
    // all edges of g get `color`
    static EdgeColoring uniform(const Graph& g, int colors, int color);

    // complete host; every pair must be assigned before use
    static EdgeColoring complete_host(int n, int colors) { return EdgeColoring(Graph::complete(n), colors, false); }
    static EdgeColoring graph_host(const Graph& g, int colors) { return EdgeColoring(g, colors, false); }

    void set(int u, int v, int color);

    // 0 for host non-edges
    int color(int u, int v) const;

    const Bitset& color_row(int color, int v) const { return rows_[size_t(color - 1)][size_t(v)]; }

    int vertex_count() const { return host_.vertex_count(); }
    int colors() const { return colors_; }
    const Graph& host() const { return host_; }

    bool total() const;  // every host edge colored exactly once

    uint64_t edges_between(int color, const VertexSet& x, const VertexSet& y) const;
    Rational color_density_pair(int color, const VertexSet& x, const VertexSet& y) const;

    // the sub-coloring induced by swapping two color ids (used by the
    // pipeline's second branch)
    EdgeColoring with_swapped(int c1, int c2) const;

    // edges of a single color as a graph
    Graph color_graph(int color) const;

    uint64_t digest() const;

private:
    EdgeColoring(Graph host, int colors, bool fill);

    Graph host_;
    int colors_;
    std::vector<std::vector<Bitset>> rows_;  // [color-1][vertex]
};

}  // namespace rf
