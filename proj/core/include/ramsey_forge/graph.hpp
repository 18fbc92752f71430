#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ramsey_forge/bitset.hpp"

namespace rf {

// Immutable simple undirected graph with bitset adjacency rows.
// Symmetric, loop-free; construction enforces both.
class Graph {
public:
    static constexpr int kMaxVertices = 1 << 20;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph from_rows(std::vector<Bitset> rows);  // validates symmetry

    static Graph empty(int n) { return from_edges(n, {}); }
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph complete_bipartite(int a, int b);
    static Graph star(int leaves);  // K_{1,leaves}, center = vertex 0
    static Graph disjoint_union(const Graph& a, const Graph& b);

    int vertex_count() const { return n_; }
    uint64_t edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    VertexSet all_vertices() const { return Bitset::full(n_); }

    Graph complement() const;

    // Induced subgraph on W. New vertices are W's members in increasing
    // order; map_out (if given) receives new-index -> old-index.
    Graph induced(const VertexSet& w, std::vector<int>* map_out = nullptr) const;

    // Replaces every vertex u by an independent m-set I_u (new indices
    // u*m .. u*m+m-1) and every edge by a complete bipartite graph.
    Graph blow_up(int m) const;

    Graph relabeled(const std::vector<int>& perm) const;  // perm[old] = new

    std::vector<std::pair<int, int>> edges() const;

    uint64_t digest() const;  // FNV over the adjacency bits, for reports

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    Graph() = default;

    int n_ = 0;
    uint64_t m_ = 0;
    std::vector<Bitset> adj_;
};

}  // namespace rf
