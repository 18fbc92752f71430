#include "ramsey_forge/graph.hpp"

#include "ramsey_forge/errors.hpp"

namespace rf {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0 || n > kMaxVertices) throw PreconditionError("graph size out of range");
    Graph g;
    g.n_ = n;
    g.adj_.assign(size_t(n), Bitset(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw PreconditionError("edge endpoint out of range");
        if (u == v) throw PreconditionError("self-loop rejected");
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    uint64_t total = 0;
    for (const auto& row : g.adj_) total += uint64_t(row.count());
    g.m_ = total / 2;
    return g;
}

Graph Graph::from_rows(std::vector<Bitset> rows) {
    Graph g;
    g.n_ = int(rows.size());
    if (g.n_ > kMaxVertices) throw PreconditionError("graph size out of range");
    uint64_t total = 0;
    for (int u = 0; u < g.n_; ++u) {
        if (rows[u].universe() != g.n_) throw PreconditionError("row universe mismatch");
        if (rows[u].test(u)) throw PreconditionError("self-loop rejected");
        total += uint64_t(rows[u].count());
    }
    for (int u = 0; u < g.n_; ++u)
        for (int v = rows[u].lowest(); v >= 0; v = rows[u].next(v + 1))
            if (!rows[v].test(u)) throw PreconditionError("asymmetric adjacency");
    g.adj_ = std::move(rows);
    g.m_ = total / 2;
    return g;
}

Graph Graph::complete(int n) {
    Graph g;
    g.n_ = n;
    g.adj_.assign(size_t(n), Bitset(n));
    for (int u = 0; u < n; ++u) {
        g.adj_[u] = Bitset::full(n);
        g.adj_[u].reset(u);
    }
    g.m_ = uint64_t(n) * (n - 1) / 2;
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw PreconditionError("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return from_edges(n, e);
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return from_edges(n, e);
}

Graph Graph::complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.push_back({i, a + j});
    return from_edges(a + b, e);
}

Graph Graph::star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return from_edges(leaves + 1, e);
}

Graph Graph::disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> e = a.edges();
    for (auto [u, v] : b.edges()) e.push_back({u + a.n_, v + a.n_});
    return from_edges(a.n_ + b.n_, e);
}

Graph Graph::complement() const {
    Graph g;
    g.n_ = n_;
    g.adj_.reserve(size_t(n_));
    for (int u = 0; u < n_; ++u) {
        Bitset row = adj_[u].complement_in_universe();
        row.reset(u);
        g.adj_.push_back(std::move(row));
    }
    g.m_ = uint64_t(n_) * (n_ - 1) / 2 - m_;
    return g;
}

Graph Graph::induced(const VertexSet& w, std::vector<int>* map_out) const {
    if (w.universe() != n_) throw PreconditionError("vertex set universe mismatch");
    std::vector<int> verts = w.to_vector();
    std::vector<int> old_to_new(size_t(n_), -1);
    for (size_t i = 0; i < verts.size(); ++i) old_to_new[size_t(verts[i])] = int(i);

    Graph g;
    g.n_ = int(verts.size());
    g.adj_.assign(verts.size(), Bitset(g.n_));
    uint64_t total = 0;
    for (size_t i = 0; i < verts.size(); ++i) {
        Bitset hits = adj_[size_t(verts[i])] & w;
        for (int v = hits.lowest(); v >= 0; v = hits.next(v + 1)) g.adj_[i].set(old_to_new[size_t(v)]);
        total += uint64_t(g.adj_[i].count());
    }
    g.m_ = total / 2;
    if (map_out) *map_out = std::move(verts);
    return g;
}

Graph Graph::blow_up(int m) const {
    if (m < 1) throw PreconditionError("blow_up needs m >= 1");
    if (uint64_t(n_) * uint64_t(m) > kMaxVertices) throw PreconditionError("blow_up too large");
    std::vector<std::pair<int, int>> e;
    e.reserve(size_t(m_) * uint64_t(m) * uint64_t(m));
    for (auto [u, v] : edges())
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) e.push_back({u * m + i, v * m + j});
    return from_edges(n_ * m, e);
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (int(perm.size()) != n_) throw PreconditionError("permutation size mismatch");
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : edges()) e.push_back({perm[size_t(u)], perm[size_t(v)]});
    return from_edges(n_, e);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve(size_t(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1)) e.push_back({u, v});
    return e;
}

uint64_t Graph::digest() const {
    uint64_t h = 1469598103934665603ull ^ uint64_t(n_);
    for (const auto& row : adj_) {
        h ^= row.hash();
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace rf
