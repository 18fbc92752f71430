#include "ramsey_forge/pattern.hpp"

#include <algorithm>
#include <functional>

#include "ramsey_forge/errors.hpp"

namespace rf {

namespace {

// Repeatedly removes a minimum-degree vertex (lowest index on ties) and
// places it at the END of the order; the resulting order has back-degree
// bounded by the degeneracy.
std::pair<int, std::vector<int>> degeneracy_order_of(const Graph& g) {
    int k = g.vertex_count();
    std::vector<int> order(static_cast<size_t>(k));
    Bitset alive = Bitset::full(k);
    int degeneracy = 0;
    for (int pos = k - 1; pos >= 0; --pos) {
        int best = -1, best_deg = k + 1;
        for (int v = alive.lowest(); v >= 0; v = alive.next(v + 1)) {
            int d = g.neighbors(v).count_and(alive);
            if (d < best_deg) {
                best_deg = d;
                best = v;
            }
        }
        degeneracy = std::max(degeneracy, best_deg);
        order[size_t(pos)] = best;
        alive.reset(best);
    }
    return {degeneracy, order};
}

bool try_color(const Graph& g, int colors, std::vector<int>& out) {
    int k = g.vertex_count();
    out.assign(size_t(k), -1);
    // backtracking in vertex order, first vertex pinned to color 0
    std::vector<int> v(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) v[size_t(i)] = i;
    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == k) return true;
        int vert = v[size_t(idx)];
        int cap = std::min(colors, idx + 1);  // symmetry break: at most one new color
        for (int c = 0; c < cap; ++c) {
            bool ok = true;
            for (int u = 0; u < k && ok; ++u)
                if (out[size_t(u)] == c && g.adjacent(vert, u)) ok = false;
            if (!ok) continue;
            out[size_t(vert)] = c;
            if (rec(idx + 1)) return true;
            out[size_t(vert)] = -1;
        }
        return false;
    };
    return rec(0);
}

}  // namespace

PatternGraph::PatternGraph(Graph h) : g_(std::move(h)) {
    if (g_.vertex_count() < 1) throw PreconditionError("pattern must have at least one vertex");
    if (g_.vertex_count() > 64) throw PreconditionError("pattern too large");
    auto [d, order] = degeneracy_order_of(g_);
    degeneracy_ = d;
    order_ = std::move(order);
    for (int chi = 1; chi <= g_.vertex_count(); ++chi) {
        if (try_color(g_, chi, coloring_)) {
            chromatic_ = chi;
            break;
        }
    }
}

int PatternGraph::back_neighbors(int i, int j) const {
    int vj = order_[size_t(j)];
    int count = 0;
    for (int pos = 0; pos < i; ++pos)
        if (g_.adjacent(order_[size_t(pos)], vj)) ++count;
    return count;
}

}  // namespace rf
