#include "ramsey_forge/coloring.hpp"

#include "ramsey_forge/density.hpp"
#include "ramsey_forge/errors.hpp"

namespace rf {

EdgeColoring::EdgeColoring(Graph host, int colors, bool fill) : host_(std::move(host)), colors_(colors) {
    if (colors < 1) throw PreconditionError("coloring needs r >= 1");
    int n = host_.vertex_count();
    rows_.assign(size_t(colors), std::vector<Bitset>(size_t(n), Bitset(n)));
    (void)fill;
}

EdgeColoring EdgeColoring::uniform(const Graph& g, int colors, int color) {
    EdgeColoring c(g, colors, false);
    if (color < 1 || color > colors) throw PreconditionError("color id out of range");
    for (int v = 0; v < g.vertex_count(); ++v) c.rows_[size_t(color - 1)][size_t(v)] = g.neighbors(v);
    return c;
}

void EdgeColoring::set(int u, int v, int color) {
    if (color < 1 || color > colors_) throw PreconditionError("color id out of range");
    if (!host_.adjacent(u, v)) throw PreconditionError("coloring a host non-edge");
    for (auto& per_color : rows_) {
        per_color[size_t(u)].reset(v);
        per_color[size_t(v)].reset(u);
    }
    rows_[size_t(color - 1)][size_t(u)].set(v);
    rows_[size_t(color - 1)][size_t(v)].set(u);
}

int EdgeColoring::color(int u, int v) const {
    for (int c = 1; c <= colors_; ++c)
        if (rows_[size_t(c - 1)][size_t(u)].test(v)) return c;
    return 0;
}

bool EdgeColoring::total() const {
    for (int u = 0; u < host_.vertex_count(); ++u) {
        Bitset covered(host_.vertex_count());
        int sum = 0;
        for (const auto& per_color : rows_) {
            covered |= per_color[size_t(u)];
            sum += per_color[size_t(u)].count();
        }
        if (covered != host_.neighbors(u) || sum != host_.degree(u)) return false;
    }
    return true;
}

uint64_t EdgeColoring::edges_between(int color, const VertexSet& x, const VertexSet& y) const {
    uint64_t e = 0;
    for (int v = x.lowest(); v >= 0; v = x.next(v + 1)) e += uint64_t(color_row(color, v).count_and(y));
    return e;
}

Rational EdgeColoring::color_density_pair(int color, const VertexSet& x, const VertexSet& y) const {
    if (x.none() || y.none()) throw PreconditionError("color_density_pair: empty set");
    if (x.intersects(y)) throw PreconditionError("color_density_pair: sets overlap");
    return Rational(long(edges_between(color, x, y)), long(x.count()) * long(y.count()));
}

EdgeColoring EdgeColoring::with_swapped(int c1, int c2) const {
    EdgeColoring out = *this;
    std::swap(out.rows_[size_t(c1 - 1)], out.rows_[size_t(c2 - 1)]);
    return out;
}

Graph EdgeColoring::color_graph(int color) const {
    return Graph::from_rows(rows_[size_t(color - 1)]);
}

uint64_t EdgeColoring::digest() const {
    uint64_t h = host_.digest() ^ (uint64_t(colors_) << 32);
    for (const auto& per_color : rows_)
        for (const auto& row : per_color) {
            h ^= row.hash();
            h *= 1099511628211ull;
        }
    return h;
}

}  // namespace rf
