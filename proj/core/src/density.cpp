#include "ramsey_forge/density.hpp"

#include "ramsey_forge/errors.hpp"

namespace rf {

uint64_t edges_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
    uint64_t e = 0;
    for (int v = x.lowest(); v >= 0; v = x.next(v + 1)) e += uint64_t(g.neighbors(v).count_and(y));
    return e;
}

uint64_t edges_within(const Graph& g, const VertexSet& a) {
    uint64_t twice = 0;
    for (int v = a.lowest(); v >= 0; v = a.next(v + 1)) twice += uint64_t(g.neighbors(v).count_and(a));
    return twice / 2;
}

Rational density_pair(const Graph& g, const VertexSet& x, const VertexSet& y) {
    if (x.universe() != g.vertex_count() || y.universe() != g.vertex_count())
        throw PreconditionError("density_pair: universe mismatch");
    if (x.none() || y.none()) throw PreconditionError("density_pair: empty set");
    if (x.intersects(y)) throw PreconditionError("density_pair: sets overlap");
    long pairs = long(x.count()) * long(y.count());
    return Rational(long(edges_between(g, x, y)), pairs);
}

Rational density_set(const Graph& g, const VertexSet& a) {
    if (a.universe() != g.vertex_count()) throw PreconditionError("density_set: universe mismatch");
    long sz = a.count();
    if (sz < 2) throw PreconditionError("density_set: |A| >= 2 required");
    return Rational(long(edges_within(g, a)), sz * (sz - 1) / 2);
}

Rational density_set_or_zero(const Graph& g, const VertexSet& a) {
    if (a.count() < 2) return Rational(0);
    return density_set(g, a);
}

Rational density_multi(const Graph& g, const std::vector<VertexSet>& parts) {
    if (parts.empty()) throw PreconditionError("density_multi: t >= 1 required");
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].universe() != g.vertex_count()) throw PreconditionError("density_multi: universe mismatch");
        for (size_t j = i + 1; j < parts.size(); ++j)
            if (parts[i].intersects(parts[j])) throw PreconditionError("density_multi: parts overlap");
    }
    if (parts.size() == 1) return Rational(0);
    mpz_class num = 0, den = 0;
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j) {
            num += mpz_class(long(edges_between(g, parts[i], parts[j])));
            den += mpz_class(long(parts[i].count())) * long(parts[j].count());
        }
    if (den == 0) throw PreconditionError("density_multi: all parts empty");
    return Rational(num, den);
}

}  // namespace rf
