#include <doctest.h>

#include "atlas.hpp"
#include "ramsey_forge/density.hpp"
#include "ramsey_forge/pseudorandom.hpp"
#include "ramsey_forge/sparse.hpp"

using namespace rf;

namespace {

// synthetic honest finder: per graph, greedily grow X among low-degree
// vertices and pick Y as the vertices with fewest edges into X; exact
// verification decides whether the candidate is admissible
PairFinder greedy_finder(const Rational& rho, const Rational& eps_pair) {
    PairFinder f;
    f.spec = {Rational(0), rho, eps_pair, 2};
    f.find = [rho, eps_pair](const std::vector<Graph>& graphs, const VertexSet& u) -> PairResult {
        long p = rho.ceil_times(u.count());
        if (p < 1) throw SearchFailure("greedy_finder: degenerate size");
        for (int gi = 0; gi < int(graphs.size()); ++gi) {
            const Graph& g = graphs[size_t(gi)];
            // vertices of U sorted by degree within U
            std::vector<std::pair<long, int>> by_deg;
            for (int v = u.lowest(); v >= 0; v = u.next(v + 1))
                by_deg.push_back({g.neighbors(v).count_and(u), v});
            std::sort(by_deg.begin(), by_deg.end());
            VertexSet x(u.universe());
            for (long i = 0; i < p; ++i) x.set(by_deg[size_t(i)].second);
            std::vector<std::pair<long, int>> rest;
            for (int v = u.lowest(); v >= 0; v = u.next(v + 1))
                if (!x.test(v)) rest.push_back({g.neighbors(v).count_and(x), v});
            if (long(rest.size()) < p) continue;
            std::sort(rest.begin(), rest.end());
            VertexSet y(u.universe());
            for (long i = 0; i < p; ++i) y.set(rest[size_t(i)].second);
            if (density_pair(g, x, y) <= eps_pair) return {gi, x, y};
        }
        throw SearchFailure("greedy_finder: no admissible pair");
    };
    return f;
}

}  // namespace

TEST_CASE("level 1: the finder pair is a t=2 witness") {
    std::vector<Graph> graphs = {Graph::empty(32)};
    PairFinder f = greedy_finder(Rational(1, 4), Rational(1, 8));
    SparseWitness w = iterate_sparse(graphs, f, 1, Rational(1, 2), Bitset::full(32));
    std::string why;
    CHECK_MESSAGE(verify_sparse_witness(graphs, w, &why), why);
    CHECK(w.families[0].size() == 2);
    CHECK(w.set_size() == 8);
}

TEST_CASE("compose on empty graphs: densities zero, counts double") {
    std::vector<Graph> graphs = {Graph::empty(64)};
    PairFinder f = greedy_finder(Rational(1, 4), Rational(1, 8));
    for (int h = 2; h <= 3; ++h) {
        SparseWitness w = iterate_sparse(graphs, f, h, Rational(1, 2), Bitset::full(64));
        std::string why;
        CHECK_MESSAGE(verify_sparse_witness(graphs, w, &why), why);
        CHECK(w.family_product() >= (1 << h));
        for (const auto& fam : w.families)
            CHECK(density_multi(graphs[0], fam) == Rational(0));
    }
}

namespace {

// t=1 inner generator: one set per graph; single-part families have
// density zero by convention, so this is a legitimate (alpha, rho, eps, 1)
// supplier on any universe
SparseGenerator trivial_generator(size_t r, const Rational& rho, const Rational& eps) {
    SparseGenerator gen;
    gen.spec = {Rational(0), rho, eps, 1};
    gen.gen = [r, rho, eps](const VertexSet& u) {
        SparseWitness w;
        w.universe = u;
        w.rho = rho;
        w.eps = eps;
        w.t_claim = 1;
        w.families.assign(r, {u.take_lowest(rho.ceil_times(u.count()))});
        return w;
    };
    return gen;
}

}  // namespace

TEST_CASE("compose_sparse on two disjoint cliques is verifiable") {
    // inside one clique no sparse pair exists, so the inner supplier is
    // the trivial t=1 family; composition still doubles the count
    Graph g = Graph::disjoint_union(Graph::complete(8), Graph::complete(8));
    std::vector<Graph> graphs = {g};
    PairFinder f = greedy_finder(Rational(1, 4), Rational(1, 8));
    SparseGenerator inner = trivial_generator(1, Rational(1, 2), Rational(1, 2));
    SparseWitness w = compose_sparse(graphs, f, inner, Bitset::full(16));
    std::string why;
    CHECK_MESSAGE(verify_sparse_witness(graphs, w, &why), why);
    CHECK(w.t_claim == 2);
    CHECK(w.families[0].size() == 2);
    CHECK(w.rho >= f.spec.rho * inner.spec.rho / Rational(2));
    CHECK(density_multi(g, w.families[0]) <= Rational(1, 2));
}

TEST_CASE("pair (G, complement) via the eh finder composes at r=2") {
    // rho = eps^{k-1}/(2k) = 1/384 forces a large host for two levels
    Graph g = Graph::cycle(5).blow_up(308);  // triangle-free, 1540 vertices
    std::vector<Graph> graphs = {g, g.complement()};
    PairFinder f = eh_pair_finder(PatternGraph::clique(3), Rational(1, 8), 11);
    SparseWitness w = iterate_sparse(graphs, f, 2, Rational(1, 2), Bitset::full(1540));
    std::string why;
    CHECK_MESSAGE(verify_sparse_witness(graphs, w, &why), why);
    CHECK(w.family_product() >= 4);
}

TEST_CASE("corollary parameters h=3 on an exact dyadic instance") {
    std::vector<Graph> graphs = {Graph::empty(256)};
    PairFinder f = greedy_finder(Rational(1, 2), Rational(1, 8));
    SparseWitness w = iterate_sparse(graphs, f, 3, Rational(1, 2), Bitset::full(256));
    // 2^{1-h} rho^h |V| = (1/4)(1/8)(256) = 8
    CHECK(w.set_size() == 8);
    CHECK(w.rho == Rational(8, 256));
    CHECK(w.family_product() >= 8);
}

TEST_CASE("low_density_member examples") {
    SUBCASE("empty graph") {
        std::vector<Graph> graphs = {Graph::empty(64)};
        PairFinder f = greedy_finder(Rational(1, 4), Rational(1, 16));
        LowDensityMember m = low_density_member(graphs, f, Rational(1, 4), Rational(1, 2));
        CHECK(m.graph_index == 0);
        CHECK(density_set_or_zero(graphs[0], m.w) == Rational(0));
    }
    SUBCASE("sparse random graph") {
        std::vector<Graph> graphs = {gnp(64, Rational(1, 20), 5)};
        PairFinder f = greedy_finder(Rational(1, 4), Rational(1, 16));
        LowDensityMember m = low_density_member(graphs, f, Rational(1, 4), Rational(1, 2));
        CHECK(density_set_or_zero(graphs[size_t(m.graph_index)], m.w) <= Rational(1, 2));
    }
    SUBCASE("K32 against its complement picks the complement") {
        Graph k = Graph::complete(32);
        std::vector<Graph> graphs = {k, k.complement()};
        PairFinder f = greedy_finder(Rational(1, 8), Rational(1, 16));
        LowDensityMember m = low_density_member(graphs, f, Rational(1, 8), Rational(1, 2));
        CHECK(m.graph_index == 1);
        CHECK(density_set_or_zero(graphs[size_t(m.graph_index)], m.w) <= Rational(1, 2));
    }
}

TEST_CASE("monotone weakening: trimmed witness verifies at smaller rho") {
    Rng rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Graph> graphs = {gnp(48, Rational(1, 16), rng.next())};
        PairFinder f = greedy_finder(Rational(1, 4), Rational(1, 8));
        SparseWitness w = iterate_sparse(graphs, f, 2, Rational(1, 2), Bitset::full(48));
        Rational rho_prime = w.rho / Rational(2);
        SparseWitness weak = weaken_witness(graphs, w, rho_prime, rng.next());
        std::string why;
        CHECK_MESSAGE(verify_sparse_witness(graphs, weak, &why), why);
        CHECK(weak.set_size() == rho_prime.ceil_times(48));
        SparseSpec spec{Rational(0), rho_prime, Rational(1, 2), w.t_claim};
        CHECK(witness_satisfies(weak, spec));
    }
}

TEST_CASE("verifier rejects corrupted witnesses") {
    std::vector<Graph> graphs = {Graph::complete(16)};
    SparseWitness w;
    w.universe = Bitset::full(16);
    w.rho = Rational(1, 8);
    w.eps = Rational(1, 4);
    w.t_claim = 2;
    w.families = {{Bitset::of(16, {0, 1}), Bitset::of(16, {2, 3})}};
    std::string why;
    // sizes are fine but K16 cross-density is 1 > eps
    CHECK(w.families[0][0].count() == w.rho.ceil_times(16));
    CHECK_FALSE(verify_sparse_witness(graphs, w, &why));

    w.families = {{Bitset::of(16, {0, 1}), Bitset::of(16, {1, 2})}};  // overlap
    CHECK_FALSE(verify_sparse_witness(graphs, w, &why));
}
