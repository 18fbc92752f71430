#include <doctest.h>

#include <sstream>

#include "atlas.hpp"
#include "ramsey_forge/density.hpp"
#include "ramsey_forge/io.hpp"
#include "ramsey_forge/pseudorandom.hpp"
#include "ramsey_forge/rng.hpp"

using namespace rf;

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
    CHECK(Rational(1, 2).pow(10) == Rational(1, 1024));
    CHECK(Rational::pow2(-3) == Rational(1, 8));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(1, 3).ceil_times(10) == 4);
    CHECK(Rational(1, 3).floor_times(10) == 3);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
}

TEST_CASE("density_pair on C4 and K5") {
    Graph c4 = Graph::cycle(4);
    VertexSet x = Bitset::of(4, {0, 1}), y = Bitset::of(4, {2, 3});
    CHECK(density_pair(c4, x, y) == Rational(2, 4));

    Graph k5 = Graph::complete(5);
    CHECK(density_pair(k5, Bitset::of(5, {0, 2}), Bitset::of(5, {1, 3, 4})) == Rational(1));

    CHECK_THROWS_AS(density_pair(c4, x, Bitset::of(4, {1, 2})), PreconditionError);
    CHECK_THROWS_AS(density_pair(c4, x, Bitset(4)), PreconditionError);
}

TEST_CASE("density_pair on paley(13): frozen edge enumeration") {
    Graph p13 = paley(13);
    VertexSet x(13), y(13);
    for (int v = 0; v < 6; ++v) x.set(v);
    for (int v = 6; v < 13; ++v) y.set(v);
    // independent Python edge enumeration over quadratic residues: 16 of 42
    CHECK(density_pair(p13, x, y) == Rational(16, 42));
}

TEST_CASE("density_set examples") {
    CHECK(density_set(Graph::empty(6), Bitset::of(6, {0, 2, 4})) == Rational(0));
    CHECK(density_set(Graph::complete(4), Bitset::full(4)) == Rational(1));
    CHECK(density_set(Graph::cycle(5), Bitset::full(5)) == Rational(5, 10));
    CHECK_THROWS_AS(density_set(Graph::complete(4), Bitset::of(4, {1})), PreconditionError);
}

TEST_CASE("density_multi examples and conventions") {
    Graph c4 = Graph::cycle(4);
    CHECK(density_multi(c4, {Bitset::of(4, {0, 1})}) == Rational(0));  // t=1 convention
    CHECK(density_multi(c4, {Bitset::of(4, {0, 1}), Bitset::of(4, {2, 3})}) == Rational(2, 4));
    Graph k3 = Graph::complete(3);
    CHECK(density_multi(k3, {Bitset::of(3, {0}), Bitset::of(3, {1}), Bitset::of(3, {2})}) == Rational(1));
    CHECK_THROWS_AS(density_multi(c4, {Bitset::of(4, {0, 1}), Bitset::of(4, {1, 2})}), PreconditionError);
}

TEST_CASE("density_multi over equal parts equals the mean of pairwise densities") {
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = gnp(12, Rational(1, 2), rng.next());
        std::vector<VertexSet> parts;
        for (int p = 0; p < 3; ++p) {
            VertexSet s(12);
            for (int i = 0; i < 3; ++i) s.set(p * 3 + i);
            parts.push_back(s);
        }
        Rational mean(0);
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = i + 1; j < parts.size(); ++j) mean += density_pair(g, parts[i], parts[j]);
        mean = mean / Rational(3);
        CHECK(density_multi(g, parts) == mean);
    }
}

TEST_CASE("complement duality: d(X,Y) + d_complement(X,Y) = 1") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = gnp(10, Rational(2, 5), rng.next());
        Graph gc = g.complement();
        VertexSet x = Bitset::of(10, {0, 3, 5}), y = Bitset::of(10, {1, 2, 8, 9});
        CHECK(density_pair(g, x, y) + density_pair(gc, x, y) == Rational(1));
    }
}

TEST_CASE("complement of C5 is isomorphic to C5") {
    Graph c5 = Graph::cycle(5);
    CHECK(test::are_isomorphic(c5, c5.complement()));
}

TEST_CASE("blow_up identities") {
    Graph k2 = Graph::complete(2);
    Graph b = k2.blow_up(2);
    CHECK(test::are_isomorphic(b, Graph::complete_bipartite(2, 2)));
    CHECK(b.edge_count() == 4);

    Rng rng(13);
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = gnp(6, Rational(1, 2), rng.next());
        int m = 1 + int(rng.below(3));
        Graph bu = g.blow_up(m);
        CHECK(bu.edge_count() == uint64_t(m) * uint64_t(m) * g.edge_count());
    }
}

TEST_CASE("induced subgraph of paley(13) on {0,1,2}: frozen residue check") {
    Graph p13 = paley(13);
    Graph sub = p13.induced(Bitset::of(13, {0, 1, 2}));
    // differences 1 and 1 are residues, 2 is not: the path 0-1-2
    CHECK(sub.edge_count() == 2);
    CHECK(sub.adjacent(0, 1));
    CHECK(sub.adjacent(1, 2));
    CHECK_FALSE(sub.adjacent(0, 2));
}

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), PreconditionError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 5}}), PreconditionError);
}

TEST_CASE("edge list and adjacency matrix round-trips reproduce the adjacency exactly") {
    Rng rng(21);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = gnp(3 + int(rng.below(20)), Rational(1, 3), rng.next());
        {
            std::stringstream ss;
            write_edge_list(ss, g);
            CHECK(read_edge_list(ss) == g);
        }
        {
            std::stringstream ss;
            write_adjacency_matrix(ss, g);
            CHECK(read_adjacency_matrix(ss) == g);
        }
    }
}

TEST_CASE("colored edge list round-trip") {
    Graph g = Graph::cycle(6);
    EdgeColoring c = EdgeColoring::graph_host(g, 2);
    int i = 0;
    for (auto [u, v] : g.edges()) c.set(u, v, 1 + (i++ % 2));
    std::stringstream ss;
    write_colored_edge_list(ss, c);
    EdgeColoring back = read_colored_edge_list(ss);
    CHECK(back.colors() == 2);
    CHECK(back.host() == g);
    for (auto [u, v] : g.edges()) CHECK(back.color(u, v) == c.color(u, v));
}

TEST_CASE("edge list parse errors carry line numbers") {
    std::stringstream ss("3 2\n0 1\n0 9\n");
    try {
        read_edge_list(ss);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("edge coloring totality and color rows") {
    Graph g = Graph::path(4);
    EdgeColoring c = EdgeColoring::graph_host(g, 2);
    c.set(0, 1, 1);
    c.set(1, 2, 2);
    CHECK_FALSE(c.total());
    c.set(2, 3, 1);
    CHECK(c.total());
    CHECK(c.color(0, 1) == 1);
    CHECK(c.color(1, 3) == 0);
    CHECK(c.color_row(1, 2).test(3));
    CHECK(c.with_swapped(1, 2).color(0, 1) == 2);
}
