#include <doctest.h>

#include "atlas.hpp"
#include "ramsey_forge/density.hpp"
#include "ramsey_forge/extract.hpp"
#include "ramsey_forge/oracles.hpp"
#include "ramsey_forge/pseudorandom.hpp"

using namespace rf;

TEST_CASE("split_or_embed finds a triangle in K4") {
    auto params = ExtractionParams::uniform(3, Rational(1, 2), Rational(1, 2), 1);
    SplitOrEmbedResult res = split_or_embed(Graph::complete(4), PatternGraph::clique(3), params);
    REQUIRE(res.is_embedding());
    CHECK(check_induced_embedding(Graph::complete(4), PatternGraph::clique(3), res.embedding().map));
}

TEST_CASE("split_or_embed on triangle-free C5 returns a verified witness") {
    Graph c5 = Graph::cycle(5);
    auto params = ExtractionParams::uniform(3, Rational(1, 2), Rational(1, 2), 5);
    SplitOrEmbedResult res = split_or_embed(c5, PatternGraph::clique(3), params);
    REQUIRE_FALSE(res.is_embedding());
    std::string why;
    CHECK(check_split_witness(c5, res.witness(), &why));

    // exhaustive re-verification of the per-vertex degree condition
    const SplitWitness& w = res.witness();
    for (int v = w.a.lowest(); v >= 0; v = w.a.next(v + 1)) {
        long deg = c5.neighbors(v).count_and(w.b);
        if (w.mode == SplitWitness::Mode::sparse)
            CHECK(Rational(deg) <= w.threshold * Rational(w.b.count()));
        else
            CHECK(Rational(deg) >= (Rational(1) - w.threshold) * Rational(w.b.count()));
    }
}

TEST_CASE("split_or_embed on the empty graph splits in sparse mode") {
    auto params = ExtractionParams::uniform(2, Rational(1, 2), Rational(1, 2), 9);
    SplitOrEmbedResult res = split_or_embed(Graph::empty(9), PatternGraph::clique(2), params);
    REQUIRE_FALSE(res.is_embedding());
    CHECK(res.witness().mode == SplitWitness::Mode::sparse);
    CHECK(edges_between(Graph::empty(9), res.witness().a, res.witness().b) == 0);
}

TEST_CASE("eh_pair floors and modes") {
    // empty graph, H=K2: zero-edge pair, both sides >= 2
    SplitWitness w = eh_pair(Graph::empty(8), PatternGraph::clique(2), Rational(1, 4));
    CHECK(w.a.count() >= 2);
    CHECK(w.b.count() >= 2);
    CHECK(edges_between(Graph::empty(8), w.a, w.b) == 0);

    // C5 is K3-free: witness floors are eps^{k-1} floor(n/k)
    Graph c5 = Graph::cycle(5);
    SplitWitness w2 = eh_pair(c5, PatternGraph::clique(3), Rational(1, 4));
    std::string why;
    CHECK(check_split_witness(c5, w2, &why));

    // K6 contains K3: the violated assertion surfaces as the found copy
    CHECK_THROWS_AS(eh_pair(Graph::complete(6), PatternGraph::clique(3), Rational(1, 4)),
                    EmbeddingFoundError);
}

TEST_CASE("theorem1_size_floor is always vacuous at desk scale") {
    CHECK(theorem1_size_floor(4, Rational(1, 4), 9) == 0);
    CHECK(theorem1_size_floor(2, Rational(1, 4), 1 << 20) == 0);
    CHECK(theorem1_size_floor(3, Rational(3, 7), 100) == 0);
}

TEST_CASE("sparse_or_dense_subset short-circuits on uniform graphs") {
    // complete graphs are P4-free with density 1
    DensityCertificate hi = sparse_or_dense_subset(Graph::complete(12), PatternGraph::path(4), Rational(1, 4));
    CHECK(hi.side == DensityCertificate::Side::high);
    CHECK(hi.w.count() == 12);

    DensityCertificate lo = sparse_or_dense_subset(Graph::empty(12), PatternGraph::path(4), Rational(1, 4));
    CHECK(lo.side == DensityCertificate::Side::low);
    CHECK(lo.w.count() == 12);
}

TEST_CASE("sparse_or_dense_subset on C5 matches the oracle optimum") {
    Graph c5 = Graph::cycle(5);
    DensityCertificate cert = sparse_or_dense_subset(c5, PatternGraph::clique(3), Rational(1, 4));
    std::string why;
    CHECK(check_density_certificate(c5, cert, &why));
    VertexSet best = best_sparse_or_dense(c5, Rational(1, 4));
    CHECK(cert.w.count() <= best.count());
    CHECK(cert.w.count() >= 2);
}

TEST_CASE("sparse_or_dense_subset recursion path on larger H-free graphs") {
    // n > 18 avoids the oracle fallback, so the Lemma 2.2 recursion runs
    Rng rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        Graph g = test::random_trianglefree(26, Rational(1, 3), rng.next());
        DensityCertificate cert =
            sparse_or_dense_subset(g, PatternGraph::clique(3), Rational(1, 4), rng.next());
        std::string why;
        CHECK_MESSAGE(check_density_certificate(g, cert, &why), why);
    }
    for (int trial = 0; trial < 6; ++trial) {
        Graph g = test::random_cograph(24, rng.next());
        DensityCertificate cert =
            sparse_or_dense_subset(g, PatternGraph::path(4), Rational(1, 8), rng.next());
        std::string why;
        CHECK_MESSAGE(check_density_certificate(g, cert, &why), why);
    }
}

TEST_CASE("equitable_density_partition on uniform and split graphs") {
    EquitablePartition p1 =
        equitable_density_partition(Graph::complete(9), PatternGraph::path(4), Rational(1, 4));
    CHECK(p1.parts.size() == 1);
    CHECK(p1.sides[0] == DensityCertificate::Side::high);

    EquitablePartition p2 =
        equitable_density_partition(Graph::empty(9), PatternGraph::path(4), Rational(1, 4));
    CHECK(p2.parts.size() == 1);
    CHECK(p2.sides[0] == DensityCertificate::Side::low);

    Graph split = Graph::disjoint_union(Graph::complete(6), Graph::empty(6));
    Rational eps(1, 4);
    EquitablePartition p3 = equitable_density_partition(split, PatternGraph::path(4), eps);
    std::string why;
    CHECK_MESSAGE(check_equitable_partition(split, p3, eps, &why), why);
}

TEST_CASE("equitable_density_partition invariants on random H-free inputs") {
    Rng rng(23);
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = test::random_trianglefree(10 + int(rng.below(8)), Rational(1, 3), rng.next());
        Rational eps(1, 4);
        EquitablePartition p = equitable_density_partition(g, PatternGraph::clique(3), eps, rng.next());
        std::string why;
        CHECK_MESSAGE(check_equitable_partition(g, p, eps, &why), why);
    }
}

TEST_CASE("equitable_density_partition rejects copy-rich graphs") {
    // P6 holds 8 labeled induced P3 copies, far above kappa * n^3
    Graph p6 = Graph::path(6);
    CHECK_THROWS_AS(equitable_density_partition(p6, PatternGraph::path(3), Rational(1, 4)),
                    PreconditionError);
}

TEST_CASE("hom_lower_bound examples") {
    HomogeneousWitness w = hom_lower_bound(Graph::complete(16), PatternGraph::path(4));
    CHECK(w.is_clique);
    CHECK(w.set.count() == 16);

    HomogeneousWitness w2 = hom_lower_bound(Graph::cycle(5), PatternGraph::clique(3));
    CHECK(w2.set.count() >= 2);
    CHECK(classify_homogeneous(Graph::cycle(5), w2.set).has_value());
}

TEST_CASE("hom_lower_bound beats the floor and respects the oracle") {
    Rng rng(41);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = test::random_trianglefree(20, Rational(1, 4), rng.next());
        HomogeneousWitness w = hom_lower_bound(g, PatternGraph::clique(3), rng.next());
        CHECK(classify_homogeneous(g, w.set).has_value());
        CHECK(w.set.count() >= erdos_szekeres_floor(20));
        CHECK(w.set.count() <= max_homogeneous(g).set.count());
    }
}

TEST_CASE("es_bisection guarantee across sizes") {
    Rng rng(3);
    for (int n : {2, 3, 5, 9, 16, 17, 33}) {
        Graph g = gnp(n, Rational(1, 2), rng.next());
        HomogeneousWitness w = es_bisection(g);
        CHECK(classify_homogeneous(g, w.set).has_value());
        CHECK(w.set.count() >= erdos_szekeres_floor(n));
    }
}

TEST_CASE("determinism: identical inputs and seed give identical outputs") {
    Graph g = test::random_trianglefree(14, Rational(1, 3), 77);
    auto params = ExtractionParams::uniform(3, Rational(1, 4), Rational(1, 2), 42);
    SplitOrEmbedResult a = split_or_embed(g, PatternGraph::clique(3), params);
    SplitOrEmbedResult b = split_or_embed(g, PatternGraph::clique(3), params);
    CHECK(a.is_embedding() == b.is_embedding());
    if (!a.is_embedding()) {
        CHECK(a.witness().a == b.witness().a);
        CHECK(a.witness().b == b.witness().b);
    }
    DensityCertificate c1 = sparse_or_dense_subset(g, PatternGraph::clique(3), Rational(1, 4), 42);
    DensityCertificate c2 = sparse_or_dense_subset(g, PatternGraph::clique(3), Rational(1, 4), 42);
    CHECK(c1.w == c2.w);
}
