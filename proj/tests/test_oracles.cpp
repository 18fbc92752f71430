#include <doctest.h>

#include "atlas.hpp"
#include "ramsey_forge/density.hpp"
#include "ramsey_forge/oracles.hpp"
#include "ramsey_forge/discrepancy.hpp"
#include "ramsey_forge/extract.hpp"
#include "ramsey_forge/pseudorandom.hpp"

using namespace rf;

TEST_CASE("count_labeled_induced basics") {
    CHECK(count_labeled_induced(Graph::cycle(4), PatternGraph::clique(2)) == 8);
    CHECK(count_labeled_induced(Graph::complete(3), PatternGraph::path(3)) == 0);
    CHECK(count_labeled_induced(Graph::cycle(4), PatternGraph::empty(2)) == 4);
}

TEST_CASE("count_labeled_induced(G, K_k) = k! * cliques, independent recursion") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = gnp(9, Rational(1, 2), rng.next());
        for (int k = 2; k <= 4; ++k) {
            mpz_class fact = 1;
            for (int i = 2; i <= k; ++i) fact *= i;
            CHECK(count_labeled_induced(g, PatternGraph::clique(k)) == fact * count_cliques(g, k));
        }
    }
}

TEST_CASE("max_homogeneous on known graphs") {
    CHECK(max_homogeneous(Graph::cycle(5)).set.count() == 2);
    CHECK(max_homogeneous(Graph::complete(7)).set.count() == 7);
    // paley(13): clique number = independence number = 3 (exhaustive search)
    HomogeneousSet hs = max_homogeneous(paley(13));
    CHECK(hs.set.count() == 3);
}

TEST_CASE("max_homogeneous is complement-invariant in size") {
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = gnp(12, Rational(1, 3), rng.next());
        CHECK(max_homogeneous(g).set.count() == max_homogeneous(g.complement()).set.count());
    }
}

TEST_CASE("Erdos-Szekeres sanity on small random graphs") {
    Rng rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + int(rng.below(9));
        Graph g = gnp(n, Rational(1 + long(rng.below(9)), 10), rng.next());
        long floor = erdos_szekeres_floor(n);
        CHECK(max_homogeneous(g).set.count() >= floor);
    }
}

TEST_CASE("best_sparse_or_dense examples") {
    CHECK(best_sparse_or_dense(Graph::empty(7), Rational(1, 8)).count() == 7);
    CHECK(best_sparse_or_dense(Graph::complete(6), Rational(1, 4)).count() == 6);
    // C5 at eps = 1/4: every 3-set has density 1/3 or 2/3, so the best is 2
    VertexSet w = best_sparse_or_dense(Graph::cycle(5), Rational(1, 4));
    CHECK(w.count() == 2);
}

TEST_CASE("best_half_subset frozen values") {
    // empty graph on 8: any half-set deviates by |0 - 4| = 4
    Graph e8 = Graph::empty(8);
    VertexSet s = best_half_subset(e8);
    CHECK(s.count() == 4);
    CHECK(half_set_deviation(e8, s) == Rational(4));

    // K8: |C(4,2) - 4| = 2
    Graph k8 = Graph::complete(8);
    CHECK(half_set_deviation(k8, best_half_subset(k8)) == Rational(2));

    // K44: one side is the exact maximizer, deviation 4
    Graph k44 = Graph::complete_bipartite(4, 4);
    CHECK(half_set_deviation(k44, best_half_subset(k44)) == Rational(4));
}

TEST_CASE("exhaustive_induced_ramsey verdicts") {
    CHECK(exhaustive_induced_ramsey(Graph::path(2), PatternGraph::clique(2)));
    CHECK(exhaustive_induced_ramsey(Graph::cycle(4), PatternGraph::clique(2)));
    CHECK_FALSE(exhaustive_induced_ramsey(Graph::complete(3), PatternGraph::path(3)));
    // all 2^5 colorings of C5 leave a monochromatic induced P3
    CHECK(exhaustive_induced_ramsey(Graph::cycle(5), PatternGraph::path(3)));
}

TEST_CASE("is_k_universal") {
    CHECK_FALSE(is_k_universal(Graph::complete(10), 2));  // no non-edge
    CHECK(is_k_universal(Graph::cycle(5), 2));
    CHECK(is_k_universal(paley(13), 3));  // all four 3-vertex classes appear
    CHECK_FALSE(is_k_universal(Graph::cycle(5), 3));      // no triangle
}

TEST_CASE("isomorphism class counts on <= 5 vertices") {
    CHECK(isomorphism_classes(1).size() == 1);
    CHECK(isomorphism_classes(2).size() == 2);
    CHECK(isomorphism_classes(3).size() == 4);
    CHECK(isomorphism_classes(4).size() == 11);
    CHECK(isomorphism_classes(5).size() == 34);
}

TEST_CASE("oracle budgets are hard errors") {
    CHECK_THROWS_AS(max_homogeneous(Graph::empty(41)), BudgetError);
    CHECK_THROWS_AS(best_sparse_or_dense(Graph::empty(19), Rational(1, 4)), BudgetError);
    CHECK_THROWS_AS(best_half_subset(Graph::empty(25)), BudgetError);
    CHECK_THROWS_AS(exhaustive_induced_ramsey(Graph::complete(8), PatternGraph::clique(3)), BudgetError);
    CHECK_THROWS_AS(is_k_universal(Graph::empty(8), 6), BudgetError);
}
