#include <doctest.h>

#include <cmath>

#include "atlas.hpp"
#include "ramsey_forge/density.hpp"
#include "ramsey_forge/pseudorandom.hpp"

using namespace rf;

TEST_CASE("paley(5) is the five-cycle and paley(13) is 6-regular") {
    Graph p5 = paley(5);
    CHECK(p5 == Graph::cycle(5));  // squares mod 5 are {1,4}: exact C5 labeling

    Graph p13 = paley(13);
    for (int v = 0; v < 13; ++v) CHECK(p13.degree(v) == 6);

    CHECK_THROWS_AS(paley(9), PreconditionError);   // prime power, unsupported
    CHECK_THROWS_AS(paley(7), PreconditionError);   // 3 mod 4
}

TEST_CASE("paley graphs are self-complementary under x -> ax, a a non-residue") {
    for (long q : {5L, 13L, 17L, 29L, 37L, 101L}) {
        Graph g = paley(q);
        std::vector<bool> square(size_t(q), false);
        for (long x = 1; x < q; ++x) square[size_t(x * x % q)] = true;
        long a = 2;
        while (square[size_t(a)]) ++a;
        std::vector<int> perm(size_t(q));
        for (long x = 0; x < q; ++x) perm[size_t(x)] = int(a * x % q);
        CHECK(g.relabeled(perm) == g.complement());
    }
}

TEST_CASE("dgt degrees and the complementary-lines partition") {
    CHECK(dgt(3, 2).vertex_count() == 9);
    for (int v = 0; v < 9; ++v) CHECK(dgt(3, 2).degree(v) == 4);

    // the first t lines and the remaining r+1-t lines partition all pairs
    for (int r : {2, 3, 5, 7}) {
        for (int t = 1; t <= r; ++t) {
            Graph a = dgt(r, t);
            Graph whole = dgt(r, r + 1);
            CHECK(whole == Graph::complete(r * r));
            // edges of dgt(r,t) plus edges on the remaining lines = all pairs
            uint64_t remaining = whole.edge_count() - a.edge_count();
            CHECK(remaining == uint64_t(r + 1 - t) * (uint64_t(r) - 1) * uint64_t(r) * r / 2);
        }
    }
}

TEST_CASE("spectral profiles of K4 and C4") {
    SpectralProfile k4 = spectral_profile(Graph::complete(4));
    CHECK(k4.regular);
    CHECK(k4.degree == 3);
    CHECK(k4.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-9));
    for (int i = 1; i < 4; ++i) CHECK(k4.eigenvalues[size_t(i)] == doctest::Approx(-1.0).epsilon(1e-9));

    SpectralProfile c4 = spectral_profile(Graph::cycle(4));
    CHECK(c4.eigenvalues[0] == doctest::Approx(2.0));
    CHECK(c4.eigenvalues[1] == doctest::Approx(0.0));
    CHECK(c4.eigenvalues[2] == doctest::Approx(0.0));
    CHECK(c4.eigenvalues[3] == doctest::Approx(-2.0));
}

TEST_CASE("paley(13) spectrum: 6 and (-1 +- sqrt 13)/2 with multiplicity 6") {
    SpectralProfile prof = spectral_profile(paley(13));
    double lo = (-1.0 - std::sqrt(13.0)) / 2, hi = (-1.0 + std::sqrt(13.0)) / 2;
    CHECK(prof.eigenvalues[0] == doctest::Approx(6.0).epsilon(1e-9));
    for (int i = 1; i <= 6; ++i) CHECK(prof.eigenvalues[size_t(i)] == doctest::Approx(hi).epsilon(1e-9));
    for (int i = 7; i < 13; ++i) CHECK(prof.eigenvalues[size_t(i)] == doctest::Approx(lo).epsilon(1e-9));
    CHECK(std::abs(prof.eigen_sum) < 1e-6);
}

TEST_CASE("dgt(5,3) has spectral second max(t, r-t) = 3") {
    SpectralProfile prof = spectral_profile(dgt(5, 3));
    CHECK(prof.second == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("certify_mixing examples") {
    // paley(13) passes exhaustively at p = 1/2, lambda^2 = 13
    PseudorandomCert cert = certify_mixing(paley(13), Rational(1, 2), Rational(13), CertMode::exhaustive);
    CHECK(cert.pass);

    // empty graph: p = 0 and lambda = 0
    PseudorandomCert empty = certify_mixing(Graph::empty(6), Rational(0), Rational(0), CertMode::exhaustive);
    CHECK(empty.pass);

    // K44 with spectral lambda 4: the statistic is witnessed exhaustively
    PseudorandomCert k44 = certify_mixing(Graph::complete_bipartite(4, 4), Rational(1, 2), Rational(16),
                                          CertMode::exhaustive);
    CHECK(k44.pass);
    REQUIRE(k44.worst.has_value());
    // one side vs the other: |d - 1/2| sqrt(16) = 2; that's the maximum
    CHECK(k44.worst->statistic == doctest::Approx(2.0));

    // spectral mode
    PseudorandomCert spec = certify_mixing(paley(13), Rational(1, 2), Rational(13), CertMode::spectral);
    CHECK(spec.pass);
    CHECK(spec.spectral_lambda == doctest::Approx((std::sqrt(13.0) - 1) / 2 + 1).epsilon(1e-6));
    CHECK_FALSE(certify_mixing(paley(13), Rational(1, 3), Rational(13), CertMode::spectral).pass);
}

TEST_CASE("expander mixing consequence at n <= 12, exhaustively") {
    for (const Graph& g : {paley(5), dgt(3, 1), dgt(3, 2), Graph::cycle(8), Graph::complete(7)}) {
        SpectralProfile prof = spectral_profile(g);
        REQUIRE(prof.regular);
        double lam_sq = prof.second * prof.second + 1e-9;
        // exact certification against the measured eigenvalue must pass
        mpz_class num(llround(lam_sq * 1e12)), den(1000000000000L);
        PseudorandomCert cert = certify_mixing(g, Rational(prof.degree, g.vertex_count()),
                                               Rational(num, den), CertMode::exhaustive);
        CHECK(cert.pass);
    }
}

TEST_CASE("bi_dense_check examples") {
    BiDenseResult pass = bi_dense_check(Graph::complete(8), Rational(1, 2), Rational(1, 4),
                                        CertMode::exhaustive);
    CHECK(pass.pass);

    BiDenseResult fail = bi_dense_check(Graph::empty(8), Rational(1, 10), Rational(1, 4),
                                        CertMode::exhaustive);
    CHECK_FALSE(fail.pass);
    REQUIRE(fail.violation.has_value());
    CHECK(fail.violation_density == Rational(0));

    // paley(13) at q = 1/4, delta = 3/10: frozen by this exhaustive run
    BiDenseResult p13 = bi_dense_check(paley(13), Rational(1, 4), Rational(3, 10), CertMode::exhaustive);
    CHECK(p13.pass);
}

TEST_CASE("gnp determinism and edge-probability sanity") {
    Graph a = gnp(50, Rational(1, 3), 9);
    Graph b = gnp(50, Rational(1, 3), 9);
    CHECK(a == b);
    Graph c = gnp(50, Rational(1, 3), 10);
    CHECK_FALSE(a == c);
    // loose count check: mean 408, generous window
    CHECK(a.edge_count() > 250);
    CHECK(a.edge_count() < 580);
    CHECK(gnp(20, Rational(0), 1).edge_count() == 0);
    CHECK(gnp(20, Rational(1), 1).edge_count() == 190);
}
