#pragma once

#include <optional>
#include <vector>

#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/rational.hpp"

namespace rf {

// Paley graph on F_q; q prime, q = 1 (mod 4). x ~ y iff x - y is a
// nonzero square. (q-1)/2-regular.
Graph paley(long q);

// Delsarte-Goethals-Turyn graph on F_r^2; r prime, 1 <= t <= r+1.
// Lines through the origin in slope order 0..r-1 then vertical; x ~ y iff
// x - y is parallel to one of the first t. t(r-1)-regular.
Graph dgt(int r, int t);

// seeded G(n,p); edge decisions in fixed pair order
Graph gnp(int n, const Rational& p, uint64_t seed);

bool is_prime(long q);

struct SpectralProfile {
    bool regular = false;
    int degree = 0;
    std::vector<double> eigenvalues;  // descending
    double second = 0.0;              // max_{i>=2} |lambda_i|
    double tolerance = 1e-9;
    double eigen_sum = 0.0;
    double max_residual = 0.0;        // max ||Av - lambda v||_inf over pairs
};

// full symmetric spectrum, n <= 4096
SpectralProfile spectral_profile(const Graph& g, int max_n = 4096);

enum class CertMode { spectral, exhaustive, sampled };

struct PairStat {
    VertexSet a, b;
    double statistic = 0.0;  // |d(A,B) - p| * sqrt(|A||B|)
};

struct PseudorandomCert {
    Rational p;
    Rational lambda_sq;  // bound enters as lambda^2 so checks stay exact
    CertMode mode = CertMode::exhaustive;
    bool pass = false;
    uint64_t pairs_checked = 0;
    std::optional<PairStat> worst;  // exhaustive/sampled: max statistic seen
    double spectral_lambda = 0.0;   // spectral mode only
};

// |d(A,B) - p| <= lambda / sqrt(|A||B|) over disjoint ordered pairs.
// spectral: regular graphs, p = d/n, bound from the eigenvalue;
// exhaustive: all 3^n assignments, n <= 14; sampled: m seeded pairs.
PseudorandomCert certify_mixing(const Graph& g, const Rational& p, const Rational& lambda_sq,
                                CertMode mode, uint64_t seed = 0, uint64_t samples = 10000);

struct BiDenseResult {
    bool pass = false;
    uint64_t pairs_checked = 0;
    std::optional<std::pair<VertexSet, VertexSet>> violation;
    Rational violation_density;
};

// d(A,B) > q for all disjoint A, B with |A|,|B| >= delta n.
BiDenseResult bi_dense_check(const Graph& g, const Rational& q, const Rational& delta, CertMode mode,
                             uint64_t seed = 0, uint64_t samples = 10000);

}  // namespace rf
