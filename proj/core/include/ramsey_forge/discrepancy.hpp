#pragma once

#include "ramsey_forge/extract.hpp"
#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/pattern.hpp"
#include "ramsey_forge/rational.hpp"
#include "ramsey_forge/report.hpp"

namespace rf {

struct HalfSetResult {
    VertexSet s;
    Rational achieved;  // |e(S) - eta C(|S|,2)|
    Rational target;    // D/5
    bool below_guarantee = false;
};

// Erdos-Goldberg-Pach-Spencer step: from a set R deviating by D edges
// from density eta, produce a floor(n/2)-set deviating by >= D/5.
// Greedy move ladder, seeded restarts, exhaustive fallback at n <= 24.
HalfSetResult egps_half_set(const Graph& g, const VertexSet& r, const Rational& eta, uint64_t seed = 0);

struct DiscrepancyReport {
    VertexSet s;
    Rational deviation;      // |e(S) - n^2/16| exact
    char r_choice = 'A';     // which of {A, B, A u B} seeded the ladder
    Rational claimed_target; // the D/5 value handed to the EGPS step
    bool below_guarantee = false;
    Json details;
};

// Theorem 3 pipeline: Lemma 4.1 with eps_i = (1 - 2^{i-k-2} eps)/2 and
// delta_i = 2^{i-k-2} eps, triangle-inequality choice of R, EGPS step.
DiscrepancyReport deviation_witness(const Graph& g, const PatternGraph& h, const Rational& eps,
                                    uint64_t seed = 0);

struct LowDiscrepancyGraph {
    Graph graph;       // the blow-up
    Graph base;        // K_k-free Gamma on 2^{k/2} vertices
    Json certificate;  // construction + verification record
};

// Proposition 1: seeded search for Gamma ~ G(l, 1/2), l = 2^{k/2}, that is
// K_k-free with |e(X) - |X|^2/4| <= 2 l^{3/2} for all X (exhaustive at
// l <= 16), blown up by n/l.
LowDiscrepancyGraph low_discrepancy_graph(int k, long n, uint64_t seed = 0, int budget = 256);

// |e(S) - n^2/16| for |S| = floor(n/2), exact
Rational half_set_deviation(const Graph& g, const VertexSet& s);

}  // namespace rf
