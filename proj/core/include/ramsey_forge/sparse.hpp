#pragma once

#include <functional>
#include <vector>

#include "ramsey_forge/extract.hpp"
#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/pattern.hpp"
#include "ramsey_forge/rational.hpp"

namespace rf {

// Parameters of the (alpha, rho, eps, t)-sparse property. A witness
// generator declared at one spec also serves any monotone weakening
// (alpha' >= alpha, rho' <= rho, eps' >= eps, t' <= t).
struct SparseSpec {
    Rational alpha, rho, eps;
    long t = 1;
};

// Per-graph families of equal-size disjoint subsets of U with small
// multi-density; the exact object of Definition 3.1.
struct SparseWitness {
    VertexSet universe;
    Rational rho;  // sets all have size ceil(rho * |U|)
    Rational eps;
    long t_claim = 1;
    std::vector<std::vector<VertexSet>> families;  // families[i] belongs to graph i

    long set_size() const { return rho.ceil_times(universe.count()); }
    mpz_class family_product() const;
};

// Definition 3.1 verbatim at the witness's own declared parameters:
// family per graph, in-family disjointness, equal ceil(rho|U|) sizes,
// per-graph multi-density <= eps, product of counts >= t_claim.
bool verify_sparse_witness(const std::vector<Graph>& graphs, const SparseWitness& w,
                           std::string* why = nullptr);

// monotone acceptance: the witness's declared parameters dominate the spec
bool witness_satisfies(const SparseWitness& w, const SparseSpec& spec);

// materialized weakening to a smaller rho: density-aware trimming to the
// exact ceil(rho'|U|) sizes (greedy, then seeded random repair)
SparseWitness weaken_witness(const std::vector<Graph>& graphs, const SparseWitness& w,
                             const Rational& rho_prime, uint64_t seed = 0);

struct PairResult {
    int graph_index = 0;
    VertexSet x, y;
};

// The pluggable (alpha, rho, eps, 2)-sparse supplier: given U with
// |U| >= alpha|V|, produce disjoint X, Y in U of size ceil(rho|U|) with
// d_{G_i}(X, Y) <= eps.
struct PairFinder {
    SparseSpec spec;  // spec.eps is the pair bound (already the /4 value)
    std::function<PairResult(const std::vector<Graph>&, const VertexSet&)> find;
};

struct SparseGenerator {
    SparseSpec spec;
    std::function<SparseWitness(const VertexSet&)> gen;
};

// Lemma 3.2: finder at (alpha, rho, eps/4, 2) plus an inner generator at
// (alpha rho/2, rho', eps, t) yield a witness for (alpha, rho rho'/2, eps, 2t).
SparseWitness compose_sparse(const std::vector<Graph>& graphs, const PairFinder& finder,
                             const SparseGenerator& inner, const VertexSet& u);

// Corollary 3.3: h-fold composition;
// ((2/rho)^{h-1} alpha, 2^{1-h} rho^h, eps, 2^h)-sparse.
SparseWitness iterate_sparse(const std::vector<Graph>& graphs, const PairFinder& finder, int h,
                             const Rational& eps_target, const VertexSet& u);

// generator form of the same recursion (the pipeline composes it further)
SparseGenerator iterate_generator(const std::vector<Graph>& graphs, const PairFinder& finder, int h,
                                  const Rational& eps_target);

struct LowDensityMember {
    int graph_index = 0;
    VertexSet w;
    Rational size_floor;  // 2 eps^{-1} 2^{1-h} rho^h |V|
};

// Corollary 3.4: one of the graphs has a large vertex subset of density
// at most eps (finder must honor eps/8 pairs; h = ceil(r log2(2/eps))).
LowDensityMember low_density_member(const std::vector<Graph>& graphs, const PairFinder& finder,
                                    const Rational& rho, const Rational& eps);

// Corollary 4.3 supplier: an H-free-driven pair finder over (G, complement G)
// with rho = eps^{k-1}/(2k); index 0 reports G-sparse pairs, 1 reports
// complement-sparse pairs.
PairFinder eh_pair_finder(const PatternGraph& h, const Rational& eps_pair, uint64_t seed = 0);

}  // namespace rf
