#pragma once

#include <optional>
#include <vector>

#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/pattern.hpp"
#include "ramsey_forge/rational.hpp"

namespace rf {

// Hard caps for the exhaustive procedures. An oracle that cannot afford
// the full enumeration refuses (BudgetError) instead of sampling.
struct OracleBudget {
    int homogeneous_max_n = 40;
    int sparse_dense_max_n = 18;
    int half_subset_max_n = 24;
    uint64_t ramsey_max_edges = 25;
    int universal_max_k = 5;
    int count_direct_max_k = 8;
    double count_max_ops = 2e9;  // admits k > count_direct_max_k while n^k stays below
};

struct HomogeneousSet {
    VertexSet set;
    bool is_clique;
};

// number of injective maps [k] -> V(G) preserving edges and non-edges
mpz_class count_labeled_induced(const Graph& g, const PatternGraph& h, const OracleBudget& budget = {});

// existence variant with a witness map (pattern vertex -> host vertex)
std::optional<std::vector<int>> find_induced_copy(const Graph& g, const PatternGraph& h);

// a largest clique or independent set; branch-and-bound, n <= 40
HomogeneousSet max_homogeneous(const Graph& g, const OracleBudget& budget = {});

// maximum clique only (exposed for cross-checks)
VertexSet max_clique(const Graph& g, const OracleBudget& budget = {});

// number of k-cliques, independent recursion (cross-check for the
// count_labeled_induced identity)
mpz_class count_cliques(const Graph& g, int k);

// maximum-cardinality W with density(W) <= eps or >= 1-eps
// (|W| < 2 counts as density 0); exhaustive over all subsets, n <= 18
VertexSet best_sparse_or_dense(const Graph& g, const Rational& eps, const OracleBudget& budget = {});

// S of size floor(n/2) maximizing |e(S) - n^2/16|; exhaustive, n <= 24
VertexSet best_half_subset(const Graph& g, const OracleBudget& budget = {});

// max over half-sets of |e(S) - eta*C(|S|,2)| (the EGPS objective)
VertexSet best_half_subset_eta(const Graph& g, const Rational& eta, const OracleBudget& budget = {});

// true iff every red/blue coloring of E(G) has a monochromatic induced
// copy of H; enumerates all 2^{e(G)} colorings, e(G) <= 25
bool exhaustive_induced_ramsey(const Graph& g, const PatternGraph& h, const OracleBudget& budget = {});

// true iff every isomorphism class on <= k vertices appears induced
bool is_k_universal(const Graph& g, int k, const OracleBudget& budget = {});

// all isomorphism classes on exactly m vertices (canonical representatives,
// m <= 5); exposed because the universality check and tests share it
const std::vector<Graph>& isomorphism_classes(int m);

}  // namespace rf
