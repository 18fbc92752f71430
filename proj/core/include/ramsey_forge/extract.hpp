#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "ramsey_forge/errors.hpp"
#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/pattern.hpp"
#include "ramsey_forge/rational.hpp"

namespace rf {

// Injective map from pattern vertices to host vertices. `color` is set
// when a monochromatic claim is part of the certificate.
struct Embedding {
    std::vector<int> map;
    std::optional<int> color;
};

// exact check: edges and non-edges both preserved
bool check_induced_embedding(const Graph& g, const PatternGraph& h, const std::vector<int>& map,
                             std::string* why = nullptr);

// Thrown when an operation that requires an H-free input stumbles on an
// induced copy; the copy is the proof.
struct EmbeddingFoundError : Error {
    explicit EmbeddingFoundError(Embedding e)
        : Error("input is not H-free: induced copy found"), embedding(std::move(e)) {}
    Embedding embedding;
};

struct SplitWitness {
    enum class Mode { sparse, dense };
    int index = 0;  // failing step (Lemma 4.1) or graph index (key lemma)
    VertexSet a, b;
    Mode mode = Mode::sparse;
    Rational threshold;        // per-vertex eps
    Rational a_floor, b_floor; // claimed size floors
};

// Exact re-verification: disjointness, floors, and the per-vertex
// neighbor bound against an arbitrary row provider (plain adjacency or a
// color-restricted row).
bool check_split_witness(const std::function<const Bitset&(int)>& row_of, const SplitWitness& w,
                         std::string* why = nullptr);
bool check_split_witness(const Graph& g, const SplitWitness& w, std::string* why = nullptr);

struct ExtractionParams {
    std::vector<Rational> eps;    // eps_1..eps_{k-1}
    std::vector<Rational> delta;  // delta_1..delta_{k-1}
    int retry_budget = 64;
    uint64_t seed = 0;

    static ExtractionParams uniform(int k, const Rational& eps, const Rational& delta,
                                    uint64_t seed = 0, int retries = 64);
};

struct SplitOrEmbedResult {
    std::variant<Embedding, SplitWitness> outcome;
    std::vector<VertexSet> parts;  // the sampled equipartition used
    int retries_used = 0;

    bool is_embedding() const { return std::holds_alternative<Embedding>(outcome); }
    const Embedding& embedding() const { return std::get<Embedding>(outcome); }
    const SplitWitness& witness() const { return std::get<SplitWitness>(outcome); }
};

// Lemma 4.1 step process over a seeded equipartition. Retries with fresh
// partitions on dead ends; exhausting the budget is a SearchFailure.
SplitOrEmbedResult split_or_embed(const Graph& g, const PatternGraph& h, const ExtractionParams& params);

// Lemma 2.1: G H-free  =>  per-vertex sparse or dense pair with floors
// eps^{k-1} * floor(n/k). Finding an induced copy instead throws.
SplitWitness eh_pair(const Graph& g, const PatternGraph& h, const Rational& eps, uint64_t seed = 0,
                     int retry_budget = 64);

struct DensityCertificate {
    enum class Side { low, high };
    VertexSet w;
    Side side = Side::low;
    Rational eps;
    long floor_claim = 2;  // max(2, floor(2^{-15 k log^2(1/eps)} n))
};

bool check_density_certificate(const Graph& g, const DensityCertificate& c, std::string* why = nullptr);

// sound integer version of floor(2^{-15 k ceil(log2(1/eps))^2} * n)
long theorem1_size_floor(int k, const Rational& eps, long n);

// Theorem 1 recursion (Lemma 2.2 thresholds (3/2)^j eps, A'/B' refinement,
// exact merge); at vacuous floors the best oracle certificate is returned
// instead when n <= 18.
DensityCertificate sparse_or_dense_subset(const Graph& g, const PatternGraph& h, const Rational& eps,
                                          uint64_t seed = 0, bool oracle_fallback = true);

struct EquitablePartition {
    std::vector<VertexSet> parts;
    std::vector<DensityCertificate::Side> sides;
    Rational part_bound;  // claimed C
};

bool check_equitable_partition(const Graph& g, const EquitablePartition& p, const Rational& eps,
                               std::string* why = nullptr);

EquitablePartition equitable_density_partition(const Graph& g, const PatternGraph& h, const Rational& eps,
                                               uint64_t seed = 0);

struct HomogeneousWitness {
    VertexSet set;
    bool is_clique = false;
};

// std::nullopt when the set is neither
std::optional<bool> classify_homogeneous(const Graph& g, const VertexSet& s);

// Theorem 2 pipeline: sparse/dense extraction, then a degree-peeling
// homogeneous search inside, never worse than the bisection baseline.
HomogeneousWitness hom_lower_bound(const Graph& g, const PatternGraph& h, uint64_t seed = 0);

// classical Erdos-Szekeres bisection; >= ceil(log2(n)/2) guaranteed
HomogeneousWitness es_bisection(const Graph& g);

long erdos_szekeres_floor(long n);  // ceil(log2(n)/2)

}  // namespace rf
