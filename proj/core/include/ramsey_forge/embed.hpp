#pragma once

#include <optional>
#include <variant>

#include "ramsey_forge/coloring.hpp"
#include "ramsey_forge/extract.hpp"
#include "ramsey_forge/pattern.hpp"
#include "ramsey_forge/report.hpp"

namespace rf {

// color ids used by the ramsey pipeline's complete-graph coloring
constexpr int kRed = 1;
constexpr int kBlue = 2;
constexpr int kGreen = 3;

struct EmbedViolation {
    int i = -1, j = -1;
    std::string reason;
};

// pair-by-pair induced + monochromatic check; first violation reported
std::optional<EmbedViolation> verify_embedding(const Graph& g, const EdgeColoring* coloring,
                                               const PatternGraph& h, const std::vector<int>& map,
                                               std::optional<int> color);

// Lemma 5.5 constants, exact rationals
struct EmbedParams {
    Rational p;
    Rational beta;   // p / (1000 k^2)
    Rational eps1;   // 1/k
    Rational eps2;   // p / (10k)
    Rational delta;  // (1-p)^k p^d

    static EmbedParams for_pattern(const Rational& p, int k, int d);
};

// Snapshot of the embedder: placed prefix plus candidate sets, in the
// pattern's degeneracy order. Conditions 1-4 of the proof are checkable
// exactly against it at any step.
struct EmbedState {
    std::vector<int> order;       // position -> original pattern vertex
    std::vector<int> placed;      // position -> host vertex (prefix)
    std::vector<VertexSet> cand;  // position -> V_{j,i}, meaningful past the prefix
};

bool check_embed_state(const Graph& g, const EdgeColoring& coloring, const PatternGraph& h,
                       const std::vector<VertexSet>& parts, const EmbedParams& params,
                       const EmbedState& state, int blue_color, int red_color,
                       std::string* why = nullptr);

struct EmbedFailureError : Error {
    EmbedFailureError(EmbedState s, int position, VertexSet surviving)
        : Error("no good vertex at step " + std::to_string(position + 1)),
          state(std::move(s)),
          fail_position(position),
          survivors(std::move(surviving)) {}
    EmbedState state;
    int fail_position;
    VertexSet survivors;
};

// Lemma 5.5: builds a blue induced copy of H with the image of pattern
// vertex v inside parts[v]; red densities between parts on pattern edges
// must be within beta. Honest failure carries the surviving state.
Embedding embed_induced_monochromatic(const Graph& g, const EdgeColoring& coloring,
                                      const PatternGraph& h, const std::vector<VertexSet>& parts,
                                      const EmbedParams& params, int blue_color = kBlue,
                                      int red_color = kRed);

// Psi: 2-coloring of K_k in Phi's palette; the sparse side is the
// d-degenerate graph the split bounds, the dense side rides bi-density.
struct PatternColoring {
    PatternColoring(Graph sparse_edges, int sparse_color_id, int dense_color_id)
        : pattern(std::move(sparse_edges)), sparse_color(sparse_color_id), dense_color(dense_color_id) {}
    PatternGraph pattern;  // graph of the sparse color
    int sparse_color;
    int dense_color;

    int k() const { return pattern.k(); }
    int color(int i, int j) const { return pattern.edge(i, j) ? sparse_color : dense_color; }
};

struct BiDensityViolationError : Error {
    BiDensityViolationError(VertexSet a_, VertexSet b_, Rational d, bool certifies)
        : Error(certifies ? "bi-density precondition violated" : "dense-side dead end below witness scale"),
          a(std::move(a_)),
          b(std::move(b_)),
          density(std::move(d)),
          sizes_certify(certifies) {}
    VertexSet a, b;
    Rational density;
    bool sizes_certify;
};

struct PsiFreeOutcome {
    std::variant<Embedding, SplitWitness> outcome;
    bool realized() const { return std::holds_alternative<Embedding>(outcome); }
};

// Lemma 5.1 over an explicit universe (defaults to all of Phi's host):
// either a k-set realizing Psi under Phi, or disjoint A, B with every
// a in A having at most eps|B| sparse-color edges into B.
PsiFreeOutcome psi_free_split(const EdgeColoring& phi, const PatternColoring& psi, const Rational& q,
                              const Rational& eps, const VertexSet* universe = nullptr);

// red/blue coloring of G extended to K_n: non-edges become green
EdgeColoring extend_to_complete(const Graph& g, const EdgeColoring& coloring);

struct PipelineResult {
    int color = 0;
    Embedding embedding;
    Json report;
};

// Theorem 5.4 strategy on a (p, lambda)-certified host: both color
// branches tried (direct embedding first, then the full key-lemma
// cascade); failure of both is a GuaranteeFailure carrying the report.
PipelineResult induced_ramsey_pipeline(const Graph& g, const EdgeColoring& coloring,
                                       const PatternGraph& h1, const PatternGraph& h2,
                                       const Rational& p, const Rational& lambda_sq, uint64_t seed = 0);

}  // namespace rf
