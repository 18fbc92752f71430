#include "ramsey_forge/embed.hpp"

#include <algorithm>

#include "ramsey_forge/density.hpp"
#include "ramsey_forge/sparse.hpp"

namespace rf {

std::optional<EmbedViolation> verify_embedding(const Graph& g, const EdgeColoring* coloring,
                                               const PatternGraph& h, const std::vector<int>& map,
                                               std::optional<int> color) {
    if (int(map.size()) != h.k()) return EmbedViolation{-1, -1, "map size != k"};
    Bitset seen(g.vertex_count());
    for (int v : map) {
        if (v < 0 || v >= g.vertex_count()) return EmbedViolation{-1, -1, "image out of range"};
        if (seen.test(v)) return EmbedViolation{-1, -1, "map not injective"};
        seen.set(v);
    }
    for (int i = 0; i < h.k(); ++i)
        for (int j = i + 1; j < h.k(); ++j) {
            bool host_edge = g.adjacent(map[size_t(i)], map[size_t(j)]);
            if (host_edge != h.edge(i, j)) return EmbedViolation{i, j, host_edge ? "chord" : "missing edge"};
            if (host_edge && color && coloring &&
                coloring->color(map[size_t(i)], map[size_t(j)]) != *color)
                return EmbedViolation{i, j, "edge has the wrong color"};
        }
    return std::nullopt;
}

EmbedParams EmbedParams::for_pattern(const Rational& p, int k, int d) {
    EmbedParams e;
    e.p = p;
    e.beta = p / Rational(1000L * k * k);
    e.eps1 = Rational(1, k);
    e.eps2 = p / Rational(10L * k);
    e.delta = (Rational(1) - p).pow(unsigned(k)) * p.pow(unsigned(d));
    return e;
}

namespace {

// B-tilde(w, S): blue neighbors inside S on pattern edges, plain
// non-neighbors on pattern non-edges
VertexSet btilde(const Graph& g, const EdgeColoring& coloring, int blue_color, bool pattern_edge, int w,
                 const VertexSet& s) {
    if (pattern_edge) return coloring.color_row(blue_color, w) & s;
    return s - g.neighbors(w);
}

Rational color_density_or_zero(const EdgeColoring& coloring, int color, const VertexSet& x,
                               const VertexSet& y) {
    if (x.none() || y.none()) return Rational(0);
    return Rational(long(coloring.edges_between(color, x, y)), long(x.count()) * long(y.count()));
}

}  // namespace

bool check_embed_state(const Graph& g, const EdgeColoring& coloring, const PatternGraph& h,
                       const std::vector<VertexSet>& parts, const EmbedParams& params,
                       const EmbedState& state, int blue_color, int red_color, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    int k = h.k();
    int i = int(state.placed.size());
    if (int(state.order.size()) != k || int(state.cand.size()) != k) return fail("state shape");

    // 1: placed pairs are blue on pattern edges, non-adjacent otherwise
    for (int a = 0; a < i; ++a)
        for (int b = a + 1; b < i; ++b) {
            bool pe = h.edge(state.order[size_t(a)], state.order[size_t(b)]);
            int va = state.placed[size_t(a)], vb = state.placed[size_t(b)];
            if (pe) {
                if (!g.adjacent(va, vb) || coloring.color(va, vb) != blue_color)
                    return fail("condition 1: placed pattern edge not blue");
            } else if (g.adjacent(va, vb)) {
                return fail("condition 1: placed non-edge adjacent");
            }
        }

    // 2: candidates fully blue / fully non-adjacent to the placed prefix
    for (int a = 0; a < i; ++a)
        for (int j = i; j < k; ++j) {
            bool pe = h.edge(state.order[size_t(a)], state.order[size_t(j)]);
            int va = state.placed[size_t(a)];
            const VertexSet& s = state.cand[size_t(j)];
            if (pe) {
                if ((s - coloring.color_row(blue_color, va)).any())
                    return fail("condition 2: candidate not fully blue-adjacent");
            } else if (s.intersects(g.neighbors(va))) {
                return fail("condition 2: candidate adjacent across a pattern non-edge");
            }
        }

    // 3: candidate sizes against the exact (1-p-eps2)^{i-D} (p-eps2)^D floor
    Rational low = Rational(1) - params.p - params.eps2;
    Rational high = params.p - params.eps2;
    for (int j = i; j < k; ++j) {
        int dd = h.back_neighbors(i, j);
        Rational floor_j = low.pow(unsigned(i - dd)) * high.pow(unsigned(dd)) *
                           Rational(parts[size_t(state.order[size_t(j)])].count());
        if (Rational(state.cand[size_t(j)].count()) < floor_j)
            return fail("condition 3: candidate " + std::to_string(j) + " below floor");
    }

    // 4: red density ledger on pattern edges between candidates
    Rational cap = (Rational(1) + params.eps1).pow(unsigned(i)) * params.beta;
    for (int j = i; j < k; ++j)
        for (int l = j + 1; l < k; ++l) {
            if (!h.edge(state.order[size_t(j)], state.order[size_t(l)])) continue;
            if (color_density_or_zero(coloring, red_color, state.cand[size_t(j)], state.cand[size_t(l)]) > cap)
                return fail("condition 4: red ledger exceeded");
        }
    return true;
}

Embedding embed_induced_monochromatic(const Graph& g, const EdgeColoring& coloring,
                                      const PatternGraph& h, const std::vector<VertexSet>& parts,
                                      const EmbedParams& params, int blue_color, int red_color) {
    int k = h.k();
    if (int(parts.size()) != k) throw PreconditionError("embed: one part per pattern vertex required");
    for (int a = 0; a < k; ++a) {
        if (parts[size_t(a)].none()) throw PreconditionError("embed: empty part");
        for (int b = a + 1; b < k; ++b)
            if (parts[size_t(a)].intersects(parts[size_t(b)]))
                throw PreconditionError("embed: parts overlap");
    }
    // beta precondition on pattern edges
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (h.edge(a, b) &&
                color_density_or_zero(coloring, red_color, parts[size_t(a)], parts[size_t(b)]) > params.beta)
                throw PreconditionError("embed: red density above beta on a pattern edge");

    EmbedState st;
    st.order = h.degeneracy_order();
    st.cand.resize(static_cast<size_t>(k), Bitset(g.vertex_count()));
    for (int j = 0; j < k; ++j) st.cand[size_t(j)] = parts[size_t(st.order[size_t(j)])];

    auto pattern_edge = [&](int pos_a, int pos_b) {
        return h.edge(st.order[size_t(pos_a)], st.order[size_t(pos_b)]);
    };

    Rational ledger_cap = params.beta;  // (1+eps1)^i beta, updated per step
    for (int i = 0; i < k; ++i) {
        const VertexSet& entry = st.cand[size_t(i)];
        if (entry.none()) throw EmbedFailureError(st, i, VertexSet(g.vertex_count()));

        // discard red-heavy vertices (pattern edges only)
        VertexSet v_prime = entry;
        for (int j = i + 1; j < k; ++j) {
            if (!pattern_edge(i, j)) continue;
            long sz = st.cand[size_t(j)].count();
            Rational cap = params.eps2 / Rational(2) * Rational(sz);
            for (int w = entry.lowest(); w >= 0; w = entry.next(w + 1)) {
                long red = coloring.color_row(red_color, w).count_and(st.cand[size_t(j)]);
                if (Rational(red) >= cap) v_prime.reset(w);
            }
        }
        // discard degree-deviant vertices
        VertexSet v_second = v_prime;
        for (int j = i + 1; j < k; ++j) {
            long sz = st.cand[size_t(j)].count();
            bool pe = pattern_edge(i, j);
            Rational pij = pe ? params.p : Rational(1) - params.p;
            Rational need = (pij - params.eps2 / Rational(2)) * Rational(sz);
            for (int w = v_prime.lowest(); w >= 0; w = v_prime.next(w + 1)) {
                long tn = pe ? g.neighbors(w).count_and(st.cand[size_t(j)])
                             : sz - g.neighbors(w).count_and(st.cand[size_t(j)]);
                if (Rational(tn) < need) v_second.reset(w);
            }
        }

        Rational next_cap = ledger_cap * (Rational(1) + params.eps1);
        int choice = -1;
        for (int w = v_second.lowest(); w >= 0; w = v_second.next(w + 1)) {
            bool good = true;
            for (int j = i + 1; j < k && good; ++j) {
                bool pe = pattern_edge(i, j);
                Rational pij = pe ? params.p : Rational(1) - params.p;
                VertexSet bt = btilde(g, coloring, blue_color, pe, w, st.cand[size_t(j)]);
                if (Rational(bt.count()) < (pij - params.eps2) * Rational(st.cand[size_t(j)].count()))
                    good = false;
            }
            for (int j = i + 1; j < k && good; ++j)
                for (int l = j + 1; l < k && good; ++l) {
                    if (!pattern_edge(j, l)) continue;
                    VertexSet bj = btilde(g, coloring, blue_color, pattern_edge(i, j), w, st.cand[size_t(j)]);
                    VertexSet bl = btilde(g, coloring, blue_color, pattern_edge(i, l), w, st.cand[size_t(l)]);
                    if (color_density_or_zero(coloring, red_color, bj, bl) > next_cap) good = false;
                }
            if (good) {
                choice = w;
                break;
            }
        }
        if (choice < 0) throw EmbedFailureError(st, i, v_second);

        st.placed.push_back(choice);
        for (int j = i + 1; j < k; ++j)
            st.cand[size_t(j)] = btilde(g, coloring, blue_color, pattern_edge(i, j), choice, st.cand[size_t(j)]);
        ledger_cap = next_cap;

        std::string why;
        if (!check_embed_state(g, coloring, h, parts, params, st, blue_color, red_color, &why))
            throw ContractError("embed state invalid after step " + std::to_string(i + 1) + ": " + why);
    }

    Embedding out;
    out.map.assign(size_t(k), -1);
    for (int pos = 0; pos < k; ++pos) out.map[size_t(st.order[size_t(pos)])] = st.placed[size_t(pos)];
    out.color = blue_color;
    if (auto bad = verify_embedding(g, &coloring, h, out.map, out.color))
        throw ContractError("embedder emitted a bad embedding: " + bad->reason);
    return out;
}

// ---------------------------------------------------------------------------
// Lemma 5.1

PsiFreeOutcome psi_free_split(const EdgeColoring& phi, const PatternColoring& psi, const Rational& q,
                              const Rational& eps, const VertexSet* universe) {
    int k = psi.k();
    VertexSet full = universe ? *universe : Bitset::full(phi.vertex_count());
    long n_eff = full.count();
    if (n_eff < k) throw PreconditionError("psi_free_split: universe smaller than k");
    if (q <= Rational(0) || q >= Rational(1) || eps <= Rational(0) || eps >= Rational(1))
        throw PreconditionError("psi_free_split: q, eps in (0,1) required");

    const auto& order = psi.pattern.degeneracy_order();

    // deterministic equipartition of the universe in index order
    std::vector<VertexSet> blocks(static_cast<size_t>(k), Bitset(full.universe()));
    {
        long base = n_eff / k, extra = n_eff % k, at = 0, block = 0, in_block = 0;
        for (int v = full.lowest(); v >= 0; v = full.next(v + 1)) {
            long want = base + (block < extra ? 1 : 0);
            blocks[size_t(block)].set(v);
            if (++in_block == want) {
                ++block;
                in_block = 0;
            }
            ++at;
        }
    }

    std::vector<VertexSet> cand = blocks;
    std::vector<Rational> claim(static_cast<size_t>(k));  // exact running size floors
    for (int j = 0; j < k; ++j) claim[size_t(j)] = Rational(blocks[size_t(j)].count());
    std::vector<int> placed;

    for (int s = 0; s < k; ++s) {
        const VertexSet& entry = cand[size_t(s)];
        long entry_size = entry.count();
        if (entry_size == 0)
            throw SearchFailure("psi_free_split: candidate set died at step " + std::to_string(s + 1));
        if (s == k - 1) {
            placed.push_back(entry.lowest());
            break;
        }

        auto psi_color = [&](int a, int b) { return psi.color(order[size_t(a)], order[size_t(b)]); };
        std::vector<VertexSet> bad_for(static_cast<size_t>(k), Bitset(full.universe()));
        VertexSet good(full.universe());
        for (int w = entry.lowest(); w >= 0; w = entry.next(w + 1)) {
            bool ok = true;
            for (int j = s + 1; j < k; ++j) {
                int c = psi_color(s, j);
                long cnt = phi.color_row(c, w).count_and(cand[size_t(j)]);
                const Rational& threshold = c == psi.sparse_color ? eps : q;
                if (Rational(cnt) < threshold * Rational(cand[size_t(j)].count())) {
                    bad_for[size_t(j)].set(w);
                    ok = false;
                }
            }
            if (ok) good.set(w);
        }

        if (good.none()) {
            int targets = k - 1 - s;
            for (int j = s + 1; j < k; ++j) {
                if (Rational(bad_for[size_t(j)].count() * targets) < Rational(entry_size)) continue;
                if (psi_color(s, j) == psi.sparse_color) {
                    SplitWitness w;
                    w.index = s + 1;
                    w.a = bad_for[size_t(j)];
                    w.b = cand[size_t(j)];
                    w.mode = SplitWitness::Mode::sparse;
                    w.threshold = eps;
                    w.a_floor = claim[size_t(s)] / Rational(targets);
                    w.b_floor = claim[size_t(j)];
                    std::string why;
                    auto rows = [&](int v) -> const Bitset& { return phi.color_row(psi.sparse_color, v); };
                    if (!check_split_witness(rows, w, &why))
                        throw ContractError("psi_free_split witness: " + why);
                    return {std::variant<Embedding, SplitWitness>(std::move(w))};
                }
                // dense color starved: the bi-density assumption is refuted
                // when both sides reach the lemma's scale
                int d = psi.pattern.degeneracy();
                Rational scale = eps.pow(unsigned(d)) * q.pow(unsigned(k)) *
                                 Rational(1, long(k) * k) * Rational(n_eff);
                bool certifies = Rational(bad_for[size_t(j)].count()) >= scale &&
                                 Rational(cand[size_t(j)].count()) >= scale;
                throw BiDensityViolationError(
                    bad_for[size_t(j)], cand[size_t(j)],
                    color_density_or_zero(phi, psi.dense_color, bad_for[size_t(j)], cand[size_t(j)]),
                    certifies);
            }
            throw ContractError("psi_free_split: pigeonhole produced no index");
        }

        int v = good.lowest();
        placed.push_back(v);
        for (int j = s + 1; j < k; ++j) {
            int c = psi_color(s, j);
            cand[size_t(j)] &= phi.color_row(c, v);
            claim[size_t(j)] = claim[size_t(j)] * (c == psi.sparse_color ? eps : q);
        }
    }

    Embedding emb;
    emb.map.assign(size_t(k), -1);
    for (int pos = 0; pos < k; ++pos) emb.map[size_t(order[size_t(pos)])] = placed[size_t(pos)];
    // exact realization check
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (phi.color(emb.map[size_t(a)], emb.map[size_t(b)]) != psi.color(a, b))
                throw ContractError("psi_free_split: realization mismatch");
    return {std::variant<Embedding, SplitWitness>(std::move(emb))};
}

EdgeColoring extend_to_complete(const Graph& g, const EdgeColoring& coloring) {
    if (coloring.vertex_count() != g.vertex_count() || coloring.colors() < 2)
        throw PreconditionError("extend_to_complete: coloring shape mismatch");
    int n = g.vertex_count();
    EdgeColoring phi = EdgeColoring::complete_host(n, 3);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) phi.set(u, v, kGreen);
            else {
                int c = coloring.color(u, v);
                if (c != kRed && c != kBlue) throw PreconditionError("extend_to_complete: uncolored edge");
                phi.set(u, v, c);
            }
        }
    return phi;
}

// ---------------------------------------------------------------------------
// Theorem 5.4 pipeline

namespace {

struct BranchOutcome {
    bool success = false;
    int color = 0;
    Embedding embedding;
    Json log = Json::object();
};

long ceil_log2(long x) {
    long h = 0;
    while ((1L << h) < x) ++h;
    return h;
}

BranchOutcome run_branch(const Graph& g, const EdgeColoring& coloring, const EdgeColoring& phi,
                         int forbidden_color, const PatternGraph& forbidden_h, int target_color,
                         const PatternGraph& target_h, const Rational& p, const Rational& lambda_sq,
                         uint64_t seed) {
    BranchOutcome out;
    int k = target_h.k();
    int n = g.vertex_count();
    out.log["forbidden_color"] = forbidden_color;
    out.log["target_color"] = target_color;

    EmbedParams ep = EmbedParams::for_pattern(p, k, target_h.degeneracy());

    // stage 0: the plain equipartition may already satisfy the red budget
    {
        std::vector<VertexSet> parts(static_cast<size_t>(k), Bitset(n));
        long base = n / k, extra = n % k, idx = 0;
        for (int b = 0; b < k; ++b) {
            long want = base + (b < extra ? 1 : 0);
            for (long i = 0; i < want; ++i) parts[size_t(b)].set(int(idx++));
        }
        bool budget_ok = true;
        for (int a = 0; a < k && budget_ok; ++a)
            for (int b = a + 1; b < k && budget_ok; ++b)
                if (target_h.edge(a, b) &&
                    color_density_or_zero(coloring, forbidden_color, parts[size_t(a)], parts[size_t(b)]) >
                        ep.beta)
                    budget_ok = false;
        out.log["direct_budget_ok"] = budget_ok;
        if (budget_ok) {
            try {
                out.embedding = embed_induced_monochromatic(g, coloring, target_h, parts, ep,
                                                            target_color, forbidden_color);
                out.success = true;
                out.color = target_color;
                out.log["stage"] = "direct";
                return out;
            } catch (const EmbedFailureError& e) {
                out.log["direct_failure_step"] = e.fail_position + 1;
            }
        }
    }

    // stage 1: full cascade. Parameters per the proof, exact.
    Rational eps = p / Rational(1000L * k * k * k) / Rational(long(k) * k * k);
    Rational q = Rational(1) - Rational(7) * p / Rational(6);
    int d_forbidden = forbidden_h.degeneracy();
    Rational rho = (eps / Rational(4)).pow(unsigned(d_forbidden)) * q.pow(unsigned(k)) *
                   Rational(1, long(k) * k);
    long chi = target_h.chromatic_number();
    long h_lvl = std::max<long>(1, ceil_log2(chi));
    Rational alpha = (rho / Rational(2)).pow(unsigned(h_lvl - 1));

    out.log["cascade"] = {{"eps", eps.str()}, {"q", q.str()}, {"rho", rho.str()},
                          {"h", h_lvl},       {"chi", chi},   {"alpha", alpha.str()}};

    // theorem regime: 6 lambda / (p n) <= alpha rho, checked as squares
    {
        Rational lhs_sq = Rational(36) * lambda_sq / (p * p * Rational(long(n)) * Rational(long(n)));
        Rational rhs = alpha * rho;
        out.log["within_regime"] = lhs_sq <= rhs * rhs;
    }

    try {
        PatternColoring psi(forbidden_h.graph(), forbidden_color, kGreen);
        std::vector<Graph> lemma_graphs = {phi.color_graph(forbidden_color)};

        PairFinder finder;
        finder.spec = {alpha, rho, eps / Rational(4), 2};
        Rational lemma_eps = eps / Rational(4);
        finder.find = [&phi, psi, q, lemma_eps, rho](const std::vector<Graph>& graphs,
                                                     const VertexSet& u) -> PairResult {
            PsiFreeOutcome res = psi_free_split(phi, psi, q, lemma_eps, &u);
            if (res.realized()) throw EmbeddingFoundError(std::get<Embedding>(res.outcome));
            const SplitWitness& w = std::get<SplitWitness>(res.outcome);
            long want = rho.ceil_times(u.count());
            if (want < 1 || w.a.count() < want || w.b.count() < want)
                throw SearchFailure("cascade: split witness below ceil(rho|U|)");
            PairResult pr;
            pr.graph_index = 0;
            pr.x = w.a.take_lowest(want);
            std::vector<std::pair<long, int>> ranked;
            for (int v = w.b.lowest(); v >= 0; v = w.b.next(v + 1))
                ranked.push_back({graphs[0].neighbors(v).count_and(pr.x), v});
            std::sort(ranked.begin(), ranked.end());
            pr.y = VertexSet(u.universe());
            for (long i = 0; i < want; ++i) pr.y.set(ranked[size_t(i)].second);
            return pr;
        };

        SparseWitness witness = iterate_sparse(lemma_graphs, finder, int(h_lvl), eps, Bitset::full(n));
        const auto& family = witness.families[0];
        if (long(family.size()) < chi) throw SearchFailure("cascade: fewer than chi parts");

        long block = family[0].count() / k;
        if (block < 1) throw SearchFailure("cascade: parts too small to split into k blocks");

        // V_i: one block per pattern vertex, same W for a color class
        const auto& proper = target_h.proper_coloring();
        std::vector<long> used(static_cast<size_t>(chi), 0);
        std::vector<VertexSet> parts(static_cast<size_t>(k), Bitset(n));
        for (int v = 0; v < k; ++v) {
            long cls = proper[size_t(v)];
            long slot = used[size_t(cls)]++;
            VertexSet w = family[size_t(cls)];
            // slot-th block of size `block` in index order
            VertexSet pick(n);
            long skip = slot * block, taken = 0;
            for (int x = w.lowest(); x >= 0 && taken < block; x = w.next(x + 1)) {
                if (skip > 0) {
                    --skip;
                    continue;
                }
                pick.set(x);
                ++taken;
            }
            if (taken < block) throw SearchFailure("cascade: ran out of block slots");
            parts[size_t(v)] = pick;
        }

        // beta gate before embedding
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (target_h.edge(a, b) &&
                    color_density_or_zero(coloring, forbidden_color, parts[size_t(a)], parts[size_t(b)]) >
                        ep.beta)
                    throw SearchFailure("cascade: beta budget violated between blocks");

        out.embedding =
            embed_induced_monochromatic(g, coloring, target_h, parts, ep, target_color, forbidden_color);
        out.success = true;
        out.color = target_color;
        out.log["stage"] = "cascade";
        return out;
    } catch (const EmbeddingFoundError& e) {
        // an induced forbidden-color copy of the forbidden pattern IS a
        // monochromatic induced copy; the branch resolves to that color
        std::optional<EmbedViolation> bad =
            verify_embedding(g, &coloring, forbidden_h, e.embedding.map, forbidden_color);
        if (bad) throw ContractError("cascade realization failed verification: " + bad->reason);
        out.embedding = e.embedding;
        out.embedding.color = forbidden_color;
        out.success = true;
        out.color = forbidden_color;
        out.log["stage"] = "psi_realized";
        return out;
    } catch (const EmbedFailureError& e) {
        out.log["cascade_failure"] = std::string("embed step ") + std::to_string(e.fail_position + 1);
    } catch (const BiDensityViolationError& e) {
        out.log["cascade_failure"] = std::string("bi-density: ") + e.what();
    } catch (const SearchFailure& e) {
        out.log["cascade_failure"] = e.what();
    }
    (void)seed;
    return out;
}

}  // namespace

PipelineResult induced_ramsey_pipeline(const Graph& g, const EdgeColoring& coloring,
                                       const PatternGraph& h1, const PatternGraph& h2,
                                       const Rational& p, const Rational& lambda_sq, uint64_t seed) {
    if (h1.k() != h2.k()) throw PreconditionError("pipeline: H1 and H2 must share the vertex count");
    if (p <= Rational(0) || p > Rational(3, 4)) throw PreconditionError("pipeline: p in (0, 3/4] required");
    if (!coloring.total()) throw PreconditionError("pipeline: coloring must cover every edge");

    EdgeColoring phi = extend_to_complete(g, coloring);

    Json report;
    report["host"] = graph_summary(g);
    report["p"] = p.str();
    report["lambda_sq"] = lambda_sq.str();
    report["k"] = h1.k();

    BranchOutcome a = run_branch(g, coloring, phi, kRed, h1, kBlue, h2, p, lambda_sq, seed);
    report["branch_blue_target"] = a.log;
    if (a.success) {
        PipelineResult res{a.color, a.embedding, report};
        res.report["winner"] = a.color == kRed ? "red" : "blue";
        return res;
    }
    BranchOutcome b = run_branch(g, coloring, phi, kBlue, h2, kRed, h1, p, lambda_sq, seed + 1);
    report["branch_red_target"] = b.log;
    if (b.success) {
        PipelineResult res{b.color, b.embedding, report};
        res.report["winner"] = b.color == kRed ? "red" : "blue";
        return res;
    }
    report["winner"] = "none";
    throw GuaranteeFailure("induced_ramsey_pipeline: both color branches failed: " + report.dump());
}

}  // namespace rf
