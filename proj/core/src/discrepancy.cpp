#include "ramsey_forge/discrepancy.hpp"

#include <algorithm>
#include <cmath>

#include "ramsey_forge/density.hpp"
#include "ramsey_forge/oracles.hpp"
#include "ramsey_forge/pseudorandom.hpp"
#include "ramsey_forge/rng.hpp"

namespace rf {

Rational half_set_deviation(const Graph& g, const VertexSet& s) {
    long n = g.vertex_count();
    if (s.count() != n / 2) throw PreconditionError("half_set_deviation: |S| != floor(n/2)");
    return (Rational(long(edges_within(g, s))) - Rational(n * n, 16)).abs();
}

namespace {

Rational eta_deviation(const Graph& g, const VertexSet& s, const Rational& eta) {
    long sz = s.count();
    Rational pairs(sz * (sz - 1) / 2);
    return (Rational(long(edges_within(g, s))) - eta * pairs).abs();
}

// one greedy pass: walk |S| toward m, each move picking the vertex that
// keeps the deviation largest
VertexSet greedy_resize(const Graph& g, VertexSet s, long m, const Rational& eta) {
    int n = g.vertex_count();
    while (s.count() != m) {
        bool grow = s.count() < m;
        int best = -1;
        Rational best_dev(-1);
        for (int v = 0; v < n; ++v) {
            if (grow == s.test(v)) continue;
            VertexSet trial = s;
            if (grow) trial.set(v);
            else trial.reset(v);
            Rational dev = eta_deviation(g, trial, eta);
            if (dev > best_dev) {
                best_dev = dev;
                best = v;
            }
        }
        if (grow) s.set(best);
        else s.reset(best);
    }
    return s;
}

}  // namespace

HalfSetResult egps_half_set(const Graph& g, const VertexSet& r, const Rational& eta, uint64_t seed) {
    int n = g.vertex_count();
    if (n < 2) throw PreconditionError("egps_half_set: n >= 2 required");
    if (eta < Rational(0) || eta > Rational(1)) throw PreconditionError("egps_half_set: eta in [0,1]");
    long m = n / 2;
    Rational d_gap = r.count() >= 2 ? eta_deviation(g, r, eta) : Rational(0);
    Rational target = d_gap / Rational(5);

    HalfSetResult best;
    best.target = target;
    best.achieved = Rational(-1);

    auto consider = [&](const VertexSet& s) {
        Rational dev = eta_deviation(g, s, eta);
        if (dev > best.achieved) {
            best.achieved = dev;
            best.s = s;
        }
    };

    // (i) greedy from R
    consider(greedy_resize(g, r, m, eta));

    // (ii) seeded randomized restarts
    if (best.achieved < target) {
        for (int attempt = 0; attempt < 32 && best.achieved < target; ++attempt) {
            Rng rng(Rng::derive(seed, 0xe695 + uint64_t(attempt)));
            std::vector<int> verts(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) verts[size_t(i)] = i;
            rng.shuffle(verts);
            VertexSet s(n);
            for (long i = 0; i < m; ++i) s.set(verts[size_t(i)]);
            consider(greedy_resize(g, s, m, eta));
        }
    }

    // (iii) exhaustive fallback
    if (best.achieved < target && n <= 24) {
        consider(best_half_subset_eta(g, eta));
    }

    best.below_guarantee = best.achieved < target;
    return best;
}

DiscrepancyReport deviation_witness(const Graph& g, const PatternGraph& h, const Rational& eps,
                                    uint64_t seed) {
    int k = h.k(), n = g.vertex_count();
    if (n < 2) throw PreconditionError("deviation_witness: n >= 2 required");
    if (k < 2) throw PreconditionError("deviation_witness: k >= 2 required");
    if (eps <= Rational(0) || eps > Rational(1)) throw PreconditionError("deviation_witness: eps in (0,1]");

    // precondition: at most (1-eps) 2^{-C(k,2)} n^k labeled induced copies
    if (std::pow(double(n), double(k)) <= 2e7) {
        mpz_class copies = count_labeled_induced(g, h);
        mpz_class nk = 1;
        for (int i = 0; i < k; ++i) nk *= n;
        Rational bound = (Rational(1) - eps) * Rational::pow2(-long(k) * (k - 1) / 2) * Rational(nk, 1);
        if (Rational(copies, 1) > bound)
            throw PreconditionError("deviation_witness: too many induced copies of H");
    }

    // the proof's schedule: eps_i = (1 - 2^{i-k-2} eps)/2, delta_i = 2^{i-k-2} eps
    ExtractionParams params;
    params.seed = seed;
    params.retry_budget = 64;
    for (int i = 1; i <= k - 1; ++i) {
        Rational scale = Rational::pow2(long(i) - k - 2) * eps;
        params.eps.push_back((Rational(1) - scale) / Rational(2));
        params.delta.push_back(scale);
    }

    // want the split outcome; sampled partitions may stumble on one of the
    // few copies, so those samples are retried
    SplitWitness w;
    bool have = false;
    for (int attempt = 0; attempt < params.retry_budget && !have; ++attempt) {
        ExtractionParams one = params;
        one.seed = Rng::derive(seed, uint64_t(attempt));
        one.retry_budget = 4;
        try {
            SplitOrEmbedResult res = split_or_embed(g, h, one);
            if (!res.is_embedding()) {
                w = res.witness();
                have = true;
            }
        } catch (const SearchFailure&) {
        }
    }
    if (!have)
        throw SearchFailure("deviation_witness: no split witness within budget (copies keep appearing)");

    // R in {A, B, A u B} maximizing |e(R) - C(|R|,2)/2|
    Rational half(1, 2);
    VertexSet ab = w.a | w.b;
    struct Choice {
        const VertexSet* s;
        char name;
    };
    Choice choices[3] = {{&w.a, 'A'}, {&w.b, 'B'}, {&ab, 'U'}};
    const VertexSet* r = &w.a;
    char r_name = 'A';
    Rational best_dev(-1);
    for (const auto& c : choices) {
        if (c.s->count() < 2) continue;
        Rational dev = eta_deviation(g, *c.s, half);
        if (dev > best_dev) {
            best_dev = dev;
            r = c.s;
            r_name = c.name;
        }
    }

    HalfSetResult hs = egps_half_set(g, *r, half, Rng::derive(seed, 0xd15c));

    DiscrepancyReport rep;
    rep.s = hs.s;
    rep.deviation = half_set_deviation(g, hs.s);
    rep.r_choice = r_name;
    rep.claimed_target = hs.target;
    rep.below_guarantee = hs.below_guarantee;
    rep.details = Json{{"split_step", w.index},
                       {"split_mode", w.mode == SplitWitness::Mode::sparse ? "sparse" : "dense"},
                       {"r_deviation", to_json(best_dev)},
                       {"egps_achieved", to_json(hs.achieved)}};
    return rep;
}

LowDiscrepancyGraph low_discrepancy_graph(int k, long n, uint64_t seed, int budget) {
    if (k < 2 || k % 2 != 0) throw PreconditionError("low_discrepancy_graph: k must be even and >= 2");
    long ell = 1L << (k / 2);
    if (ell > 1024) throw PreconditionError("low_discrepancy_graph: 2^{k/2} beyond cap");
    if (n % ell != 0 || n < ell) throw PreconditionError("low_discrepancy_graph: l must divide n");

    // threshold |e(X) - |X|^2/4| <= 2 l^{3/2}, compared via
    // (4 e(X) - |X|^2)^2 <= 64 l^3 so everything stays integral
    mpz_class rhs = 64 * mpz_class(ell) * ell * ell;

    for (int attempt = 0; attempt < budget; ++attempt) {
        Graph gamma = gnp(int(ell), Rational(1, 2), Rng::derive(seed, uint64_t(attempt)));

        bool kfree;
        if (ell <= 40) {
            kfree = max_clique(gamma).count() < k;
        } else {
            kfree = !find_induced_copy(gamma, PatternGraph::clique(k)).has_value();
        }
        if (!kfree) continue;

        bool disc_ok = true;
        std::string method;
        uint64_t checked = 0;
        if (ell <= 16) {
            method = "exhaustive";
            std::vector<uint32_t> adj(size_t(ell), 0);
            for (int v = 0; v < ell; ++v)
                for (int u = gamma.neighbors(v).lowest(); u >= 0; u = gamma.neighbors(v).next(u + 1))
                    adj[size_t(v)] |= 1u << u;
            for (uint32_t mask = 0; mask < (uint32_t(1) << ell) && disc_ok; ++mask) {
                long e = 0;
                uint32_t rem = mask;
                while (rem) {
                    int v = std::countr_zero(rem);
                    rem &= rem - 1;
                    e += std::popcount(adj[size_t(v)] & rem);
                }
                long sz = std::popcount(mask);
                mpz_class gap = 4 * mpz_class(e) - mpz_class(sz) * sz;
                if (gap * gap > rhs) disc_ok = false;
                ++checked;
            }
        } else {
            method = "sampled";
            Rng rng(Rng::derive(seed, 0x5a5a + uint64_t(attempt)));
            for (int trial = 0; trial < 20000 && disc_ok; ++trial) {
                VertexSet x(static_cast<int>(ell));
                for (int v = 0; v < ell; ++v)
                    if (rng.next() & 1) x.set(v);
                long e = long(edges_within(gamma, x));
                long sz = x.count();
                mpz_class gap = 4 * mpz_class(e) - mpz_class(sz) * sz;
                if (gap * gap > rhs) disc_ok = false;
                ++checked;
            }
        }
        if (!disc_ok) continue;

        long factor = n / ell;
        LowDiscrepancyGraph out{gamma.blow_up(int(factor)), gamma, Json::object()};
        out.certificate = Json{{"k", k},
                               {"l", ell},
                               {"n", n},
                               {"attempts", attempt + 1},
                               {"kfree_check", ell <= 40 ? "branch_and_bound" : "induced_search"},
                               {"discrepancy_check", method},
                               {"subsets_checked", checked},
                               {"base", graph_summary(gamma)},
                               {"blowup", graph_summary(out.graph)}};
        if (out.graph.edge_count() != uint64_t(factor) * uint64_t(factor) * gamma.edge_count())
            throw ContractError("low_discrepancy_graph: blow-up edge identity failed");
        return out;
    }
    throw SearchFailure("low_discrepancy_graph: no base graph within budget",
                        "{\"attempts\":" + std::to_string(budget) + "}");
}

}  // namespace rf
