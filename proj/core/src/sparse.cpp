#include "ramsey_forge/sparse.hpp"

#include <algorithm>

#include "ramsey_forge/density.hpp"
#include "ramsey_forge/rng.hpp"

namespace rf {

mpz_class SparseWitness::family_product() const {
    mpz_class p = 1;
    for (const auto& fam : families) p *= long(fam.size());
    return p;
}

bool verify_sparse_witness(const std::vector<Graph>& graphs, const SparseWitness& w, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (w.families.size() != graphs.size()) return fail("family count != r");
    long u_size = w.universe.count();
    if (u_size < 1) return fail("empty universe");
    long want = w.rho.ceil_times(u_size);
    if (want < 1) return fail("rho gives empty sets");
    for (size_t i = 0; i < w.families.size(); ++i) {
        const auto& fam = w.families[i];
        if (fam.empty()) return fail("graph " + std::to_string(i) + " has no family");
        VertexSet seen(w.universe.universe());
        for (const auto& s : fam) {
            if (!s.subset_of(w.universe)) return fail("set escapes universe");
            if (s.count() != want) return fail("set size != ceil(rho|U|)");
            if (seen.intersects(s)) return fail("family sets overlap");
            seen |= s;
        }
        Rational d = density_multi(graphs[i], fam);
        if (d > w.eps) return fail("graph " + std::to_string(i) + " multi-density above eps");
    }
    if (w.family_product() < w.t_claim) return fail("product of family counts below t");
    return true;
}

bool witness_satisfies(const SparseWitness& w, const SparseSpec& spec) {
    return w.rho >= spec.rho && w.eps <= spec.eps && w.t_claim >= spec.t;
}

namespace {

// trims every set of every family to exactly `target` vertices while
// keeping each family's multi-density within eps; greedy max-cross-degree
// removals first, seeded random re-draws as repair (existence is the
// averaging argument, so a valid trim always exists)
std::vector<VertexSet> trim_family(const Graph& g, const std::vector<VertexSet>& fam, long target,
                                   const Rational& eps, uint64_t seed) {
    auto family_ok = [&](const std::vector<VertexSet>& f) { return density_multi(g, f) <= eps; };

    std::vector<VertexSet> greedy = fam;
    while (true) {
        size_t largest = 0;
        long largest_size = 0;
        for (size_t i = 0; i < greedy.size(); ++i)
            if (greedy[i].count() > largest_size) {
                largest_size = greedy[i].count();
                largest = i;
            }
        if (largest_size <= target) break;
        VertexSet others(greedy[largest].universe());
        for (size_t i = 0; i < greedy.size(); ++i)
            if (i != largest) others |= greedy[i];
        int pick = -1;
        long best_deg = -1;
        for (int v = greedy[largest].lowest(); v >= 0; v = greedy[largest].next(v + 1)) {
            long d = g.neighbors(v).count_and(others);
            if (d >= best_deg) {
                best_deg = d;
                pick = v;
            }
        }
        greedy[largest].reset(pick);
    }
    if (family_ok(greedy)) return greedy;

    Rng rng(Rng::derive(seed, 0xface));
    for (int attempt = 0; attempt < 4096; ++attempt) {
        std::vector<VertexSet> trial = fam;
        for (auto& s : trial) {
            std::vector<int> verts = s.to_vector();
            rng.shuffle(verts);
            VertexSet keep(s.universe());
            for (long i = 0; i < target; ++i) keep.set(verts[size_t(i)]);
            s = keep;
        }
        if (family_ok(trial)) return trial;
    }
    throw ContractError("trim_family: no valid trim found (averaging argument violated?)");
}

}  // namespace

SparseWitness weaken_witness(const std::vector<Graph>& graphs, const SparseWitness& w,
                             const Rational& rho_prime, uint64_t seed) {
    if (rho_prime > w.rho) throw PreconditionError("weaken_witness: rho' must not exceed rho");
    long u_size = w.universe.count();
    long target = rho_prime.ceil_times(u_size);
    if (target < 1) throw PreconditionError("weaken_witness: rho' gives empty sets");
    SparseWitness out = w;
    out.rho = rho_prime;
    for (size_t i = 0; i < graphs.size(); ++i)
        out.families[i] = trim_family(graphs[i], w.families[i], target, w.eps, Rng::derive(seed, i));
    std::string why;
    if (!verify_sparse_witness(graphs, out, &why)) throw ContractError("weaken_witness: " + why);
    return out;
}

namespace {

void validate_pair(const std::vector<Graph>& graphs, const PairFinder& finder, const VertexSet& u,
                   const PairResult& res) {
    long p = finder.spec.rho.ceil_times(u.count());
    if (res.graph_index < 0 || res.graph_index >= int(graphs.size()))
        throw ContractError("pair finder returned a bad graph index");
    if (!res.x.subset_of(u) || !res.y.subset_of(u)) throw ContractError("pair escapes universe");
    if (res.x.intersects(res.y)) throw ContractError("pair sets overlap");
    if (res.x.count() != p || res.y.count() != p) throw ContractError("pair sets are not ceil(rho|U|)");
    Rational d = density_pair(graphs[size_t(res.graph_index)], res.x, res.y);
    if (d > finder.spec.eps) throw ContractError("pair density exceeds the finder's eps");
}

}  // namespace

SparseWitness compose_sparse(const std::vector<Graph>& graphs, const PairFinder& finder,
                             const SparseGenerator& inner, const VertexSet& u) {
    if (graphs.empty()) throw PreconditionError("compose_sparse: no graphs");
    const Rational eps = inner.spec.eps;
    if (finder.spec.eps * Rational(4) > eps)
        throw PreconditionError("compose_sparse: finder must honor eps/4 pairs");
    long u_size = u.count();
    if (u_size < 1) throw PreconditionError("compose_sparse: empty universe");

    PairResult pr = finder.find(graphs, u);
    validate_pair(graphs, finder, u, pr);
    const Graph& gi = graphs[size_t(pr.graph_index)];
    long p = pr.x.count();

    long z = (finder.spec.rho / Rational(2)).ceil_times(u_size);
    if (z < 1) z = 1;

    // X_1: vertices of X with at most (eps/2)|Y| G_i-neighbors in Y
    VertexSet x1(u.universe());
    Rational half_eps = eps / Rational(2);
    for (int v = pr.x.lowest(); v >= 0; v = pr.x.next(v + 1)) {
        long deg = gi.neighbors(v).count_and(pr.y);
        if (Rational(deg) <= half_eps * Rational(p)) x1.set(v);
    }
    if (x1.count() < z) throw ContractError("compose_sparse: |X_1| < rho|U|/2");
    x1 = x1.take_lowest(z);

    SparseWitness wx = inner.gen(x1);
    std::string why;
    if (!verify_sparse_witness(graphs, wx, &why)) throw ContractError("inner X witness: " + why);

    VertexSet x_union(u.universe());
    for (const auto& s : wx.families[size_t(pr.graph_index)]) x_union |= s;
    long xu_size = x_union.count();

    // Y_1: vertices of Y with at most eps|X-union| G_i-neighbors there
    VertexSet y1(u.universe());
    for (int v = pr.y.lowest(); v >= 0; v = pr.y.next(v + 1)) {
        long deg = gi.neighbors(v).count_and(x_union);
        if (Rational(deg) <= eps * Rational(xu_size)) y1.set(v);
    }
    if (y1.count() < z) throw ContractError("compose_sparse: |Y_1| < rho|U|/2");
    y1 = y1.take_lowest(z);

    SparseWitness wy = inner.gen(y1);
    if (!verify_sparse_witness(graphs, wy, &why)) throw ContractError("inner Y witness: " + why);
    if (wy.set_size() != wx.set_size())
        throw ContractError("compose_sparse: inner sets of unequal size across branches");

    SparseWitness out;
    out.universe = u;
    out.eps = eps;
    out.t_claim = 2 * inner.spec.t;
    out.rho = Rational(mpz_class(wx.set_size()), mpz_class(u_size));
    out.families.resize(graphs.size());
    for (size_t j = 0; j < graphs.size(); ++j) {
        if (int(j) == pr.graph_index) {
            out.families[j] = wx.families[j];
            for (const auto& s : wy.families[j]) out.families[j].push_back(s);
        } else {
            out.families[j] = wx.families[j].size() >= wy.families[j].size() ? wx.families[j]
                                                                             : wy.families[j];
        }
    }

    // AM-GM realized structurally: (t_i + s_i) prod max(t_j, s_j) >= 2t
    if (out.family_product() < out.t_claim)
        throw ContractError("compose_sparse: merged family count below 2t");
    if (out.rho < finder.spec.rho * inner.spec.rho / Rational(2))
        throw ContractError("compose_sparse: achieved rho below rho rho'/2");
    if (!verify_sparse_witness(graphs, out, &why)) throw ContractError("compose_sparse output: " + why);
    return out;
}

namespace {

SparseWitness level_one_witness(const std::vector<Graph>& graphs, const PairFinder& finder,
                                const Rational& eps_target, const VertexSet& u) {
    PairResult pr = finder.find(graphs, u);
    validate_pair(graphs, finder, u, pr);
    long p = pr.x.count();
    SparseWitness w;
    w.universe = u;
    w.rho = finder.spec.rho;
    w.eps = eps_target;
    w.t_claim = 2;
    w.families.resize(graphs.size());
    for (size_t j = 0; j < graphs.size(); ++j) {
        if (int(j) == pr.graph_index) {
            w.families[j] = {pr.x, pr.y};
        } else {
            // one set: a t=1 family has density zero by convention
            w.families[j] = {u.take_lowest(p)};
        }
    }
    std::string why;
    if (!verify_sparse_witness(graphs, w, &why)) throw ContractError("level-1 witness: " + why);
    return w;
}

}  // namespace

SparseGenerator iterate_generator(const std::vector<Graph>& graphs, const PairFinder& finder, int h,
                                  const Rational& eps_target) {
    if (h < 1) throw PreconditionError("iterate_generator: h >= 1 required");
    if (finder.spec.eps * Rational(4) > eps_target)
        throw PreconditionError("iterate_generator: finder must honor eps/4 pairs");

    SparseGenerator gen;
    if (h == 1) {
        gen.spec = {finder.spec.alpha, finder.spec.rho, eps_target, 2};
        gen.gen = [graphs, finder, eps_target](const VertexSet& u) {
            return level_one_witness(graphs, finder, eps_target, u);
        };
        return gen;
    }
    SparseGenerator inner = iterate_generator(graphs, finder, h - 1, eps_target);
    Rational two_over_rho = Rational(2) / finder.spec.rho;
    gen.spec = {finder.spec.alpha * two_over_rho.pow(unsigned(h - 1)),
                Rational::pow2(1 - h) * finder.spec.rho.pow(unsigned(h)), eps_target, long(1) << h};
    gen.gen = [graphs, finder, inner](const VertexSet& u) {
        return compose_sparse(graphs, finder, inner, u);
    };
    return gen;
}

SparseWitness iterate_sparse(const std::vector<Graph>& graphs, const PairFinder& finder, int h,
                             const Rational& eps_target, const VertexSet& u) {
    SparseGenerator gen = iterate_generator(graphs, finder, h, eps_target);
    SparseWitness w = gen.gen(u);
    if (w.rho < gen.spec.rho) throw ContractError("iterate_sparse: rho below the corollary value");
    if (w.family_product() < gen.spec.t) throw ContractError("iterate_sparse: count below 2^h");
    return w;
}

LowDensityMember low_density_member(const std::vector<Graph>& graphs, const PairFinder& finder,
                                    const Rational& rho, const Rational& eps) {
    if (graphs.empty()) throw PreconditionError("low_density_member: no graphs");
    if (eps <= Rational(0) || eps >= Rational(1)) throw PreconditionError("eps in (0,1) required");
    if (finder.spec.eps * Rational(8) > eps)
        throw PreconditionError("low_density_member: finder must honor eps/8 pairs");
    long r = long(graphs.size());

    // h = ceil(r log2(2/eps)): smallest h with 2^h >= (2/eps)^r
    Rational need = (Rational(2) / eps).pow(unsigned(r));
    int h = 0;
    while (Rational::pow2(h) < need) ++h;
    if (h < 1) h = 1;

    int n = graphs[0].vertex_count();
    SparseWitness w = iterate_sparse(graphs, finder, h, eps / Rational(2), Bitset::full(n));

    size_t best = 0;
    for (size_t i = 1; i < w.families.size(); ++i)
        if (w.families[i].size() > w.families[best].size()) best = i;

    // max t_i >= (prod t_j)^{1/r} >= 2^{h/r} >= 2/eps
    if (Rational(long(w.families[best].size())) < Rational(2) / eps)
        throw ContractError("low_density_member: family count below 2/eps");

    VertexSet un(w.universe.universe());
    for (const auto& s : w.families[best]) un |= s;

    LowDensityMember out;
    out.graph_index = int(best);
    out.w = un;
    out.size_floor = (Rational(2) / eps) * Rational::pow2(1 - h) * rho.pow(unsigned(h)) * Rational(n);
    Rational d = density_set_or_zero(graphs[best], un);
    if (d > eps) throw ContractError("low_density_member: union density above eps");
    if (Rational(un.count()) < out.size_floor)
        throw ContractError("low_density_member: union below the corollary floor");
    return out;
}

PairFinder eh_pair_finder(const PatternGraph& h, const Rational& eps_pair, uint64_t seed) {
    int k = h.k();
    PairFinder f;
    f.spec.alpha = Rational(0);  // serves every scale its floors admit
    f.spec.rho = eps_pair.pow(unsigned(k - 1)) / Rational(2 * k);
    f.spec.eps = eps_pair;
    f.spec.t = 2;
    f.find = [h, eps_pair, seed](const std::vector<Graph>& graphs, const VertexSet& u) -> PairResult {
        if (graphs.size() != 2) throw PreconditionError("eh_pair_finder expects (G, complement G)");
        const Graph& g = graphs[0];
        Rational rho = eps_pair.pow(unsigned(h.k() - 1)) / Rational(2 * h.k());
        long p = rho.ceil_times(u.count());
        if (p < 1) throw SearchFailure("eh_pair_finder: degenerate target size");

        std::vector<int> back;
        Graph sub = g.induced(u, &back);
        SplitWitness w;
        try {
            w = eh_pair(sub, h, eps_pair, Rng::derive(seed, u.hash()));
        } catch (const EmbeddingFoundError& e) {
            Embedding lifted = e.embedding;
            for (int& v : lifted.map) v = back[size_t(v)];
            throw EmbeddingFoundError(lifted);
        }
        bool sparse = w.mode == SplitWitness::Mode::sparse;
        PairResult res;
        res.graph_index = sparse ? 0 : 1;
        const Graph& target = sparse ? graphs[0] : graphs[1];

        VertexSet a(u.universe()), b_full(u.universe());
        for (int v = w.a.lowest(); v >= 0; v = w.a.next(v + 1)) a.set(back[size_t(v)]);
        for (int v = w.b.lowest(); v >= 0; v = w.b.next(v + 1)) b_full.set(back[size_t(v)]);
        if (a.count() < p || b_full.count() < p)
            throw SearchFailure("eh_pair_finder: witness below ceil(rho|U|)");
        res.x = a.take_lowest(p);
        // keep the p vertices of B with fewest edges (in the reported
        // graph) to the trimmed X; averaging keeps the pair density <= eps
        std::vector<std::pair<long, int>> ranked;
        for (int v = b_full.lowest(); v >= 0; v = b_full.next(v + 1))
            ranked.push_back({target.neighbors(v).count_and(res.x), v});
        std::sort(ranked.begin(), ranked.end());
        res.y = VertexSet(u.universe());
        for (long i = 0; i < p; ++i) res.y.set(ranked[size_t(i)].second);
        return res;
    };
    return f;
}

}  // namespace rf
