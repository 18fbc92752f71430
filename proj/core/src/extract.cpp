#include "ramsey_forge/extract.hpp"

#include <algorithm>
#include <cmath>

#include "ramsey_forge/density.hpp"
#include "ramsey_forge/oracles.hpp"
#include "ramsey_forge/rng.hpp"

namespace rf {

bool check_induced_embedding(const Graph& g, const PatternGraph& h, const std::vector<int>& map,
                             std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (int(map.size()) != h.k()) return fail("map size != k");
    Bitset seen(g.vertex_count());
    for (int v : map) {
        if (v < 0 || v >= g.vertex_count()) return fail("image out of range");
        if (seen.test(v)) return fail("map not injective");
        seen.set(v);
    }
    for (int i = 0; i < h.k(); ++i)
        for (int j = i + 1; j < h.k(); ++j)
            if (g.adjacent(map[size_t(i)], map[size_t(j)]) != h.edge(i, j))
                return fail("pair (" + std::to_string(i) + "," + std::to_string(j) + ") mismatched");
    return true;
}

bool check_split_witness(const std::function<const Bitset&(int)>& row_of, const SplitWitness& w,
                         std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (w.a.none() || w.b.none()) return fail("empty side");
    if (w.a.intersects(w.b)) return fail("A and B overlap");
    long bsz = w.b.count();
    if (Rational(w.a.count()) < w.a_floor) return fail("|A| below claimed floor");
    if (Rational(bsz) < w.b_floor) return fail("|B| below claimed floor");
    for (int v = w.a.lowest(); v >= 0; v = w.a.next(v + 1)) {
        long deg = row_of(v).count_and(w.b);
        if (w.mode == SplitWitness::Mode::sparse) {
            if (Rational(deg) > w.threshold * Rational(bsz))
                return fail("vertex " + std::to_string(v) + " exceeds eps|B| neighbors");
        } else {
            if (Rational(deg) < (Rational(1) - w.threshold) * Rational(bsz))
                return fail("vertex " + std::to_string(v) + " below (1-eps)|B| neighbors");
        }
    }
    return true;
}

bool check_split_witness(const Graph& g, const SplitWitness& w, std::string* why) {
    return check_split_witness([&](int v) -> const Bitset& { return g.neighbors(v); }, w, why);
}

ExtractionParams ExtractionParams::uniform(int k, const Rational& eps, const Rational& delta,
                                           uint64_t seed, int retries) {
    ExtractionParams p;
    p.eps.assign(size_t(k - 1), eps);
    p.delta.assign(size_t(k - 1), delta);
    p.seed = seed;
    p.retry_budget = retries;
    return p;
}

namespace {

std::vector<VertexSet> sample_equipartition(int n, int k, Rng& rng) {
    std::vector<int> order(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) order[size_t(i)] = i;
    rng.shuffle(order);
    std::vector<VertexSet> parts(static_cast<size_t>(k), Bitset(n));
    int base = n / k, extra = n % k, at = 0;
    for (int p = 0; p < k; ++p) {
        int size = base + (p < extra ? 1 : 0);
        for (int i = 0; i < size; ++i) parts[size_t(p)].set(order[size_t(at++)]);
    }
    return parts;
}

// Lemma 4.1's step process on one fixed partition. Outcomes: an induced
// embedding, a split witness, or a dead end (candidate set died before
// either branch of the dichotomy could fire).
std::optional<std::variant<Embedding, SplitWitness>> lemma41_attempt(
    const Graph& g, const PatternGraph& h, const ExtractionParams& params,
    const std::vector<VertexSet>& parts) {
    int k = h.k();
    int n = g.vertex_count();
    long nk = n / k;

    std::vector<VertexSet> cand = parts;
    std::vector<int> placed;
    Rational eps_prefix(1);  // prod_{t<current step} eps_t

    for (int s = 0; s < k; ++s) {
        const VertexSet& entry = cand[size_t(s)];
        long entry_size = entry.count();
        if (entry_size == 0) return std::nullopt;

        if (s == k - 1) {
            placed.push_back(entry.lowest());
            break;
        }

        const Rational& eps_s = params.eps[size_t(s)];
        const Rational& delta_s = params.delta[size_t(s)];
        int targets = k - 1 - s;

        std::vector<VertexSet> bad_for(static_cast<size_t>(k), Bitset(n));
        VertexSet good(n);
        for (int w = entry.lowest(); w >= 0; w = entry.next(w + 1)) {
            bool ok = true;
            for (int j = s + 1; j < k; ++j) {
                long sz = cand[size_t(j)].count();
                long cnt = h.edge(s, j) ? g.neighbors(w).count_and(cand[size_t(j)])
                                        : sz - g.neighbors(w).count_and(cand[size_t(j)]);
                if (Rational(cnt) < eps_s * Rational(sz)) {
                    bad_for[size_t(j)].set(w);
                    ok = false;
                }
            }
            if (ok) good.set(w);
        }

        long good_count = good.count();
        if (Rational(good_count) < (Rational(1) - delta_s) * Rational(entry_size)) {
            // pigeonhole: first target index whose bad set is large enough
            for (int j = s + 1; j < k; ++j) {
                long asz = bad_for[size_t(j)].count();
                if (Rational(asz * targets) >= delta_s * Rational(entry_size)) {
                    SplitWitness w;
                    w.index = s + 1;
                    w.a = bad_for[size_t(j)];
                    w.b = cand[size_t(j)];
                    w.mode = h.edge(s, j) ? SplitWitness::Mode::sparse : SplitWitness::Mode::dense;
                    w.threshold = eps_s;
                    w.a_floor = delta_s * eps_prefix * Rational(nk) / Rational(targets);
                    w.b_floor = eps_prefix * Rational(nk);
                    return std::variant<Embedding, SplitWitness>(std::move(w));
                }
            }
            throw ContractError("pigeonhole produced no index");
        }

        if (good_count == 0) return std::nullopt;
        int v = good.lowest();
        placed.push_back(v);
        for (int j = s + 1; j < k; ++j) {
            if (h.edge(s, j)) cand[size_t(j)] &= g.neighbors(v);
            else cand[size_t(j)] -= g.neighbors(v);
        }
        eps_prefix *= eps_s;
    }
    Embedding e;
    e.map = placed;
    return std::variant<Embedding, SplitWitness>(std::move(e));
}

}  // namespace

SplitOrEmbedResult split_or_embed(const Graph& g, const PatternGraph& h, const ExtractionParams& params) {
    int k = h.k(), n = g.vertex_count();
    if (k < 2 || n < k) throw PreconditionError("split_or_embed: n >= k >= 2 required");
    if (int(params.eps.size()) != k - 1 || int(params.delta.size()) != k - 1)
        throw PreconditionError("split_or_embed: need k-1 eps and delta values");
    for (int i = 0; i < k - 1; ++i)
        if (params.eps[size_t(i)] <= Rational(0) || params.eps[size_t(i)] >= Rational(1) ||
            params.delta[size_t(i)] <= Rational(0) || params.delta[size_t(i)] >= Rational(1))
            throw PreconditionError("split_or_embed: eps_i, delta_i must lie in (0,1)");

    for (int retry = 0; retry < params.retry_budget; ++retry) {
        Rng rng(Rng::derive(params.seed, uint64_t(retry)));
        auto parts = sample_equipartition(n, k, rng);
        auto outcome = lemma41_attempt(g, h, params, parts);
        if (outcome) {
            SplitOrEmbedResult res{std::move(*outcome), std::move(parts), retry + 1};
            if (res.is_embedding()) {
                std::string why;
                if (!check_induced_embedding(g, h, res.embedding().map, &why))
                    throw ContractError("split_or_embed produced a bad embedding: " + why);
            } else {
                std::string why;
                if (!check_split_witness(g, res.witness(), &why))
                    throw ContractError("split_or_embed produced a bad witness: " + why);
            }
            return res;
        }
    }
    throw SearchFailure("split_or_embed: retry budget exhausted without either outcome",
                        "{\"retries\":" + std::to_string(params.retry_budget) + "}");
}

namespace {

// Exhaustive Lemma 2.1 fallback for tiny graphs: scan all candidate B
// subsets, collect the qualifying A vertices, keep the pair maximizing
// min(|A|,|B|). Only reached when the sampled process dead-ends.
std::optional<SplitWitness> eh_exhaustive(const Graph& g, const Rational& eps, const Rational& floor_val) {
    int n = g.vertex_count();
    if (n > 16) return std::nullopt;
    SplitWitness best;
    long best_score = -1;
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        VertexSet b(n);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) b.set(v);
        long bsz = b.count();
        VertexSet sparse_a(n), dense_a(n);
        for (int v = 0; v < n; ++v) {
            if (b.test(v)) continue;
            long deg = g.neighbors(v).count_and(b);
            if (Rational(deg) <= eps * Rational(bsz)) sparse_a.set(v);
            if (Rational(deg) >= (Rational(1) - eps) * Rational(bsz)) dense_a.set(v);
        }
        for (int mode = 0; mode < 2; ++mode) {
            const VertexSet& a = mode == 0 ? sparse_a : dense_a;
            long score = std::min(long(a.count()), bsz);
            if (score > best_score && Rational(score) >= floor_val) {
                best.index = 1;
                best.a = a;
                best.b = b;
                best.mode = mode == 0 ? SplitWitness::Mode::sparse : SplitWitness::Mode::dense;
                best.threshold = eps;
                best.a_floor = floor_val;
                best.b_floor = floor_val;
                best_score = score;
            }
        }
    }
    if (best_score < 0) return std::nullopt;
    return best;
}

}  // namespace

SplitWitness eh_pair(const Graph& g, const PatternGraph& h, const Rational& eps, uint64_t seed,
                     int retry_budget) {
    int k = h.k(), n = g.vertex_count();
    if (n < 2) throw PreconditionError("eh_pair: n >= 2 required");
    if (eps <= Rational(0) || eps > Rational(1, 2)) throw PreconditionError("eh_pair: eps in (0,1/2] required");
    if (n < k) {
        // H cannot occur at all; the trivial two-vertex pair is a witness
        Rational fl = eps.pow(unsigned(k - 1)) * Rational(n / std::max(2, k));
        auto w = eh_exhaustive(g, eps, Rational::min(fl, Rational(1)));
        if (w) return *w;
        throw SearchFailure("eh_pair: no witness on tiny input");
    }

    ExtractionParams params;
    params.seed = seed;
    params.retry_budget = retry_budget;
    params.eps.assign(size_t(k - 1), eps);
    params.delta.resize(size_t(k - 1));
    // delta_i = (k-i) eps^{k-i} makes every failing step deliver the
    // Lemma 2.1 floor eps^{k-1} n/k
    for (int i = 1; i <= k - 1; ++i)
        params.delta[size_t(i - 1)] = Rational(k - i) * eps.pow(unsigned(k - i));

    Rational floor_val = eps.pow(unsigned(k - 1)) * Rational(n / k);
    try {
        SplitOrEmbedResult res = split_or_embed(g, h, params);
        if (res.is_embedding()) throw EmbeddingFoundError(res.embedding());
        SplitWitness w = res.witness();
        w.a_floor = floor_val;
        w.b_floor = floor_val;
        std::string why;
        if (!check_split_witness(g, w, &why)) throw ContractError("eh_pair witness failed floors: " + why);
        return w;
    } catch (const SearchFailure&) {
        auto w = eh_exhaustive(g, eps, floor_val);
        if (w) return *w;
        throw;
    }
}

// ---------------------------------------------------------------------------
// Theorem 1 recursion

long theorem1_size_floor(int k, const Rational& eps, long n) {
    if (eps <= Rational(0) || eps >= Rational(1)) throw PreconditionError("eps in (0,1) required");
    // m = ceil(log2(1/eps)): smallest m with eps * 2^m >= 1
    long m = 0;
    Rational scaled = eps;
    while (scaled < Rational(1)) {
        scaled *= Rational(2);
        ++m;
        if (m > 4096) throw PreconditionError("eps too small");
    }
    // floor(2^{-15 k m^2} n); zero whenever the shift clears every bit
    long shift = 15 * long(k) * m * m;
    if (shift >= 63) return 0;
    return n >> shift;
}

namespace {

using Side = DensityCertificate::Side;

// removes vertices from w (max-degree-first for the low side,
// min-degree-first for the high side; ties to the highest index) until
// |w| == target; each removal keeps the density on the same side of the
// threshold by the averaging argument
VertexSet shrink_preserving_side(const Graph& g, VertexSet w, Side side, const Rational& threshold,
                                 long target) {
    while (w.count() > target) {
        int pick = -1;
        long pick_deg = -1;
        for (int v = w.lowest(); v >= 0; v = w.next(v + 1)) {
            long d = g.neighbors(v).count_and(w);
            bool better = pick < 0 || (side == Side::low ? d >= pick_deg : d <= pick_deg);
            if (better) {
                pick = v;
                pick_deg = d;
            }
        }
        w.reset(pick);
    }
    if (w.count() >= 2) {
        Rational d = density_set(g, w);
        bool ok = side == Side::low ? d <= threshold : d >= Rational(1) - threshold;
        if (!ok) throw ContractError("shrink_preserving_side lost the density bound");
    }
    return w;
}

struct Theorem1Recursion {
    const Graph& g;
    const PatternGraph& h;
    uint64_t seed;
    uint64_t call_counter = 0;

    struct Piece {
        VertexSet w;
        Side side;
    };

    // certificate for: d(W) <= e1  or  d(W) >= 1 - e2, W subset of u
    Piece solve(const VertexSet& u, const Rational& e1, const Rational& e2) {
        long usz = u.count();
        if (usz < 2) throw ContractError("theorem1 recursion on universe < 2");

        Rational du = density_set(g, u.count() >= 2 ? u : u);
        if (du <= e1) return {u, Side::low};
        if (du >= Rational(1) - e2) return {u, Side::high};

        // here e1 + e2 < 1 necessarily
        if (usz < h.k() || usz < 4) return two_point(u);

        Rational eps = Rational::min(e1, e2);
        Rational quarter = eps / Rational(4);

        std::vector<int> back;
        Graph sub = g.induced(u, &back);
        SplitWitness pair;
        try {
            pair = eh_pair(sub, h, quarter, Rng::derive(seed, 0x1000 + call_counter++));
        } catch (const EmbeddingFoundError& e) {
            // lift the embedding back to g's labels
            Embedding lifted = e.embedding;
            for (int& v : lifted.map) v = back[size_t(v)];
            throw EmbeddingFoundError(lifted);
        } catch (const SearchFailure&) {
            return two_point(u);
        }
        VertexSet a = lift(pair.a, back), b = lift(pair.b, back);
        if (a.count() < 2 || b.count() < 2) return two_point(u);

        if (pair.mode == SplitWitness::Mode::sparse)
            return merge_branch(u, a, b, e1, e2, eps, /*low_side=*/true);
        return merge_branch(u, a, b, e1, e2, eps, /*low_side=*/false);
    }

    Piece two_point(const VertexSet& u) {
        int v1 = u.lowest();
        int v2 = u.next(v1 + 1);
        VertexSet w(g.vertex_count());
        w.set(v1);
        w.set(v2);
        return {w, g.adjacent(v1, v2) ? Side::high : Side::low};
    }

    VertexSet lift(const VertexSet& local, const std::vector<int>& back) const {
        VertexSet out(g.vertex_count());
        for (int v = local.lowest(); v >= 0; v = local.next(v + 1)) out.set(back[size_t(v)]);
        return out;
    }

    // sparse mode merges two low-density pieces (dense is the mirror
    // image on non-edges); a child landing on the opposite side wins
    // outright and is returned as-is
    Piece merge_branch(const VertexSet& u, VertexSet a, VertexSet b, const Rational& e1,
                       const Rational& e2, const Rational& eps, bool low_side) {
        Rational child_e1 = low_side ? e1 * Rational(3, 2) : e1;
        Rational child_e2 = low_side ? e2 : e2 * Rational(3, 2);
        Side keep = low_side ? Side::low : Side::high;
        Rational keep_eps = low_side ? child_e1 : child_e2;
        Rational half_eps = eps / Rational(2);

        Piece wa = solve(a, child_e1, child_e2);
        if (wa.side != keep) return wa;

        while (true) {
            // B1: vertices of b whose (non-)degree into wa.w is small
            VertexSet b1(g.vertex_count());
            long wa_size = wa.w.count();
            for (int v = b.lowest(); v >= 0; v = b.next(v + 1)) {
                long deg = g.neighbors(v).count_and(wa.w);
                long rel = low_side ? deg : wa_size - deg;
                if (Rational(rel) <= half_eps * Rational(wa_size)) b1.set(v);
            }
            if (b1.count() < 2) return two_point(u);

            Piece wb = solve(b1, child_e1, child_e2);
            if (wb.side != keep) return wb;

            if (wb.w.count() >= wa_size) {
                VertexSet wb_trim = shrink_preserving_side(g, wb.w, keep, keep_eps, wa_size);
                VertexSet merged = wa.w | wb_trim;
                Rational d = density_set(g, merged);
                bool ok = low_side ? d <= e1 : d >= Rational(1) - e2;
                if (!ok) throw ContractError("theorem1 merge lost the density bound");
                return {merged, keep};
            }
            // shrink wa to |wb| and refilter b against the smaller set
            wa.w = shrink_preserving_side(g, wa.w, keep, keep_eps, wb.w.count());
        }
    }
};

}  // namespace

bool check_density_certificate(const Graph& g, const DensityCertificate& c, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    long sz = c.w.count();
    if (sz < std::min<long>(c.floor_claim, 2)) return fail("certificate below floor");
    if (sz < c.floor_claim) return fail("certificate below claimed floor");
    Rational d = sz >= 2 ? density_set(g, c.w) : Rational(0);
    if (c.side == DensityCertificate::Side::low) {
        if (d > c.eps) return fail("density above eps on low side");
    } else {
        if (d < Rational(1) - c.eps) return fail("density below 1-eps on high side");
    }
    return true;
}

DensityCertificate sparse_or_dense_subset(const Graph& g, const PatternGraph& h, const Rational& eps,
                                          uint64_t seed, bool oracle_fallback) {
    int n = g.vertex_count();
    if (n < 2) throw PreconditionError("sparse_or_dense_subset: n >= 2 required");
    if (eps <= Rational(0) || eps >= Rational(1, 2))
        throw PreconditionError("sparse_or_dense_subset: eps in (0,1/2) required");

    long floor_claim = std::max<long>(2, theorem1_size_floor(h.k(), eps, n));

    Theorem1Recursion rec{g, h, seed};
    auto piece = rec.solve(g.all_vertices(), eps, eps);

    DensityCertificate cert;
    cert.w = piece.w;
    cert.side = piece.side;
    cert.eps = eps;
    cert.floor_claim = floor_claim;

    // vacuous analytic floor: return the oracle's best-effort certificate
    // when it beats the recursion (n <= 18 only)
    if (oracle_fallback && theorem1_size_floor(h.k(), eps, n) < 2 && n <= 18) {
        VertexSet best = best_sparse_or_dense(g, eps);
        if (best.count() > cert.w.count()) {
            cert.w = best;
            Rational d = density_set_or_zero(g, best);
            cert.side = d <= eps ? DensityCertificate::Side::low : DensityCertificate::Side::high;
        }
    }

    std::string why;
    if (!check_density_certificate(g, cert, &why))
        throw ContractError("sparse_or_dense_subset certificate invalid: " + why);
    return cert;
}

// ---------------------------------------------------------------------------
// Theorem 4.4

bool check_equitable_partition(const Graph& g, const EquitablePartition& p, const Rational& eps,
                               std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (p.parts.empty()) return fail("no parts");
    if (p.parts.size() != p.sides.size()) return fail("sides/parts length mismatch");
    VertexSet cover(g.vertex_count());
    long min_sz = g.vertex_count() + 1, max_sz = 0;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (p.parts[i].none()) return fail("empty part");
        if (cover.intersects(p.parts[i])) return fail("parts overlap");
        cover |= p.parts[i];
        long sz = p.parts[i].count();
        min_sz = std::min(min_sz, sz);
        max_sz = std::max(max_sz, sz);
        Rational d = density_set_or_zero(g, p.parts[i]);
        if (p.sides[i] == DensityCertificate::Side::low) {
            if (d > eps) return fail("part " + std::to_string(i) + " above eps");
        } else if (d < Rational(1) - eps) {
            return fail("part " + std::to_string(i) + " below 1-eps");
        }
    }
    if (cover != Bitset::full(g.vertex_count())) return fail("parts do not cover V");
    if (max_sz - min_sz > 1) return fail("not equitable");
    if (Rational(long(p.parts.size())) > p.part_bound) return fail("more parts than the claimed bound");
    return true;
}

namespace {

Rational theorem44_part_bound(int k, const Rational& eps) {
    // C = 4 / (eps * delta*(eps/4, H)), delta* = 2^{-15 k m^2}
    Rational quarter = eps / Rational(4);
    long m = 0;
    Rational scaled = quarter;
    while (scaled < Rational(1)) {
        scaled *= Rational(2);
        ++m;
    }
    Rational delta_star = Rational::pow2(-15 * long(k) * m * m);
    return Rational(4) / (eps * delta_star);
}

EquitablePartition pair_partition_fallback(const Graph& g, const Rational& part_bound) {
    // a partition into 2-sets (and at most one singleton) satisfies any
    // density threshold: a pair has density exactly 0 or 1
    EquitablePartition p;
    p.part_bound = part_bound;
    int n = g.vertex_count();
    for (int v = 0; v + 1 < n; v += 2) {
        VertexSet s(n);
        s.set(v);
        s.set(v + 1);
        p.parts.push_back(s);
        p.sides.push_back(g.adjacent(v, v + 1) ? DensityCertificate::Side::high
                                               : DensityCertificate::Side::low);
    }
    if (n % 2) {
        VertexSet s(n);
        s.set(n - 1);
        p.parts.push_back(s);
        p.sides.push_back(DensityCertificate::Side::low);
    }
    return p;
}

}  // namespace

EquitablePartition equitable_density_partition(const Graph& g, const PatternGraph& h, const Rational& eps,
                                               uint64_t seed) {
    int n = g.vertex_count();
    int k = h.k();
    if (n < 1) throw PreconditionError("equitable_density_partition: empty graph");
    if (eps <= Rational(0) || eps >= Rational(1, 2))
        throw PreconditionError("equitable_density_partition: eps in (0,1/2) required");
    Rational bound = theorem44_part_bound(k, eps);

    // kappa precondition, oracle-checked while the count is affordable
    if (std::pow(double(n), double(k)) <= 2e7) {
        mpz_class copies = count_labeled_induced(g, h);
        Rational quarter = eps / Rational(4);
        long m = 0;
        Rational scaled = quarter;
        while (scaled < Rational(1)) {
            scaled *= Rational(2);
            ++m;
        }
        Rational kappa = quarter.pow(unsigned(k)) * Rational::pow2(-15 * (long(k) * m) * (long(k) * m));
        mpz_class nk = 1;
        for (int i = 0; i < k; ++i) nk *= n;
        if (Rational(copies, 1) >= kappa * Rational(nk, 1))
            throw PreconditionError("equitable_density_partition: too many induced copies (kappa violated)");
    }

    if (n == 1) {
        EquitablePartition p;
        p.part_bound = bound;
        p.parts.push_back(Bitset::full(1));
        p.sides.push_back(DensityCertificate::Side::low);
        return p;
    }

    Rational quarter = eps / Rational(4);
    Rational residue_cap = quarter * Rational(n);

    struct Part {
        VertexSet w;
        DensityCertificate::Side side;
    };
    std::vector<Part> parts;
    VertexSet residue = Bitset::full(n);
    long target = 0;
    uint64_t extraction = 0;
    bool collapsed = false;

    while (Rational(residue.count()) > residue_cap && residue.count() >= 2) {
        if (extraction > uint64_t(4 * n)) {
            collapsed = true;
            break;
        }
        std::vector<int> back;
        Graph sub = g.induced(residue, &back);
        DensityCertificate cert;
        try {
            cert = sparse_or_dense_subset(sub, h, quarter, Rng::derive(seed, 0x2000 + extraction++));
        } catch (const SearchFailure&) {
            collapsed = true;
            break;
        }
        VertexSet w(n);
        for (int v = cert.w.lowest(); v >= 0; v = cert.w.next(v + 1)) w.set(back[size_t(v)]);
        auto side = cert.side == DensityCertificate::Side::low ? DensityCertificate::Side::low
                                                               : DensityCertificate::Side::high;
        if (target == 0) target = w.count();
        if (w.count() > target) w = shrink_preserving_side(g, w, side, quarter, target);
        if (w.count() < target) {
            // lower the common size; earlier parts give their extras back
            target = w.count();
            for (auto& p : parts) {
                VertexSet trimmed = shrink_preserving_side(g, p.w, p.side, quarter, target);
                residue |= (p.w - trimmed);
                p.w = trimmed;
            }
        }
        parts.push_back({w, side});
        residue -= w;
    }

    EquitablePartition out;
    out.part_bound = bound;
    if (!collapsed && !parts.empty()) {
        // pad the residue into the parts, greedily, preserving sides
        std::vector<Part> padded = parts;
        bool ok = true;
        for (int v = residue.lowest(); v >= 0 && ok; v = residue.next(v + 1)) {
            long min_size = n + 1;
            for (const auto& p : padded) min_size = std::min(min_size, long(p.w.count()));
            bool placed = false;
            for (auto& p : padded) {
                if (p.w.count() != min_size) continue;
                VertexSet trial = p.w;
                trial.set(v);
                Rational d = density_set_or_zero(g, trial);
                bool fits = p.side == DensityCertificate::Side::low ? d <= eps : d >= Rational(1) - eps;
                if (fits) {
                    p.w = trial;
                    placed = true;
                    break;
                }
            }
            if (!placed) ok = false;
        }
        if (ok) {
            long mn = n + 1, mx = 0;
            for (const auto& p : padded) {
                mn = std::min(mn, long(p.w.count()));
                mx = std::max(mx, long(p.w.count()));
            }
            if (mx - mn <= 1) {
                for (auto& p : padded) {
                    out.parts.push_back(p.w);
                    out.sides.push_back(p.side);
                }
            }
        }
    }
    if (out.parts.empty()) out = pair_partition_fallback(g, bound);

    std::string why;
    if (!check_equitable_partition(g, out, eps, &why))
        throw ContractError("equitable_density_partition invalid: " + why);
    return out;
}

// ---------------------------------------------------------------------------
// Theorem 2

std::optional<bool> classify_homogeneous(const Graph& g, const VertexSet& s) {
    auto verts = s.to_vector();
    bool clique = true, indep = true;
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            if (g.adjacent(verts[i], verts[j])) indep = false;
            else clique = false;
        }
    if (clique) return true;  // singletons and pairs of adjacent vertices count as cliques
    if (indep) return false;
    return std::nullopt;
}

long erdos_szekeres_floor(long n) {
    // smallest s with 4^s >= n
    long s = 0;
    mpz_class p = 1;
    while (p < n) {
        p *= 4;
        ++s;
    }
    return s;
}

HomogeneousWitness es_bisection(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw PreconditionError("es_bisection: empty graph");
    VertexSet u = Bitset::full(n);
    std::vector<std::pair<int, bool>> chain;  // (vertex, went to neighbors?)
    while (u.any()) {
        int v = u.lowest();
        u.reset(v);
        VertexSet nb = u & g.neighbors(v);
        VertexSet nn = u - g.neighbors(v);
        bool to_nb = nb.count() > nn.count();
        chain.push_back({v, to_nb});
        u = to_nb ? nb : nn;
    }
    long adj = 0, non = 0;
    for (auto [v, t] : chain) (t ? adj : non)++;
    bool clique = adj > non;
    VertexSet out(n);
    int last = -1;
    for (auto [v, t] : chain)
        if (t == clique) {
            out.set(v);
            last = v;
        }
    // the final chain element joins whichever side it matches
    if (!chain.empty() && chain.back().first != last) {
        int tail = chain.back().first;
        VertexSet trial = out;
        trial.set(tail);
        if (classify_homogeneous(g, trial).has_value()) out = trial;
    }
    return {out, clique};
}

namespace {

VertexSet peel_homogeneous(const Graph& g, const VertexSet& w, bool clique) {
    VertexSet u = w, out(g.vertex_count());
    while (u.any()) {
        int pick = -1;
        long pick_deg = clique ? -1 : long(g.vertex_count()) + 1;
        for (int v = u.lowest(); v >= 0; v = u.next(v + 1)) {
            long d = g.neighbors(v).count_and(u);
            if (clique ? d > pick_deg : d < pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        out.set(pick);
        u.reset(pick);
        if (clique) u &= g.neighbors(pick);
        else u -= g.neighbors(pick);
    }
    return out;
}

}  // namespace

HomogeneousWitness hom_lower_bound(const Graph& g, const PatternGraph& h, uint64_t seed) {
    int n = g.vertex_count();
    if (n < 1) throw PreconditionError("hom_lower_bound: empty graph");

    HomogeneousWitness best = es_bisection(g);
    if (n >= 2) {
        // the proof's eps = 2^{-(1/5) sqrt(log n / k)} exceeds 1/2 at desk
        // scale; clamp to the nearest admissible dyadic
        double x = 0.2 * std::sqrt(std::log2(double(n)) / double(h.k()));
        long e = std::max<long>(2, long(std::ceil(x)));
        Rational eps = Rational::pow2(-e);

        DensityCertificate cert = sparse_or_dense_subset(g, h, eps, seed);
        bool clique_side = cert.side == DensityCertificate::Side::high;
        VertexSet inner = peel_homogeneous(g, cert.w, clique_side);
        if (inner.count() > best.set.count()) best = {inner, clique_side};
    }

    auto cls = classify_homogeneous(g, best.set);
    if (!cls) throw ContractError("hom_lower_bound produced a non-homogeneous set");
    best.is_clique = *cls;
    if (best.set.count() < erdos_szekeres_floor(n))
        throw ContractError("hom_lower_bound fell below the Erdos-Szekeres floor");
    return best;
}

}  // namespace rf
