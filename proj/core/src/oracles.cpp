#include "ramsey_forge/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ramsey_forge/density.hpp"
#include "ramsey_forge/errors.hpp"

namespace rf {

namespace {

struct InducedSearch {
    const Graph& g;
    const PatternGraph& h;
    int k;
    std::vector<int> image;       // pattern vertex -> host vertex, -1 unplaced
    Bitset used;
    mpz_class count = 0;
    bool stop_at_first;
    std::optional<std::vector<int>> witness;

    InducedSearch(const Graph& g_, const PatternGraph& h_, bool first_only)
        : g(g_), h(h_), k(h_.k()), image(size_t(h_.k()), -1), used(g_.vertex_count()), stop_at_first(first_only) {}

    bool candidate_ok(int pv, int host) const {
        if (used.test(host)) return false;
        for (int j = 0; j < k; ++j) {
            if (image[size_t(j)] < 0) continue;
            if (h.edge(pv, j) != g.adjacent(host, image[size_t(j)])) return false;
        }
        return true;
    }

    bool run(int pv) {
        if (pv == k) {
            ++count;
            if (stop_at_first) {
                witness = image;
                return true;
            }
            return false;
        }
        // candidates: intersect host-neighborhood constraints of placed vertices
        Bitset cand = Bitset::full(g.vertex_count());
        cand -= used;
        for (int j = 0; j < k; ++j) {
            if (image[size_t(j)] < 0) continue;
            if (h.edge(pv, j)) cand &= g.neighbors(image[size_t(j)]);
            else cand -= g.neighbors(image[size_t(j)]);
        }
        for (int v = cand.lowest(); v >= 0; v = cand.next(v + 1)) {
            image[size_t(pv)] = v;
            used.set(v);
            bool done = run(pv + 1);
            used.reset(v);
            image[size_t(pv)] = -1;
            if (done) return true;
        }
        return false;
    }
};

}  // namespace

mpz_class count_labeled_induced(const Graph& g, const PatternGraph& h, const OracleBudget& budget) {
    int k = h.k();
    if (k > budget.count_direct_max_k) {
        double ops = std::pow(double(g.vertex_count()), double(k));
        if (ops > budget.count_max_ops) throw BudgetError("count_labeled_induced: n^k beyond budget");
    }
    InducedSearch s(g, h, false);
    s.run(0);
    return s.count;
}

std::optional<std::vector<int>> find_induced_copy(const Graph& g, const PatternGraph& h) {
    InducedSearch s(g, h, true);
    s.run(0);
    return s.witness;
}

namespace {

// Tomita-style branch and bound with greedy coloring bound.
struct CliqueSolver {
    const Graph& g;
    VertexSet best;
    std::vector<int> current;

    explicit CliqueSolver(const Graph& g_) : g(g_), best(g_.vertex_count()) {}

    void expand(const std::vector<int>& cand) {
        if (cand.empty()) {
            if (int(current.size()) > best.count()) {
                VertexSet s(g.vertex_count());
                for (int v : current) s.set(v);
                best = s;
            }
            return;
        }
        // greedy coloring of candidates; vertices processed in color order
        std::vector<int> color(cand.size());
        std::vector<Bitset> classes;
        for (size_t i = 0; i < cand.size(); ++i) {
            int v = cand[i];
            size_t c = 0;
            while (c < classes.size() && g.neighbors(v).intersects(classes[c])) ++c;
            if (c == classes.size()) classes.emplace_back(g.vertex_count());
            classes[c].set(v);
            color[i] = int(c) + 1;
        }
        // order candidates by (color asc) then index; branch from the back
        std::vector<std::pair<int, int>> ordered;
        for (size_t i = 0; i < cand.size(); ++i) ordered.push_back({color[i], cand[i]});
        std::sort(ordered.begin(), ordered.end());
        for (size_t i = ordered.size(); i-- > 0;) {
            auto [c, v] = ordered[i];
            if (int(current.size()) + c <= best.count()) return;
            current.push_back(v);
            std::vector<int> next;
            for (size_t j = 0; j < i; ++j)
                if (g.adjacent(v, ordered[j].second)) next.push_back(ordered[j].second);
            expand(next);
            current.pop_back();
        }
    }
};

}  // namespace

VertexSet max_clique(const Graph& g, const OracleBudget& budget) {
    if (g.vertex_count() > budget.homogeneous_max_n) throw BudgetError("max_clique: n beyond budget");
    CliqueSolver solver(g);
    std::vector<int> all(static_cast<size_t>(g.vertex_count()));
    for (int i = 0; i < g.vertex_count(); ++i) all[size_t(i)] = i;
    solver.expand(all);
    return solver.best;
}

HomogeneousSet max_homogeneous(const Graph& g, const OracleBudget& budget) {
    VertexSet clique = max_clique(g, budget);
    VertexSet indep = max_clique(g.complement(), budget);
    if (clique.count() >= indep.count()) return {clique, true};
    return {indep, false};
}

mpz_class count_cliques(const Graph& g, int k) {
    mpz_class total = 0;
    std::vector<int> chosen;
    std::function<void(int, Bitset)> rec = [&](int depth, Bitset cand) {
        if (depth == k) {
            ++total;
            return;
        }
        for (int v = cand.lowest(); v >= 0; v = cand.next(v + 1)) {
            Bitset next = cand & g.neighbors(v);
            // keep only vertices above v for unordered counting
            Bitset above(g.vertex_count());
            for (int u = next.next(v + 1); u >= 0; u = next.next(u + 1)) above.set(u);
            rec(depth + 1, above);
        }
    };
    if (k == 0) return 1;
    rec(0, Bitset::full(g.vertex_count()));
    return total;
}

VertexSet best_sparse_or_dense(const Graph& g, const Rational& eps, const OracleBudget& budget) {
    int n = g.vertex_count();
    if (n > budget.sparse_dense_max_n) throw BudgetError("best_sparse_or_dense: n beyond budget");
    std::vector<uint32_t> adj(size_t(n), 0);
    for (int v = 0; v < n; ++v)
        for (int u = g.neighbors(v).lowest(); u >= 0; u = g.neighbors(v).next(u + 1)) adj[size_t(v)] |= 1u << u;
    size_t total = size_t(1) << n;
    std::vector<uint16_t> edge_count(total, 0);
    for (size_t mask = 1; mask < total; ++mask) {
        int low = std::countr_zero(uint32_t(mask));
        uint32_t rest = uint32_t(mask) & (uint32_t(mask) - 1);
        edge_count[mask] = uint16_t(edge_count[rest] + std::popcount(adj[size_t(low)] & rest));
    }
    const mpz_class num = eps.num(), den = eps.den();
    uint32_t best_mask = 0;
    int best_size = 0;
    for (size_t mask = 1; mask < total; ++mask) {
        int sz = std::popcount(uint32_t(mask));
        if (sz <= best_size) continue;
        bool ok;
        if (sz < 2) ok = true;
        else {
            long pairs = long(sz) * (sz - 1) / 2;
            mpz_class e(long(edge_count[mask]));
            ok = (e * den <= num * pairs) || (e * den >= (den - num) * pairs);
        }
        if (ok) {
            best_mask = uint32_t(mask);
            best_size = sz;
        }
    }
    VertexSet w(n);
    for (int v = 0; v < n; ++v)
        if (best_mask >> v & 1) w.set(v);
    return w;
}

namespace {

VertexSet best_half_generic(const Graph& g, const Rational& target_times_4,
                            int cap, const char* who) {
    // maximizes |4*e(S) - target_times_4| over all floor(n/2)-subsets;
    // exact because the objective is scaled to integers times a rational
    int n = g.vertex_count();
    if (n > cap) throw BudgetError(std::string(who) + ": n beyond budget");
    if (n < 2) throw PreconditionError(std::string(who) + ": n >= 2 required");
    int m = n / 2;
    std::vector<uint32_t> adj(size_t(n), 0);
    for (int v = 0; v < n; ++v)
        for (int u = g.neighbors(v).lowest(); u >= 0; u = g.neighbors(v).next(u + 1)) adj[size_t(v)] |= 1u << u;

    uint32_t mask = (uint32_t(1) << m) - 1;
    uint32_t best_mask = mask;
    Rational best_dev(-1);
    const uint32_t limit = (n == 32) ? ~uint32_t(0) : (uint32_t(1) << n);
    while (mask < limit) {
        long e = 0;
        uint32_t rem = mask;
        while (rem) {
            int v = std::countr_zero(rem);
            rem &= rem - 1;
            e += std::popcount(adj[size_t(v)] & rem);
        }
        Rational dev = (Rational(4 * e) - target_times_4).abs();
        if (dev > best_dev) {
            best_dev = dev;
            best_mask = mask;
        }
        // Gosper's hack: next subset of the same cardinality
        uint32_t c = mask & (0u - mask);
        uint32_t r = mask + c;
        if (r >= limit || c == 0) break;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (best_mask >> v & 1) s.set(v);
    return s;
}

}  // namespace

VertexSet best_half_subset(const Graph& g, const OracleBudget& budget) {
    long n = g.vertex_count();
    // |e - n^2/16| == |4e - n^2/4| / 4
    return best_half_generic(g, Rational(n * n, 4), budget.half_subset_max_n, "best_half_subset");
}

VertexSet best_half_subset_eta(const Graph& g, const Rational& eta, const OracleBudget& budget) {
    long m = g.vertex_count() / 2;
    Rational target = eta * Rational(m * (m - 1) / 2);
    return best_half_generic(g, target * Rational(4), budget.half_subset_max_n, "best_half_subset_eta");
}

bool exhaustive_induced_ramsey(const Graph& g, const PatternGraph& h, const OracleBudget& budget) {
    uint64_t m = g.edge_count();
    if (m > budget.ramsey_max_edges) throw BudgetError("exhaustive_induced_ramsey: e(G) beyond budget");
    auto edge_list = g.edges();
    std::map<std::pair<int, int>, int> edge_index;
    for (size_t i = 0; i < edge_list.size(); ++i) edge_index[edge_list[i]] = int(i);

    // all vertex sets spanning an induced copy of H, as edge-index masks
    std::vector<uint32_t> copy_masks;
    int n = g.vertex_count(), k = h.k();
    std::vector<int> comb(static_cast<size_t>(k));
    std::function<void(int, int)> choose = [&](int start, int depth) {
        if (depth == k) {
            VertexSet w(n);
            for (int v : comb) w.set(v);
            Graph sub = g.induced(w);
            if (find_induced_copy(sub, h)) {
                uint32_t mask = 0;
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j)
                        if (g.adjacent(comb[size_t(i)], comb[size_t(j)])) {
                            auto key = std::minmax(comb[size_t(i)], comb[size_t(j)]);
                            mask |= uint32_t(1) << edge_index[{key.first, key.second}];
                        }
                copy_masks.push_back(mask);
            }
            return;
        }
        for (int v = start; v < n; ++v) {
            comb[size_t(depth)] = v;
            choose(v + 1, depth + 1);
        }
    };
    if (k <= n) choose(0, 0);
    if (copy_masks.empty()) return false;
    std::sort(copy_masks.begin(), copy_masks.end());
    copy_masks.erase(std::unique(copy_masks.begin(), copy_masks.end()), copy_masks.end());

    if (m == 0) return true;  // only the empty coloring; copies are vacuously monochromatic
    uint64_t half = uint64_t(1) << (m - 1);  // color symmetry: pin edge m-1 to blue
    for (uint64_t red = 0; red < half; ++red) {
        bool found = false;
        for (uint32_t cm : copy_masks) {
            if ((cm & red) == cm || (cm & ~uint32_t(red)) == cm) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

const std::vector<Graph>& isomorphism_classes(int m) {
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 1 || m > 5) throw BudgetError("isomorphism_classes: m must be 1..5");

    std::vector<int> perm(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) perm[size_t(i)] = i;
    int pairs = m * (m - 1) / 2;
    auto bit_of = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        int idx = 0, b = 0;
        for (int a = 0; a < m; ++a)
            for (int c = a + 1; c < m; ++c, ++b)
                if (a == i && c == j) idx = b;
        return idx;
    };
    std::vector<Graph> classes;
    std::vector<bool> seen(size_t(1) << pairs, false);
    for (uint32_t mask = 0; mask < (uint32_t(1) << pairs); ++mask) {
        if (seen[mask]) continue;
        // mark the whole orbit, keep the first representative
        std::vector<int> p(perm);
        std::sort(p.begin(), p.end());
        do {
            uint32_t img = 0;
            int b = 0;
            for (int a = 0; a < m; ++a)
                for (int c = a + 1; c < m; ++c, ++b)
                    if (mask >> b & 1) img |= uint32_t(1) << bit_of(p[size_t(a)], p[size_t(c)]);
            seen[img] = true;
        } while (std::next_permutation(p.begin(), p.end()));
        std::vector<std::pair<int, int>> edges;
        int b = 0;
        for (int a = 0; a < m; ++a)
            for (int c = a + 1; c < m; ++c, ++b)
                if (mask >> b & 1) edges.push_back({a, c});
        classes.push_back(Graph::from_edges(m, edges));
    }
    return cache.emplace(m, std::move(classes)).first->second;
}

bool is_k_universal(const Graph& g, int k, const OracleBudget& budget) {
    if (k > budget.universal_max_k) throw BudgetError("is_k_universal: k beyond budget");
    if (k < 1) throw PreconditionError("is_k_universal: k >= 1");
    for (int m = 1; m <= k; ++m) {
        if (m > g.vertex_count()) return false;
        for (const Graph& cls : isomorphism_classes(m)) {
            PatternGraph h(cls);
            if (!find_induced_copy(g, h)) return false;
        }
    }
    return true;
}

}  // namespace rf
