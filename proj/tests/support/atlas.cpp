#include "atlas.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "ramsey_forge/errors.hpp"

namespace rf::test {

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    Bitset seen(n), frontier(n);
    seen.set(0);
    frontier.set(0);
    while (frontier.any()) {
        Bitset next(n);
        for (int v = frontier.lowest(); v >= 0; v = frontier.next(v + 1)) next |= g.neighbors(v);
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen.count() == n;
}

bool has_triangle(const Graph& g) {
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = g.neighbors(u).next(u + 1); v >= 0; v = g.neighbors(u).next(v + 1))
            if (g.neighbors(u).intersects(g.neighbors(v))) return true;
    return false;
}

namespace {

// per-vertex invariant: (degree, sorted neighbor degrees); graph key is
// the sorted list. Cheap and sharp enough to keep iso buckets tiny.
std::vector<std::vector<int>> invariant_key(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> key(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<int> row{g.degree(v)};
        for (int u = g.neighbors(v).lowest(); u >= 0; u = g.neighbors(v).next(u + 1))
            row.push_back(g.degree(u));
        std::sort(row.begin() + 1, row.end());
        key[static_cast<size_t>(v)] = std::move(row);
    }
    std::sort(key.begin(), key.end());
    return key;
}

bool iso_backtrack(const Graph& a, const Graph& b, std::vector<int>& map, std::vector<bool>& used,
                   size_t at, const std::vector<int>& order) {
    if (at == order.size()) return true;
    int va = order[at];
    for (int vb = 0; vb < b.vertex_count(); ++vb) {
        if (used[static_cast<size_t>(vb)]) continue;
        if (a.degree(va) != b.degree(vb)) continue;
        bool ok = true;
        for (size_t prev = 0; prev < at && ok; ++prev) {
            int ua = order[prev];
            if (a.adjacent(va, ua) != b.adjacent(vb, map[static_cast<size_t>(ua)])) ok = false;
        }
        if (!ok) continue;
        map[static_cast<size_t>(va)] = vb;
        used[static_cast<size_t>(vb)] = true;
        if (iso_backtrack(a, b, map, used, at + 1, order)) return true;
        used[static_cast<size_t>(vb)] = false;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (invariant_key(a) != invariant_key(b)) return false;
    // highest degree first keeps the search tight
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (a.degree(x) != a.degree(y)) return a.degree(x) > a.degree(y);
        return x < y;
    });
    std::vector<int> map(static_cast<size_t>(n), -1);
    std::vector<bool> used(static_cast<size_t>(n), false);
    return iso_backtrack(a, b, map, used, 0, order);
}

namespace {

struct ClassStore {
    std::map<std::vector<std::vector<int>>, std::vector<Graph>> buckets;
    std::vector<Graph> all;

    bool insert(const Graph& g) {
        auto key = invariant_key(g);
        auto& bucket = buckets[key];
        for (const Graph& other : bucket)
            if (are_isomorphic(g, other)) return false;
        bucket.push_back(g);
        all.push_back(g);
        return true;
    }
};

// all ways to extend every (n-1)-class by one vertex whose neighborhood
// passes `admit`; admit sees (graph, neighborhood-mask as Bitset)
template <typename Admit>
std::vector<Graph> extend_level(const std::vector<Graph>& smaller, Admit&& admit) {
    ClassStore store;
    for (const Graph& g : smaller) {
        int n = g.vertex_count();
        for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
            Bitset nb(n);
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) nb.set(v);
            if (!admit(g, nb)) continue;
            std::vector<std::pair<int, int>> edges = g.edges();
            for (int v = nb.lowest(); v >= 0; v = nb.next(v + 1)) edges.push_back({v, n});
            store.insert(Graph::from_edges(n + 1, edges));
        }
    }
    return store.all;
}

}  // namespace

std::vector<Graph> atlas_all(int max_n) {
    std::vector<Graph> out, level{Graph::empty(1)};
    out.push_back(level[0]);
    for (int n = 2; n <= max_n; ++n) {
        level = extend_level(level, [](const Graph&, const Bitset&) { return true; });
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Graph> atlas_connected_trianglefree(int max_n) {
    std::vector<Graph> out, level{Graph::empty(1)};
    for (int n = 2; n <= max_n; ++n) {
        // triangle-free is preserved iff the new neighborhood is independent
        level = extend_level(level, [](const Graph& g, const Bitset& nb) {
            for (int v = nb.lowest(); v >= 0; v = nb.next(v + 1))
                if (g.neighbors(v).intersects(nb)) return false;
            return true;
        });
        for (const Graph& g : level)
            if (is_connected(g)) out.push_back(g);
    }
    return out;
}

namespace {

struct CotreeGen {
    // canonical cotrees keyed by printed form; conn[n] holds connected
    // cograph classes on n leaves, nonjoin[n] what may sit under a join
    std::map<int, std::vector<std::pair<std::string, Graph>>> conn, nonjoin;

    static Graph join(const Graph& a, const Graph& b) {
        int na = a.vertex_count();
        std::vector<std::pair<int, int>> edges = Graph::disjoint_union(a, b).edges();
        for (int u = 0; u < na; ++u)
            for (int v = 0; v < b.vertex_count(); ++v) edges.push_back({u, na + v});
        return Graph::from_edges(na + b.vertex_count(), edges);
    }

    void build(int max_n) {
        conn[1] = {{"L", Graph::empty(1)}};
        nonjoin[1] = conn[1];
        for (int n = 2; n <= max_n; ++n) {
            std::map<std::string, Graph> joins, unions;
            // multisets of smaller pieces in nondecreasing (size, name) order
            std::function<void(int, int, const std::string&, std::vector<std::pair<std::string, Graph>>&,
                               const std::map<int, std::vector<std::pair<std::string, Graph>>>&,
                               std::map<std::string, Graph>&, const char*)>
                rec = [&](int rem, int min_size, const std::string& min_name,
                          std::vector<std::pair<std::string, Graph>>& parts,
                          const std::map<int, std::vector<std::pair<std::string, Graph>>>& pool,
                          std::map<std::string, Graph>& sink, const char* tag) {
                    if (rem == 0) {
                        if (parts.size() < 2) return;
                        std::string name = std::string(tag) + "(";
                        Graph acc = parts[0].second;
                        name += parts[0].first;
                        for (size_t i = 1; i < parts.size(); ++i) {
                            name += "," + parts[i].first;
                            acc = tag[0] == 'J' ? join(acc, parts[i].second)
                                                : Graph::disjoint_union(acc, parts[i].second);
                        }
                        name += ")";
                        sink.emplace(name, acc);
                        return;
                    }
                    for (int s = min_size; s <= rem; ++s) {
                        auto it = pool.find(s);
                        if (it == pool.end()) continue;
                        for (const auto& [nm, gr] : it->second) {
                            if (s == min_size && nm < min_name) continue;
                            parts.push_back({nm, gr});
                            rec(rem - s, s, nm, parts, pool, sink, tag);
                            parts.pop_back();
                        }
                    }
                };
            std::vector<std::pair<std::string, Graph>> scratch;
            rec(n, 1, "", scratch, nonjoin, joins, "J");
            rec(n, 1, "", scratch, conn, unions, "U");
            conn[n].clear();
            for (const auto& [nm, gr] : joins) conn[n].push_back({nm, gr});
            nonjoin[n].clear();
            if (n == 1) nonjoin[n] = conn[n];
            for (const auto& [nm, gr] : unions) nonjoin[n].push_back({nm, gr});
        }
    }
};

}  // namespace

std::vector<Graph> atlas_connected_cographs(int max_n) {
    CotreeGen gen;
    gen.build(max_n);
    std::vector<Graph> out;
    for (int n = 2; n <= max_n; ++n)
        for (const auto& [nm, gr] : gen.conn[n]) out.push_back(gr);
    return out;
}

Graph random_cograph(int n, uint64_t seed) {
    if (n < 1) throw PreconditionError("random_cograph: n >= 1");
    Rng rng(Rng::derive(seed, 0xc067));
    std::vector<Graph> pieces(static_cast<size_t>(n), Graph::empty(1));
    while (pieces.size() > 1) {
        size_t i = size_t(rng.below(pieces.size()));
        size_t j = size_t(rng.below(pieces.size() - 1));
        if (j >= i) ++j;
        if (i > j) std::swap(i, j);
        Graph merged = (rng.next() & 1) ? CotreeGen::join(pieces[i], pieces[j])
                                        : Graph::disjoint_union(pieces[i], pieces[j]);
        pieces.erase(pieces.begin() + long(j));
        pieces[i] = merged;
    }
    return pieces[0];
}

Graph random_trianglefree(int n, const Rational& p, uint64_t seed) {
    Rng rng(Rng::derive(seed, 0x7f3e));
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    rng.shuffle(pairs);
    std::vector<Bitset> adj(static_cast<size_t>(n), Bitset(n));
    for (auto [u, v] : pairs) {
        if (!rng.bernoulli(p)) continue;
        if (adj[static_cast<size_t>(u)].intersects(adj[static_cast<size_t>(v)])) continue;
        adj[static_cast<size_t>(u)].set(v);
        adj[static_cast<size_t>(v)].set(u);
    }
    return Graph::from_rows(std::move(adj));
}

}  // namespace rf::test
