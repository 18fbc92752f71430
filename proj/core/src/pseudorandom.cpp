#include "ramsey_forge/pseudorandom.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "ramsey_forge/density.hpp"
#include "ramsey_forge/errors.hpp"
#include "ramsey_forge/parallel.hpp"
#include "ramsey_forge/rng.hpp"

namespace rf {

bool is_prime(long q) {
    if (q < 2) return false;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

Graph paley(long q) {
    if (!is_prime(q)) throw PreconditionError("paley: q must be prime (prime powers unsupported)");
    if (q % 4 != 1) throw PreconditionError("paley: q = 1 (mod 4) required");
    std::vector<bool> square(size_t(q), false);
    for (long x = 1; x < q; ++x) square[size_t(x * x % q)] = true;
    std::vector<std::pair<int, int>> edges;
    for (long x = 0; x < q; ++x)
        for (long y = x + 1; y < q; ++y)
            if (square[size_t((y - x) % q)]) edges.push_back({int(x), int(y)});
    return Graph::from_edges(int(q), edges);
}

Graph dgt(int r, int t) {
    if (!is_prime(r)) throw PreconditionError("dgt: r must be prime");
    if (t < 1 || t > r + 1) throw PreconditionError("dgt: 1 <= t <= r+1 required");
    long n = long(r) * r;
    // line index of the direction (dx,dy) != 0: slope dy/dx in 0..r-1,
    // vertical = r; P = indices 0..t-1
    auto inv = [&](long a) {
        long base = a % r, result = 1, e = r - 2;
        while (e) {
            if (e & 1) result = result * base % r;
            base = base * base % r;
            e >>= 1;
        }
        return result;
    };
    std::vector<std::pair<int, int>> edges;
    for (long a = 0; a < n; ++a)
        for (long b = a + 1; b < n; ++b) {
            long dx = (a / r - b / r) % r, dy = (a % r - b % r) % r;
            if (dx < 0) dx += r;
            if (dy < 0) dy += r;
            long line = dx == 0 ? r : dy * inv(dx) % r;
            if (line < t) edges.push_back({int(a), int(b)});
        }
    return Graph::from_edges(int(n), edges);
}

Graph gnp(int n, const Rational& p, uint64_t seed) {
    if (p < Rational(0) || p > Rational(1)) throw PreconditionError("gnp: p in [0,1] required");
    Rng rng(Rng::derive(seed, 0x6e70));
    // edge iff raw < floor(p * 2^64); saturated at p = 1
    mpz_class threshold = (p * Rational::pow2(64)).floor();
    bool always = threshold >= (mpz_class(1) << 64);
    uint64_t cut = 0;
    if (!always) {
        mpz_class lo = threshold & 0xffffffff, hi = threshold >> 32;
        cut = (uint64_t(hi.get_ui()) << 32) | uint64_t(lo.get_ui());
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            uint64_t raw = rng.next();
            if (always || raw < cut) edges.push_back({u, v});
        }
    return Graph::from_edges(n, edges);
}

SpectralProfile spectral_profile(const Graph& g, int max_n) {
    int n = g.vertex_count();
    if (n > max_n) throw BudgetError("spectral_profile: n beyond cap");
    if (n < 1) throw PreconditionError("spectral_profile: empty graph");
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = g.neighbors(u).lowest(); v >= 0; v = g.neighbors(u).next(v + 1)) a(u, v) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) throw ContractError("eigensolver failed");

    SpectralProfile prof;
    prof.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::reverse(prof.eigenvalues.begin(), prof.eigenvalues.end());
    prof.second = 0.0;
    for (size_t i = 1; i < prof.eigenvalues.size(); ++i)
        prof.second = std::max(prof.second, std::abs(prof.eigenvalues[i]));
    prof.eigen_sum = 0.0;
    for (double ev : prof.eigenvalues) prof.eigen_sum += ev;

    int d = g.degree(0);
    prof.regular = true;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != d) {
            prof.regular = false;
            break;
        }
    prof.degree = prof.regular ? d : -1;

    // residual check ||Av - lambda v||_inf per eigenpair
    Eigen::MatrixXd residual = a * solver.eigenvectors() -
                               solver.eigenvectors() * solver.eigenvalues().asDiagonal();
    prof.max_residual = residual.cwiseAbs().maxCoeff();
    double scale = std::max(1.0, std::abs(prof.eigenvalues.front()));
    if (prof.max_residual > prof.tolerance * scale * n)
        throw ContractError("spectral_profile: residual beyond tolerance");
    return prof;
}

namespace {

// decodes assignment index (base-3 digits: 0 skip, 1 -> A, 2 -> B)
void decode_pair(uint64_t idx, int n, VertexSet& a, VertexSet& b) {
    for (int v = 0; v < n; ++v) {
        switch (idx % 3) {
            case 1: a.set(v); break;
            case 2: b.set(v); break;
            default: break;
        }
        idx /= 3;
    }
}

struct PairScan {
    bool violated = false;
    uint64_t first_violation = ~uint64_t{0};
    uint64_t checked = 0;
    // worst statistic tracked exactly: maximize (e*den - num*ab)^2 / (den^2 * ab)
    Rational worst_key = Rational(-1);
    uint64_t worst_idx = 0;
};

}  // namespace

PseudorandomCert certify_mixing(const Graph& g, const Rational& p, const Rational& lambda_sq,
                                CertMode mode, uint64_t seed, uint64_t samples) {
    int n = g.vertex_count();
    PseudorandomCert cert;
    cert.p = p;
    cert.lambda_sq = lambda_sq;
    cert.mode = mode;

    if (mode == CertMode::spectral) {
        SpectralProfile prof = spectral_profile(g);
        if (!prof.regular) throw PreconditionError("certify_mixing: spectral mode needs a regular graph");
        cert.spectral_lambda = prof.second;
        bool p_matches = p == Rational(prof.degree, n);
        bool lambda_covers = double(prof.second) * prof.second <= lambda_sq.approx() + 1e-9;
        cert.pass = p_matches && lambda_covers;
        return cert;
    }

    // statistic^2 = (d(A,B) - p)^2 |A||B| = (e*den_p - num_p*ab)^2 / (den_p^2 * ab);
    // violation  <=>  statistic^2 > lambda^2, all exact
    auto stat_sq = [&](uint64_t e, long asz, long bsz) {
        mpz_class ab = mpz_class(asz) * bsz;
        mpz_class gap = mpz_class(long(e)) * p.den() - p.num() * ab;
        return Rational(gap * gap, p.den() * p.den() * ab);
    };

    if (mode == CertMode::exhaustive) {
        if (n > 14) throw BudgetError("certify_mixing: exhaustive mode needs n <= 14");
        uint64_t total = 1;
        for (int i = 0; i < n; ++i) total *= 3;
        auto blocks = map_blocks<PairScan>(total, 1 << 14, [&](uint64_t lo, uint64_t hi) {
            PairScan s;
            for (uint64_t idx = lo; idx < hi; ++idx) {
                VertexSet a(n), b(n);
                decode_pair(idx, n, a, b);
                if (a.none() || b.none()) continue;
                ++s.checked;
                Rational key = stat_sq(edges_between(g, a, b), a.count(), b.count());
                if (key > s.worst_key) {
                    s.worst_key = key;
                    s.worst_idx = idx;
                }
                if (!s.violated && key > lambda_sq) {
                    s.violated = true;
                    s.first_violation = idx;
                }
            }
            return s;
        });
        cert.pass = true;
        uint64_t worst_idx = 0;
        Rational worst(-1);
        bool pinned = false;
        for (const auto& s : blocks) {
            cert.pairs_checked += s.checked;
            if (!pinned && s.worst_key > worst) {
                worst = s.worst_key;
                worst_idx = s.worst_idx;
            }
            if (s.violated && !pinned) {
                cert.pass = false;
                worst_idx = s.first_violation;  // report the first violating pair
                pinned = true;
            }
        }
        if (cert.pairs_checked) {
            PairStat ps;
            ps.a = VertexSet(n);
            ps.b = VertexSet(n);
            decode_pair(worst_idx, n, ps.a, ps.b);
            ps.statistic =
                std::sqrt(stat_sq(edges_between(g, ps.a, ps.b), ps.a.count(), ps.b.count()).approx());
            cert.worst = ps;
        }
        return cert;
    }

    // sampled
    Rng rng(Rng::derive(seed, 0x5a3e));
    cert.pass = true;
    Rational worst(-1);
    for (uint64_t i = 0; i < samples; ++i) {
        VertexSet a(n), b(n);
        for (int v = 0; v < n; ++v) {
            switch (rng.below(3)) {
                case 1: a.set(v); break;
                case 2: b.set(v); break;
                default: break;
            }
        }
        if (a.none() || b.none()) continue;
        ++cert.pairs_checked;
        Rational key = stat_sq(edges_between(g, a, b), a.count(), b.count());
        if (key > worst) {
            worst = key;
            PairStat ps{a, b, std::sqrt(key.approx())};
            cert.worst = ps;
        }
        if (key > lambda_sq) cert.pass = false;
    }
    return cert;
}

BiDenseResult bi_dense_check(const Graph& g, const Rational& q, const Rational& delta, CertMode mode,
                             uint64_t seed, uint64_t samples) {
    int n = g.vertex_count();
    BiDenseResult res;
    auto size_ok = [&](long sz) { return Rational(sz) >= delta * Rational(n); };

    if (mode == CertMode::exhaustive) {
        if (n > 14) throw BudgetError("bi_dense_check: exhaustive mode needs n <= 14");
        uint64_t total = 1;
        for (int i = 0; i < n; ++i) total *= 3;
        auto blocks = map_blocks<PairScan>(total, 1 << 14, [&](uint64_t lo, uint64_t hi) {
            PairScan s;
            for (uint64_t idx = lo; idx < hi; ++idx) {
                VertexSet a(n), b(n);
                decode_pair(idx, n, a, b);
                if (a.none() || b.none() || !size_ok(a.count()) || !size_ok(b.count())) continue;
                ++s.checked;
                if (!s.violated && density_pair(g, a, b) <= q) {
                    s.violated = true;
                    s.first_violation = idx;
                }
            }
            return s;
        });
        res.pass = true;
        for (const auto& s : blocks) {
            res.pairs_checked += s.checked;
            if (s.violated && res.pass) {
                res.pass = false;
                VertexSet a(n), b(n);
                decode_pair(s.first_violation, n, a, b);
                res.violation_density = density_pair(g, a, b);
                res.violation = {a, b};
            }
        }
        return res;
    }
    if (mode == CertMode::spectral) throw PreconditionError("bi_dense_check: spectral mode unsupported");

    Rng rng(Rng::derive(seed, 0xb1de));
    res.pass = true;
    for (uint64_t i = 0; i < samples; ++i) {
        VertexSet a(n), b(n);
        for (int v = 0; v < n; ++v) {
            switch (rng.below(3)) {
                case 1: a.set(v); break;
                case 2: b.set(v); break;
                default: break;
            }
        }
        if (a.none() || b.none() || !size_ok(a.count()) || !size_ok(b.count())) continue;
        ++res.pairs_checked;
        if (res.pass && density_pair(g, a, b) <= q) {
            res.pass = false;
            res.violation_density = density_pair(g, a, b);
            res.violation = {a, b};
        }
    }
    return res;
}

}  // namespace rf
