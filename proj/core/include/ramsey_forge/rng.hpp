#pragma once

#include <cstdint>
#include <vector>

#include "ramsey_forge/rational.hpp"

namespace rf {

// splitmix64; used both as a generator and to derive independent streams
// from a user seed so that retry r of operation x is a pure function of
// (seed, x, r).
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bias-free by rejection
    uint64_t below(uint64_t bound) {
        if (bound == 0) return 0;
        uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound + 1) % bound;
        uint64_t r;
        do {
            r = next();
        } while (r > limit);
        return r % bound;
    }

    // true with probability floor(p * 2^64) / 2^64
    bool bernoulli(const Rational& p) {
        mpz_class threshold = (p * Rational::pow2(64)).floor();
        if (threshold <= 0) return false;
        mpz_class r(0);
        uint64_t raw = next();
        mpz_import(r.get_mpz_t(), 1, 1, sizeof(raw), 0, 0, &raw);
        return r < threshold;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[size_t(below(i))]);
    }

    static uint64_t derive(uint64_t seed, uint64_t stream) {
        Rng r(seed ^ (0x6a09e667f3bcc909ull + stream * 0x9e3779b97f4a7c15ull));
        return r.next();
    }

private:
    uint64_t state_;
};

}  // namespace rf
