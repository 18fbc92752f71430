#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace rf {

// Fixed-universe dynamic bitset. All graph adjacency rows and vertex sets
// are instances of this; the universe size is part of the value and two
// bitsets interoperate only when their universes match.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("Bitset: negative universe");
    }

    static Bitset full(int universe) {
        Bitset b(universe);
        for (auto& w : b.w_) w = ~uint64_t{0};
        b.clear_tail();
        return b;
    }

    static Bitset of(int universe, std::initializer_list<int> bits) {
        Bitset b(universe);
        for (int i : bits) b.set(i);
        return b;
    }

    int universe() const { return n_; }

    bool test(int i) const {
        check(i);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    void set(int i) {
        check(i);
        w_[i >> 6] |= uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        check(i);
        w_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : w_) if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    int lowest() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    int highest() const {
        for (size_t i = w_.size(); i-- > 0;)
            if (w_[i]) return int(i * 64 + 63 - std::countl_zero(w_[i]));
        return -1;
    }

    // next set bit >= i, or -1
    int next(int i) const {
        if (i >= n_) return -1;
        if (i < 0) i = 0;
        size_t word = size_t(i) >> 6;
        uint64_t cur = w_[word] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (cur) return int(word * 64 + std::countr_zero(cur));
            if (++word >= w_.size()) return -1;
            cur = w_[word];
        }
    }

    Bitset operator&(const Bitset& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    Bitset operator|(const Bitset& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    // set difference
    Bitset operator-(const Bitset& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }

    Bitset& operator&=(const Bitset& o) { inplace(o, [](uint64_t& a, uint64_t b) { a &= b; }); return *this; }
    Bitset& operator|=(const Bitset& o) { inplace(o, [](uint64_t& a, uint64_t b) { a |= b; }); return *this; }
    Bitset& operator-=(const Bitset& o) { inplace(o, [](uint64_t& a, uint64_t b) { a &= ~b; }); return *this; }

    Bitset complement_in_universe() const {
        Bitset r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.clear_tail();
        return r;
    }

    int count_and(const Bitset& o) const {
        check_universe(o);
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    bool intersects(const Bitset& o) const {
        check_universe(o);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool subset_of(const Bitset& o) const {
        check_universe(o);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(size_t(count()));
        for (int i = lowest(); i >= 0; i = next(i + 1)) v.push_back(i);
        return v;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (int i = lowest(); i >= 0; i = next(i + 1)) fn(i);
    }

    // keeps the m lowest-indexed elements, drops the rest
    Bitset take_lowest(int m) const {
        Bitset r(n_);
        int kept = 0;
        for (int i = lowest(); i >= 0 && kept < m; i = next(i + 1), ++kept) r.set(i);
        return r;
    }

    uint64_t hash() const {
        uint64_t h = 1469598103934665603ull ^ uint64_t(n_);
        for (uint64_t w : w_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    template <typename Op>
    Bitset apply(const Bitset& o, Op op) const {
        check_universe(o);
        Bitset r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = op(w_[i], o.w_[i]);
        return r;
    }

    template <typename Op>
    void inplace(const Bitset& o, Op op) {
        check_universe(o);
        for (size_t i = 0; i < w_.size(); ++i) op(w_[i], o.w_[i]);
    }

    void check(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("Bitset index out of range");
    }

    void check_universe(const Bitset& o) const {
        if (n_ != o.n_) throw std::invalid_argument("Bitset universe mismatch");
    }

    void clear_tail() {
        if (n_ % 64 && !w_.empty()) w_.back() &= (~uint64_t{0}) >> (64 - n_ % 64);
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

// A vertex subset of a fixed graph. The universe size ties it to its host.
using VertexSet = Bitset;

}  // namespace rf
