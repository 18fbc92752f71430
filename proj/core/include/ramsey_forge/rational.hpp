#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ramsey_forge/errors.hpp"

namespace rf {

// Exact rational arithmetic for every density, threshold, and size floor.
// Certificate checks never round: comparisons happen on the canonical
// GMP representation, which is cross-multiplication underneath.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long value) : v_(value) {}  // NOLINT: implicit by design
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw PreconditionError("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw PreconditionError("Rational: zero denominator");
        v_.canonicalize();
    }

    // accepts "a/b" or "a"
    static Rational parse(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
        if (v.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
        v.canonicalize();
        return Rational(v);
    }

    static Rational pow2(long e) {  // 2^e, e may be negative
        mpz_class p = 1;
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
        return e >= 0 ? Rational(p, 1) : Rational(mpz_class(1), p);
    }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.v_ == 0) throw PreconditionError("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational pow(unsigned e) const {
        Rational r(1);
        Rational base = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= base;
            base *= base;
        }
        return r;
    }

    // floor(*this), as a bignum
    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    mpz_class ceil() const {
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    // ceil(*this * m) clamped into [0, m]; the Definition 3.1 set-size rule
    long ceil_times(long m) const {
        Rational x = *this * Rational(m);
        mpz_class c = x.ceil();
        if (c < 0) return 0;
        if (c > m) return m;
        return c.get_si();
    }

    long floor_times(long m) const {
        Rational x = *this * Rational(m);
        mpz_class f = x.floor();
        if (f < 0) return 0;
        if (f > m) return m;
        return f.get_si();
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    double approx() const { return v_.get_d(); }

    static Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
    static Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

private:
    mpq_class v_;
};

}  // namespace rf
