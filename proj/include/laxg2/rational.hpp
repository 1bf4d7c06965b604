#pragma once

#include <gmpxx.h>

#include <string>

#include "laxg2/errors.hpp"

namespace laxg2 {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) after canonicalize(); every entry point that builds
// one from raw parts goes through the helpers below.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw ConfigError("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", or "p/q". Used by every JSON surface.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ConfigError("empty rational literal");
    try {
        Rat r(s);
        if (r.get_den() == 0) throw ConfigError("zero denominator in '" + s + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ConfigError("bad rational literal '" + s + "'");
    }
}

// Serializes as "p/q", or "p" when the denominator is 1.
inline std::string rat_str(const Rat& r) {
    return r.get_str();
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Floor as a plain long; all degree bookkeeping fits comfortably.
inline long rat_floor(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q.get_si();
}

inline long rat_ceil(const Rat& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q.get_si();
}

// Element of the quadratic extension by sqrt(2): value = r + s*sqrt(2).
// Exists solely so the 7x7 embedding is exact; the constraint pipeline
// never touches it.
struct QSqrt2 {
    Rat r;
    Rat s;

    QSqrt2() : r(0), s(0) {}
    QSqrt2(Rat rat_part, Rat sqrt2_part) : r(std::move(rat_part)), s(std::move(sqrt2_part)) {}
    explicit QSqrt2(const Rat& rat_part) : r(rat_part), s(0) {}
    explicit QSqrt2(long v) : r(v), s(0) {}

    static QSqrt2 sqrt2() { return QSqrt2(Rat(0), Rat(1)); }

    bool is_zero() const { return r == 0 && s == 0; }
    bool is_rational() const { return s == 0; }

    // Field automorphism sqrt(2) -> -sqrt(2).
    QSqrt2 conj() const { return QSqrt2(r, -s); }

    friend QSqrt2 operator+(const QSqrt2& a, const QSqrt2& b) {
        return QSqrt2(a.r + b.r, a.s + b.s);
    }
    friend QSqrt2 operator-(const QSqrt2& a, const QSqrt2& b) {
        return QSqrt2(a.r - b.r, a.s - b.s);
    }
    friend QSqrt2 operator-(const QSqrt2& a) { return QSqrt2(-a.r, -a.s); }
    friend QSqrt2 operator*(const QSqrt2& a, const QSqrt2& b) {
        // (r + s√2)(r' + s'√2) = rr' + 2ss' + (rs' + sr')√2
        return QSqrt2(Rat(a.r * b.r + 2 * a.s * b.s), Rat(a.r * b.s + a.s * b.r));
    }
    QSqrt2 inverse() const {
        // norm = r^2 - 2 s^2, nonzero whenever the value is (sqrt(2) is irrational)
        Rat norm(r * r - 2 * s * s);
        if (norm == 0) throw InternalCheckFailure("inverse of zero in Q(sqrt2)");
        return QSqrt2(Rat(r / norm), Rat(-s / norm));
    }
    friend QSqrt2 operator/(const QSqrt2& a, const QSqrt2& b) { return a * b.inverse(); }
    friend bool operator==(const QSqrt2& a, const QSqrt2& b) {
        return a.r == b.r && a.s == b.s;
    }
    friend bool operator!=(const QSqrt2& a, const QSqrt2& b) { return !(a == b); }

    QSqrt2& operator+=(const QSqrt2& b) { r += b.r; s += b.s; return *this; }
    QSqrt2& operator-=(const QSqrt2& b) { r -= b.r; s -= b.s; return *this; }
    QSqrt2& operator*=(const QSqrt2& b) { *this = *this * b; return *this; }
};

} // namespace laxg2
