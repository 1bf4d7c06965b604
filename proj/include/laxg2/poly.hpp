#pragma once

#include <vector>

#include "laxg2/errors.hpp"
#include "laxg2/rational.hpp"

namespace laxg2 {

// Dense polynomial over Q, p[i] = coefficient of z^i. The empty vector is
// the zero polynomial; nonzero polynomials keep a nonzero top coefficient
// after normalize.
using Poly = std::vector<Rat>;

inline void poly_normalize(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_degree(const Poly& p) { return int(p.size()) - 1; } // -1 for zero

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

inline Rat poly_eval(const Poly& p, const Rat& z) {
    Rat acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
    return acc;
}

// Taylor shift: returns q with q(w) = p(w + c).
inline Poly poly_shift(const Poly& p, const Rat& c) {
    // Horner in the shifted variable: repeatedly multiply by (w + c) and add.
    Poly q;
    for (std::size_t i = p.size(); i-- > 0;) {
        // q <- q * (w + c) + p[i]
        Poly r(q.size() + 1, Rat(0));
        for (std::size_t j = 0; j < q.size(); ++j) {
            r[j + 1] += q[j];
            r[j] += c * q[j];
        }
        r[0] += p[i];
        q = std::move(r);
    }
    return q;
}

// First nterms coefficients of 1/p as a power series; needs p(0) != 0.
inline Poly series_inverse(const Poly& p, std::size_t nterms) {
    if (p.empty() || p[0] == 0)
        throw InternalCheckFailure("series inversion needs a unit constant term");
    Poly s(nterms, Rat(0));
    if (nterms == 0) return s;
    s[0] = 1 / p[0];
    for (std::size_t k = 1; k < nterms; ++k) {
        Rat acc(0);
        for (std::size_t j = 1; j <= k && j < p.size(); ++j) acc += p[j] * s[k - j];
        s[k] = -acc / p[0];
    }
    return s;
}

// Exact division by the linear factor (z - r); requires p(r) == 0.
inline Poly poly_divide_linear(const Poly& p, const Rat& r) {
    if (p.empty()) return {};
    Poly q(p.size() - 1, Rat(0));
    Rat carry(0); // running value of the synthetic division
    for (std::size_t i = p.size(); i-- > 1;) {
        carry = p[i] + r * carry;
        q[i - 1] = carry;
    }
    if (p[0] + r * carry != 0)
        throw InternalCheckFailure("linear factor does not divide the polynomial");
    poly_normalize(q);
    return q;
}

} // namespace laxg2
