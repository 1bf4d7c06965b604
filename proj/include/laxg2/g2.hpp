#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "laxg2/linalg.hpp"
#include "laxg2/rational.hpp"

namespace laxg2 {

using Vec3 = std::array<Rat, 3>;

inline Vec3 vec3(Rat x, Rat y, Rat z) { return {std::move(x), std::move(y), std::move(z)}; }
inline Vec3 vec3_zero() { return {Rat(0), Rat(0), Rat(0)}; }

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {Rat(a[0] + b[0]), Rat(a[1] + b[1]), Rat(a[2] + b[2])};
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {Rat(a[0] - b[0]), Rat(a[1] - b[1]), Rat(a[2] - b[2])};
}
inline Vec3 operator-(const Vec3& a) { return {Rat(-a[0]), Rat(-a[1]), Rat(-a[2])}; }
inline Vec3 operator*(const Rat& s, const Vec3& a) {
    return {Rat(s * a[0]), Rat(s * a[1]), Rat(s * a[2])};
}
inline bool is_zero(const Vec3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

inline Rat dot(const Vec3& a, const Vec3& b) {
    return Rat(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]);
}

// Skew matrix attached to a vector:
//   [[  0,  x3, -x2],
//    [-x3,   0,  x1],
//    [ x2, -x1,   0]]
RatMat skew(const Vec3& x);

// Vector product matching skew: cross(x, y) = skew(x) * y. Note this is the
// NEGATIVE of the right-hand-rule product; the sign is forced by the skew
// layout above, which the whole matrix model is built on.
Vec3 cross(const Vec3& x, const Vec3& y);

// mat * v and mat^T * v for 3x3 matrices.
Vec3 mat_vec(const RatMat& m, const Vec3& v);
Vec3 mat_tvec(const RatMat& m, const Vec3& v);

// Rank-1 product x * y^T.
RatMat outer(const Vec3& x, const Vec3& y);

// Coordinate form of an algebra element: two 3-vectors and a traceless 3x3
// matrix. 14 free coordinates total; the canonical value type everywhere.
struct G2Element {
    Vec3 a1;
    Vec3 a2;
    RatMat A; // 3x3, trace zero

    G2Element() : a1(vec3_zero()), a2(vec3_zero()), A(3, 3) {}
    G2Element(Vec3 a1_, Vec3 a2_, RatMat A_);

    bool is_zero() const { return laxg2::is_zero(a1) && laxg2::is_zero(a2) && A.is_zero(); }

    friend G2Element operator+(const G2Element& x, const G2Element& y);
    friend G2Element operator-(const G2Element& x, const G2Element& y);
    friend G2Element operator-(const G2Element& x);
    friend G2Element operator*(const Rat& s, const G2Element& x);
    friend bool operator==(const G2Element& x, const G2Element& y);
    friend bool operator!=(const G2Element& x, const G2Element& y) { return !(x == y); }
};

// Flat coordinates: [a1 (3), a2 (3), A (8 traceless coords)].
// The traceless coordinates are c0..c7 with
//   A = [[c0, c2, c3], [c4, c1-c0, c5], [c6, c7, -c1]],
// i.e. basis E11-E22, E22-E33 plus the six off-diagonal units.
constexpr std::size_t kG2Coords = 14;
std::array<Rat, kG2Coords> to_coords(const G2Element& x);
G2Element from_coords(const std::array<Rat, kG2Coords>& c);

// 7x7 block matrix of an element:
//   [[0,        -sqrt2*a2^t, -sqrt2*a1^t],
//    [sqrt2*a1,  A,           skew(a2)  ],
//    [sqrt2*a2,  skew(a1),   -A^t       ]]
Mat<QSqrt2> embed(const G2Element& el);

// Inverse of embed with full block-consistency validation.
// Throws NotInG2 naming the first failing block.
G2Element project(const Mat<QSqrt2>& m);

// Commutator in closed coordinate form (no sqrt2 anywhere):
//   a1'' = A b1 - B a1 + 2 cross(a2, b2)
//   a2'' = -A^t b2 + B^t a2 + 2 cross(a1, b1)
//   A''  = AB - BA - 3 a1 b2^t + 3 b1 a2^t - (b1^t a2) E + (b2^t a1) E
G2Element bracket(const G2Element& x, const G2Element& y);

// trace(embed(x) * embed(y)), computed in coordinates:
//   2 tr(A B) - 6 a2^t b1 - 6 a1^t b2.
// The sqrt2 parts cancel identically; the embedding-route evaluation is kept
// as a test oracle.
Rat trace_form(const G2Element& x, const G2Element& y);

// The 14 coordinate basis elements, in to_coords order.
std::vector<G2Element> g2_basis();

} // namespace laxg2
