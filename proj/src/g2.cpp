#include "laxg2/g2.hpp"

#include <utility>

namespace laxg2 {

RatMat skew(const Vec3& x) {
    RatMat m(3, 3);
    m(0, 1) = x[2];
    m(0, 2) = -x[1];
    m(1, 0) = -x[2];
    m(1, 2) = x[0];
    m(2, 0) = x[1];
    m(2, 1) = -x[0];
    return m;
}

Vec3 cross(const Vec3& x, const Vec3& y) {
    return {Rat(x[2] * y[1] - x[1] * y[2]),
            Rat(x[0] * y[2] - x[2] * y[0]),
            Rat(x[1] * y[0] - x[0] * y[1])};
}

Vec3 mat_vec(const RatMat& m, const Vec3& v) {
    Vec3 out = vec3_zero();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) out[i] += m(i, j) * v[j];
    return out;
}

Vec3 mat_tvec(const RatMat& m, const Vec3& v) {
    Vec3 out = vec3_zero();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) out[i] += m(j, i) * v[j];
    return out;
}

RatMat outer(const Vec3& x, const Vec3& y) {
    RatMat m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = x[i] * y[j];
    return m;
}

G2Element::G2Element(Vec3 a1_, Vec3 a2_, RatMat A_)
    : a1(std::move(a1_)), a2(std::move(a2_)), A(std::move(A_)) {
    if (A.rows() != 3 || A.cols() != 3)
        throw InternalCheckFailure("matrix slot must be 3x3");
    if (A.trace() != 0)
        throw InternalCheckFailure("matrix slot must be traceless");
}

G2Element operator+(const G2Element& x, const G2Element& y) {
    return G2Element(x.a1 + y.a1, x.a2 + y.a2, x.A + y.A);
}
G2Element operator-(const G2Element& x, const G2Element& y) {
    return G2Element(x.a1 - y.a1, x.a2 - y.a2, x.A - y.A);
}
G2Element operator-(const G2Element& x) {
    return G2Element(-x.a1, -x.a2, -x.A);
}
G2Element operator*(const Rat& s, const G2Element& x) {
    return G2Element(s * x.a1, s * x.a2, s * x.A);
}
bool operator==(const G2Element& x, const G2Element& y) {
    return x.a1 == y.a1 && x.a2 == y.a2 && x.A == y.A;
}

std::array<Rat, kG2Coords> to_coords(const G2Element& x) {
    std::array<Rat, kG2Coords> c;
    for (std::size_t i = 0; i < 3; ++i) c[i] = x.a1[i];
    for (std::size_t i = 0; i < 3; ++i) c[3 + i] = x.a2[i];
    c[6] = x.A(0, 0);
    c[7] = -x.A(2, 2);
    c[8] = x.A(0, 1);
    c[9] = x.A(0, 2);
    c[10] = x.A(1, 0);
    c[11] = x.A(1, 2);
    c[12] = x.A(2, 0);
    c[13] = x.A(2, 1);
    return c;
}

G2Element from_coords(const std::array<Rat, kG2Coords>& c) {
    RatMat A(3, 3);
    A(0, 0) = c[6];
    A(0, 1) = c[8];
    A(0, 2) = c[9];
    A(1, 0) = c[10];
    A(1, 1) = c[7] - c[6];
    A(1, 2) = c[11];
    A(2, 0) = c[12];
    A(2, 1) = c[13];
    A(2, 2) = -c[7];
    return G2Element({c[0], c[1], c[2]}, {c[3], c[4], c[5]}, std::move(A));
}

namespace {

void put_block(Mat<QSqrt2>& m, std::size_t r0, std::size_t c0, const RatMat& b,
               const QSqrt2& factor = QSqrt2(1)) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(r0 + i, c0 + j) = factor * QSqrt2(b(i, j));
}

} // namespace

Mat<QSqrt2> embed(const G2Element& el) {
    Mat<QSqrt2> m(7, 7);
    const QSqrt2 s2 = QSqrt2::sqrt2();
    for (std::size_t i = 0; i < 3; ++i) {
        m(0, 1 + i) = -(s2 * QSqrt2(el.a2[i]));
        m(0, 4 + i) = -(s2 * QSqrt2(el.a1[i]));
        m(1 + i, 0) = s2 * QSqrt2(el.a1[i]);
        m(4 + i, 0) = s2 * QSqrt2(el.a2[i]);
    }
    put_block(m, 1, 1, el.A);
    put_block(m, 1, 4, skew(el.a2));
    put_block(m, 4, 1, skew(el.a1));
    put_block(m, 4, 4, -el.A.transpose());
    return m;
}

G2Element project(const Mat<QSqrt2>& m) {
    if (m.rows() != 7 || m.cols() != 7)
        throw NotInG2("matrix is not 7x7");
    if (!m(0, 0).is_zero()) throw NotInG2("corner entry must be 0");

    const QSqrt2 s2 = QSqrt2::sqrt2();
    Vec3 a1 = vec3_zero(), a2 = vec3_zero();
    for (std::size_t i = 0; i < 3; ++i) {
        QSqrt2 v1 = m(1 + i, 0) / s2;
        QSqrt2 v2 = m(4 + i, 0) / s2;
        if (!v1.is_rational() || !v2.is_rational())
            throw NotInG2("first column is not sqrt2 times a rational vector");
        a1[i] = v1.r;
        a2[i] = v2.r;
    }
    for (std::size_t i = 0; i < 3; ++i) {
        if (m(0, 1 + i) != -(s2 * QSqrt2(a2[i])))
            throw NotInG2("first row / first column mismatch (a2 block)");
        if (m(0, 4 + i) != -(s2 * QSqrt2(a1[i])))
            throw NotInG2("first row / first column mismatch (a1 block)");
    }

    RatMat A(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (!m(1 + i, 1 + j).is_rational())
                throw NotInG2("matrix block has a sqrt2 part");
            A(i, j) = m(1 + i, 1 + j).r;
        }
    if (A.trace() != 0) throw NotInG2("matrix block is not traceless");

    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (m(4 + i, 4 + j) != QSqrt2(Rat(-A(j, i))))
                throw NotInG2("lower-right block is not minus the transpose");
        }

    RatMat sk2 = skew(a2), sk1 = skew(a1);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (m(1 + i, 4 + j) != QSqrt2(sk2(i, j)))
                throw NotInG2("upper-right block does not match skew(a2)");
            if (m(4 + i, 1 + j) != QSqrt2(sk1(i, j)))
                throw NotInG2("lower-left block does not match skew(a1)");
        }

    return G2Element(std::move(a1), std::move(a2), std::move(A));
}

G2Element bracket(const G2Element& x, const G2Element& y) {
    const RatMat& A = x.A;
    const RatMat& B = y.A;
    Vec3 c1 = mat_vec(A, y.a1) - mat_vec(B, x.a1) + Rat(2) * cross(x.a2, y.a2);
    Vec3 c2 = (-mat_tvec(A, y.a2)) + mat_tvec(B, x.a2) + Rat(2) * cross(x.a1, y.a1);
    RatMat C = A * B - B * A - Rat(3) * outer(x.a1, y.a2) + Rat(3) * outer(y.a1, x.a2);
    Rat d(dot(y.a1, x.a2));
    Rat e(dot(y.a2, x.a1));
    for (std::size_t i = 0; i < 3; ++i) C(i, i) += e - d;
    return G2Element(std::move(c1), std::move(c2), std::move(C));
}

Rat trace_form(const G2Element& x, const G2Element& y) {
    Rat t((x.A * y.A).trace());
    return Rat(2 * t - 6 * dot(x.a2, y.a1) - 6 * dot(x.a1, y.a2));
}

std::vector<G2Element> g2_basis() {
    std::vector<G2Element> basis;
    basis.reserve(kG2Coords);
    for (std::size_t k = 0; k < kG2Coords; ++k) {
        std::array<Rat, kG2Coords> c;
        c.fill(Rat(0));
        c[k] = 1;
        basis.push_back(from_coords(c));
    }
    return basis;
}

} // namespace laxg2
