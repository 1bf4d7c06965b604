#include "laxg2/jets.hpp"

namespace laxg2 {

namespace {
const G2Element kZeroElement{};

template <typename JetT>
void check_window(const JetT& j, int order) {
    if (order < j.lo || order > j.hi) throw OrderOutsideWindow(order);
}
} // namespace

const G2Element& MatrixJet::at(int order) const {
    check_window(*this, order);
    auto it = coeffs.find(order);
    return it == coeffs.end() ? kZeroElement : it->second;
}

void MatrixJet::set(int order, G2Element value) {
    check_window(*this, order);
    if (value.is_zero())
        coeffs.erase(order);
    else
        coeffs[order] = std::move(value);
}

bool MatrixJet::is_zero() const {
    for (const auto& [n, c] : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

MatrixJet operator+(const MatrixJet& x, const MatrixJet& y) {
    MatrixJet out(std::max(x.lo, y.lo), std::min(x.hi, y.hi));
    if (out.lo > out.hi) throw EmptyWindow();
    for (int n = out.lo; n <= out.hi; ++n) out.set(n, x.at(n) + y.at(n));
    return out;
}

MatrixJet operator-(const MatrixJet& x, const MatrixJet& y) {
    MatrixJet out(std::max(x.lo, y.lo), std::min(x.hi, y.hi));
    if (out.lo > out.hi) throw EmptyWindow();
    for (int n = out.lo; n <= out.hi; ++n) out.set(n, x.at(n) - y.at(n));
    return out;
}

MatrixJet operator*(const Rat& s, const MatrixJet& x) {
    MatrixJet out(x.lo, x.hi);
    for (const auto& [n, c] : x.coeffs) out.set(n, s * c);
    return out;
}

bool operator==(const MatrixJet& x, const MatrixJet& y) {
    if (x.lo != y.lo || x.hi != y.hi) return false;
    for (int n = x.lo; n <= x.hi; ++n)
        if (!(x.at(n) == y.at(n))) return false;
    return true;
}

Mat<QSqrt2> Jet7::at(int order) const {
    check_window(*this, order);
    auto it = coeffs.find(order);
    return it == coeffs.end() ? Mat<QSqrt2>(7, 7) : it->second;
}

void Jet7::set(int order, Mat<QSqrt2> value) {
    check_window(*this, order);
    coeffs[order] = std::move(value);
}

Rat ScalarJet::at(int order) const {
    check_window(*this, order);
    auto it = coeffs.find(order);
    return it == coeffs.end() ? Rat(0) : it->second;
}

void ScalarJet::set(int order, Rat value) {
    check_window(*this, order);
    if (value == 0)
        coeffs.erase(order);
    else
        coeffs[order] = std::move(value);
}

bool ScalarJet::is_zero() const {
    for (const auto& [n, c] : coeffs)
        if (c != 0) return false;
    return true;
}

Jet7 jet_product(const MatrixJet& x, const MatrixJet& y) {
    Jet7 out(x.lo + y.lo, std::min(x.hi + y.lo, y.hi + x.lo));
    if (out.lo > out.hi) throw EmptyWindow();
    for (int n = out.lo; n <= out.hi; ++n) {
        Mat<QSqrt2> acc(7, 7);
        for (const auto& [i, xi] : x.coeffs) {
            int j = n - i;
            if (j < y.lo || j > y.hi) continue;
            auto it = y.coeffs.find(j);
            if (it == y.coeffs.end()) continue;
            acc = acc + embed(xi) * embed(it->second);
        }
        out.set(n, std::move(acc));
    }
    return out;
}

MatrixJet jet_commutator(const MatrixJet& x, const MatrixJet& y) {
    MatrixJet out(x.lo + y.lo, std::min(x.hi + y.lo, y.hi + x.lo));
    if (out.lo > out.hi) throw EmptyWindow();
    for (int n = out.lo; n <= out.hi; ++n) {
        G2Element acc;
        for (const auto& [i, xi] : x.coeffs) {
            int j = n - i;
            if (j < y.lo || j > y.hi) continue;
            auto it = y.coeffs.find(j);
            if (it == y.coeffs.end()) continue;
            acc = acc + bracket(xi, it->second);
        }
        out.set(n, std::move(acc));
    }
    return out;
}

MatrixJet jet_derivative(const MatrixJet& x) {
    MatrixJet out(x.lo - 1, x.hi - 1);
    for (const auto& [n, c] : x.coeffs) {
        if (n == 0) continue;
        out.set(n - 1, Rat(n) * c);
    }
    return out;
}

ScalarJet trace_jet(const Jet7& x) {
    ScalarJet out(x.lo, x.hi);
    for (const auto& [n, c] : x.coeffs) {
        QSqrt2 t = c.trace();
        if (t.s != 0)
            throw InternalCheckFailure("sqrt2 part survived a trace");
        out.set(n, t.r);
    }
    return out;
}

ScalarJet trace_form_jet(const MatrixJet& x, const MatrixJet& y) {
    ScalarJet out(x.lo + y.lo, std::min(x.hi + y.lo, y.hi + x.lo));
    if (out.lo > out.hi) throw EmptyWindow();
    for (int n = out.lo; n <= out.hi; ++n) {
        Rat acc(0);
        for (const auto& [i, xi] : x.coeffs) {
            int j = n - i;
            if (j < y.lo || j > y.hi) continue;
            auto it = y.coeffs.find(j);
            if (it == y.coeffs.end()) continue;
            acc += trace_form(xi, it->second);
        }
        out.set(n, std::move(acc));
    }
    return out;
}

Rat residue(const ScalarJet& s) {
    return s.at(-1);
}

} // namespace laxg2
