#pragma once

#include <map>

#include "laxg2/g2.hpp"

namespace laxg2 {

// Truncated Laurent expansion at a marked point with coordinate-form
// coefficients. Coefficients live on the validity window [lo, hi]; a missing
// entry inside the window is an exact zero, orders outside the window are
// unknown. Admissibility contexts use the standard window [-2, T].
struct MatrixJet {
    int lo;
    int hi;
    std::map<int, G2Element> coeffs;

    explicit MatrixJet(int trunc = 3) : lo(-2), hi(trunc) {}
    MatrixJet(int lo_, int hi_) : lo(lo_), hi(hi_) {}

    int trunc() const { return hi; }

    const G2Element& at(int order) const;
    void set(int order, G2Element value);

    bool is_zero() const;

    friend MatrixJet operator+(const MatrixJet& x, const MatrixJet& y);
    friend MatrixJet operator-(const MatrixJet& x, const MatrixJet& y);
    friend MatrixJet operator*(const Rat& s, const MatrixJet& x);
    friend bool operator==(const MatrixJet& x, const MatrixJet& y);
};

// Jet with raw 7x7 coefficients; products of embedded elements leave the
// coordinate model, so this is the product's value type.
struct Jet7 {
    int lo;
    int hi;
    std::map<int, Mat<QSqrt2>> coeffs;

    Jet7(int lo_, int hi_) : lo(lo_), hi(hi_) {}
    Mat<QSqrt2> at(int order) const;
    void set(int order, Mat<QSqrt2> value);
};

// Scalar-valued jet (traces of matrix jets).
struct ScalarJet {
    int lo;
    int hi;
    std::map<int, Rat> coeffs;

    ScalarJet(int lo_, int hi_) : lo(lo_), hi(hi_) {}
    Rat at(int order) const;
    void set(int order, Rat value);
    bool is_zero() const;
};

// Coefficient-wise product of embeddings; order-n output coefficient is
// sum_{i+j=n} embed(x_i) embed(y_j). Output window [x.lo+y.lo, min(hi)+lo'],
// pessimistic in the standard [-2,T] case: [-4, min(Tx,Ty)-2].
// Throws EmptyWindow when nothing survives narrowing.
Jet7 jet_product(const MatrixJet& x, const MatrixJet& y);

// Same convolution through the closed-form bracket; coefficients stay in
// coordinate form.
MatrixJet jet_commutator(const MatrixJet& x, const MatrixJet& y);

// d/dz in the local coordinate; window shifts down by one.
MatrixJet jet_derivative(const MatrixJet& x);

// Order-wise trace. The sqrt2 parts must cancel (they always do for products
// of embedded elements); a surviving sqrt2 part trips InternalCheckFailure.
ScalarJet trace_jet(const Jet7& x);

// Order-wise trace form of a coordinate-jet convolution: the scalar jet with
// coefficient sum_{i+j=n} trace_form(x_i, y_j). Equals trace_jet(jet_product)
// but never leaves Q.
ScalarJet trace_form_jet(const MatrixJet& x, const MatrixJet& y);

// Coefficient at order -1. Throws OrderOutsideWindow when -1 is not covered.
Rat residue(const ScalarJet& s);

} // namespace laxg2
