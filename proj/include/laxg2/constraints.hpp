#pragma once

#include <array>
#include <map>

#include "laxg2/g2.hpp"
#include "laxg2/linalg.hpp"

namespace laxg2 {

// Linear expression over the coefficient variables of a constraint system
// (dense, length = ncoeff). Auxiliary parameter columns are appended by the
// system itself and never appear in these expressions.
using LinExpr = RatVec;

// Homogeneous/affine linear system over a block of coefficient variables
// plus auxiliary witness parameters (the extraction scalars). Rows may be
// added after new auxiliaries; shorter rows are zero-padded on assembly.
class ConstraintSystem {
public:
    explicit ConstraintSystem(std::size_t ncoeff) : ncoeff_(ncoeff) {}

    std::size_t ncoeff() const { return ncoeff_; }
    std::size_t nvars() const { return ncoeff_ + naux_; }
    std::size_t nrows() const { return rows_.size(); }
    std::size_t naux() const { return naux_; }

    // Reserves k fresh auxiliary columns; returns the first index.
    std::size_t new_aux(std::size_t k) {
        std::size_t base = ncoeff_ + naux_;
        naux_ += k;
        return base;
    }

    // expr is over coefficient variables; aux_terms are (column, coefficient)
    // pairs on auxiliary columns.
    void add_row(const LinExpr& expr,
                 const std::vector<std::pair<std::size_t, Rat>>& aux_terms = {},
                 Rat rhs = Rat(0)) {
        RatVec row(nvars(), Rat(0));
        for (std::size_t j = 0; j < expr.size(); ++j) row[j] = expr[j];
        for (const auto& [col, c] : aux_terms) row[col] = c;
        rows_.push_back(std::move(row));
        rhs_.push_back(std::move(rhs));
    }

    RatMat matrix() const {
        RatMat m(rows_.size(), nvars());
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < rows_[i].size(); ++j) m(i, j) = rows_[i][j];
        return m;
    }

    const RatVec& rhs() const { return rhs_; }

    bool is_homogeneous() const {
        for (const auto& r : rhs_)
            if (r != 0) return false;
        return true;
    }

private:
    std::size_t ncoeff_;
    std::size_t naux_ = 0;
    std::vector<RatVec> rows_;
    RatVec rhs_;
};

// The 14 coordinate slots of one expansion coefficient, as linear
// expressions in the system's coefficient variables.
using CoeffExprs = std::array<LinExpr, kG2Coords>;

// Entry (i,j) of the matrix slot, as a linear expression (traceless
// coordinate layout of to_coords).
LinExpr matrix_entry_expr(const CoeffExprs& c, std::size_t i, std::size_t j);

// Scalar options for the local condition rows.
struct LocalConditionOptions {
    // When set, the two residue-orthogonality rows become the normalized
    // affine rows (right-hand side 1 instead of 0).
    bool affine_orthogonality = false;
    // Adds the extraction gauge row alpha1^t beta1 = 0 so the auxiliary
    // parameters are a function of the coefficients.
    bool gauge_rows = true;
};

// Bookkeeping for one point's auxiliary columns.
struct LocalAux {
    std::size_t mu = SIZE_MAX;      // double-pole scale
    std::size_t beta0 = SIZE_MAX;   // beta01, beta02 (2)
    std::size_t beta1 = SIZE_MAX;   // 3
    std::size_t beta2 = SIZE_MAX;   // 3
    std::size_t kappa = SIZE_MAX;   // kappa1, kappa2 (2)
};

// Appends the admissibility rows for one marked point to sys. exprs maps an
// expansion order to the 14 coefficient expressions of that order; only
// orders -2..1 receive conditions (present keys only):
//   order -2: vector slots vanish, matrix slot = mu * alpha1 alpha2^t
//   order -1: a1 = b01 alpha1, a2 = b02 alpha2,
//             A = alpha1 beta2^t - beta1 alpha2^t,
//             alpha1^t beta2 = 0 (or = 1), alpha2^t beta1 = 0 (or = 1)
//   order  0: alpha1^t a2 = 0, alpha2^t a1 = 0,
//             A alpha1 = k1 alpha1, -A^t alpha2 = k2 alpha2
//   order  1: alpha2^t A alpha1 = 0
LocalAux add_local_conditions(ConstraintSystem& sys,
                              const std::map<int, CoeffExprs>& exprs,
                              const Vec3& alpha1, const Vec3& alpha2,
                              const LocalConditionOptions& opts = {});

// Unit coefficient expressions for a plain jet variable block: order n maps
// to variables 14*(n - lo) .. 14*(n - lo) + 13.
std::map<int, CoeffExprs> jet_variable_exprs(int lo, int hi, std::size_t ncoeff);

} // namespace laxg2
