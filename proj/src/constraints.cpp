#include "laxg2/constraints.hpp"

#include "laxg2/errors.hpp"

namespace laxg2 {

namespace {

LinExpr zero_expr(std::size_t n) { return LinExpr(n, Rat(0)); }

LinExpr scaled(const LinExpr& e, const Rat& c) {
    LinExpr out(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) out[i] = c * e[i];
    return out;
}

void add_to(LinExpr& dst, const LinExpr& src, const Rat& c) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] += c * src[i];
}

} // namespace

LinExpr matrix_entry_expr(const CoeffExprs& c, std::size_t i, std::size_t j) {
    // A = [[c6, c8, c9], [c10, c7 - c6, c11], [c12, c13, -c7]]
    if (i == 0 && j == 0) return c[6];
    if (i == 0 && j == 1) return c[8];
    if (i == 0 && j == 2) return c[9];
    if (i == 1 && j == 0) return c[10];
    if (i == 1 && j == 1) {
        LinExpr e = c[7];
        add_to(e, c[6], Rat(-1));
        return e;
    }
    if (i == 1 && j == 2) return c[11];
    if (i == 2 && j == 0) return c[12];
    if (i == 2 && j == 1) return c[13];
    if (i == 2 && j == 2) return scaled(c[7], Rat(-1));
    throw InternalCheckFailure("matrix_entry_expr: index out of range");
}

LocalAux add_local_conditions(ConstraintSystem& sys,
                              const std::map<int, CoeffExprs>& exprs,
                              const Vec3& alpha1, const Vec3& alpha2,
                              const LocalConditionOptions& opts) {
    LocalAux aux;
    const std::size_t n = sys.ncoeff();
    const Rat orth_rhs = opts.affine_orthogonality ? Rat(1) : Rat(0);

    if (auto it = exprs.find(-2); it != exprs.end()) {
        const CoeffExprs& c = it->second;
        aux.mu = sys.new_aux(1);
        // Vector slots vanish outright.
        for (std::size_t k = 0; k < 6; ++k) sys.add_row(c[k]);
        // Matrix slot is a scalar multiple of alpha1 alpha2^t.
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                LinExpr e = matrix_entry_expr(c, i, j);
                sys.add_row(e, {{aux.mu, -alpha1[i] * alpha2[j]}});
            }
    }

    if (auto it = exprs.find(-1); it != exprs.end()) {
        const CoeffExprs& c = it->second;
        aux.beta0 = sys.new_aux(2);
        aux.beta1 = sys.new_aux(3);
        aux.beta2 = sys.new_aux(3);
        for (std::size_t i = 0; i < 3; ++i) {
            sys.add_row(c[i], {{aux.beta0 + 0, -alpha1[i]}});
            sys.add_row(c[3 + i], {{aux.beta0 + 1, -alpha2[i]}});
        }
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                LinExpr e = matrix_entry_expr(c, i, j);
                sys.add_row(e, {{aux.beta2 + j, -alpha1[i]}, {aux.beta1 + i, alpha2[j]}});
            }
        // Orthogonality of the extraction vectors to their companion lines.
        sys.add_row(zero_expr(n),
                    {{aux.beta2 + 0, alpha1[0]}, {aux.beta2 + 1, alpha1[1]}, {aux.beta2 + 2, alpha1[2]}},
                    orth_rhs);
        sys.add_row(zero_expr(n),
                    {{aux.beta1 + 0, alpha2[0]}, {aux.beta1 + 1, alpha2[1]}, {aux.beta1 + 2, alpha2[2]}},
                    orth_rhs);
        if (opts.gauge_rows) {
            // Pins the one-parameter slide (beta1, beta2) -> (beta1 + t alpha1,
            // beta2 + t alpha2) that the shape rows cannot see.
            sys.add_row(zero_expr(n),
                        {{aux.beta1 + 0, alpha1[0]}, {aux.beta1 + 1, alpha1[1]}, {aux.beta1 + 2, alpha1[2]}});
        }
    }

    if (auto it = exprs.find(0); it != exprs.end()) {
        const CoeffExprs& c = it->second;
        aux.kappa = sys.new_aux(2);
        LinExpr r1 = zero_expr(n), r2 = zero_expr(n);
        for (std::size_t i = 0; i < 3; ++i) {
            add_to(r1, c[3 + i], alpha1[i]); // alpha1^t a2
            add_to(r2, c[i], alpha2[i]);     // alpha2^t a1
        }
        sys.add_row(r1);
        sys.add_row(r2);
        for (std::size_t i = 0; i < 3; ++i) {
            LinExpr row = zero_expr(n);
            for (std::size_t j = 0; j < 3; ++j)
                add_to(row, matrix_entry_expr(c, i, j), alpha1[j]); // (A alpha1)_i
            sys.add_row(row, {{aux.kappa + 0, -alpha1[i]}});
        }
        for (std::size_t i = 0; i < 3; ++i) {
            LinExpr row = zero_expr(n);
            for (std::size_t j = 0; j < 3; ++j)
                add_to(row, matrix_entry_expr(c, j, i), alpha2[j]); // (A^t alpha2)_i
            sys.add_row(row, {{aux.kappa + 1, alpha2[i]}});
        }
    }

    if (auto it = exprs.find(1); it != exprs.end()) {
        const CoeffExprs& c = it->second;
        LinExpr row = zero_expr(n);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                add_to(row, matrix_entry_expr(c, i, j), alpha2[i] * alpha1[j]);
        sys.add_row(row);
    }

    return aux;
}

std::map<int, CoeffExprs> jet_variable_exprs(int lo, int hi, std::size_t ncoeff) {
    std::map<int, CoeffExprs> exprs;
    for (int o = lo; o <= hi; ++o) {
        CoeffExprs c;
        for (std::size_t k = 0; k < kG2Coords; ++k) {
            c[k] = LinExpr(ncoeff, Rat(0));
            std::size_t idx = kG2Coords * std::size_t(o - lo) + k;
            if (idx >= ncoeff)
                throw InternalCheckFailure("jet_variable_exprs: block exceeds variable count");
            c[k][idx] = 1;
        }
        exprs.emplace(o, std::move(c));
    }
    return exprs;
}

} // namespace laxg2
