#include "laxg2/linalg.hpp"

namespace laxg2 {

namespace {

// Row-reduces m in place to reduced row echelon form.
// Returns the pivot column of each pivot row, in order.
std::vector<std::size_t> rref(RatMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = col; j < m.cols(); ++j)
                std::swap(m(row, j), m(sel, j));
        Rat inv(1 / m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rat f(m(i, col));
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank_of(RatMat m) {
    return rref(m).size();
}

std::vector<RatVec> kernel_basis(const RatMat& m) {
    RatMat r = m;
    std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<RatVec> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVec v(m.cols(), Rat(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<AffineSolution> solve_affine(RatMat m, RatVec rhs) {
    // Eliminate on the augmented matrix [m | rhs].
    RatMat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    std::vector<std::size_t> pivots = rref(aug);
    // Inconsistent iff a pivot lands in the rhs column.
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    AffineSolution sol;
    sol.particular.assign(m.cols(), Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        sol.particular[pivots[i]] = aug(i, m.cols());

    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVec v(m.cols(), Rat(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -aug(i, free_col);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

bool SpanReducer::insert(const RatVec& v) {
    Reduction red = reduce(v);
    std::size_t gen_index = n_inserted_++;
    if (red.in_span) return false;

    // Normalize the residual to a leading 1 and record its combination:
    // residual = v - sum coords_partial * rows, so the new row's combo is
    // (unit at gen_index - partial combos) scaled the same way.
    std::size_t pivot = 0;
    while (red.residual[pivot] == 0) ++pivot;
    Rat inv(1 / red.residual[pivot]);

    RatVec row(dim_);
    for (std::size_t j = 0; j < dim_; ++j) row[j] = red.residual[j] * inv;

    RatVec combo(n_inserted_, Rat(0));
    // reduce() returned the multipliers of stored rows it subtracted, in
    // coords (indexed by generator). Rebuild the row-level combination.
    for (std::size_t g = 0; g < red.coords.size(); ++g)
        combo[g] = -red.coords[g] * inv;
    combo[gen_index] = inv;

    // Back-substitute so stored rows stay fully reduced against each other.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rat f(rows_[i][pivot]);
        if (f == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) rows_[i][j] -= f * row[j];
        for (std::size_t g = 0; g < combo.size(); ++g) {
            if (combo[g] == 0) continue;
            if (combos_[i].size() <= g) combos_[i].resize(g + 1, Rat(0));
            combos_[i][g] -= f * combo[g];
        }
    }

    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    combos_.push_back(std::move(combo));
    return true;
}

SpanReducer::Reduction SpanReducer::reduce(const RatVec& v) const {
    Reduction out;
    out.residual = v;
    out.coords.assign(n_inserted_, Rat(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rat f(out.residual[pivots_[i]]);
        if (f == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j)
            out.residual[j] -= f * rows_[i][j];
        for (std::size_t g = 0; g < combos_[i].size(); ++g)
            if (combos_[i][g] != 0) out.coords[g] += f * combos_[i][g];
    }
    out.in_span = true;
    for (const auto& x : out.residual)
        if (x != 0) { out.in_span = false; break; }
    return out;
}

} // namespace laxg2
