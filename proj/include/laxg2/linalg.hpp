#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "laxg2/errors.hpp"
#include "laxg2/rational.hpp"

namespace laxg2 {

// Dense matrix with immutable dimensions. T is Rat or QSqrt2.
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, T(0)) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] + b.e_[k];
        return c;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = a.e_[k] - b.e_[k];
        return c;
    }
    friend Mat operator-(const Mat& a) {
        Mat c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = -a.e_[k];
        return c;
    }
    friend Mat operator*(const T& s, const Mat& a) {
        Mat c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) c.e_[k] = s * a.e_[k];
        return c;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    T trace() const {
        T s(0);
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) s += (*this)(i, i);
        return s;
    }

    bool is_zero() const {
        for (const auto& v : e_)
            if (!(v == T(0))) return false;
        return true;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> e_;
};

using RatMat = Mat<Rat>;
using RatVec = std::vector<Rat>;

// Exact Gaussian elimination over Q; returns the rank.
std::size_t rank_of(RatMat m);

// Basis of the right kernel; exactly cols - rank vectors, each satisfying
// m * v = 0 identically.
std::vector<RatVec> kernel_basis(const RatMat& m);

struct AffineSolution {
    RatVec particular;
    std::vector<RatVec> kernel;
};

// Exact solve of m * x = rhs. nullopt when rhs is outside the column space;
// otherwise full solution set = particular + span(kernel).
std::optional<AffineSolution> solve_affine(RatMat m, RatVec rhs);

// Incremental row-space tracker for fast repeated membership and coordinate
// queries against a fixed generating set. Vectors are reduced against the
// stored echelon rows; each stored row remembers its expression in the
// inserted generators so coordinates come out of the same reduction.
class SpanReducer {
public:
    explicit SpanReducer(std::size_t dim) : dim_(dim) {}

    // Returns true when v was independent of the current span (and was added).
    bool insert(const RatVec& v);

    // Reduces v; returns the residual and, when the residual is zero, the
    // coordinates of v in the inserted generators (independent ones only;
    // dependent generators received no echelon row).
    struct Reduction {
        RatVec residual;
        bool in_span;
        RatVec coords; // length = number of inserted generators, valid when in_span
    };
    Reduction reduce(const RatVec& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t inserted() const { return n_inserted_; }

private:
    std::size_t dim_;
    std::size_t n_inserted_ = 0;
    std::vector<RatVec> rows_;    // echelon rows, each with leading 1
    std::vector<std::size_t> pivots_;
    std::vector<RatVec> combos_;  // rows_[i] = sum combos_[i][g] * generator g
};

inline Rat dot(const RatVec& a, const RatVec& b) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace laxg2
