#pragma once

// Dense exact linear algebra over GF(q): RREF, rank, null spaces,
// row-space intersections and entrywise Frobenius maps.

#include <cstddef>
#include <memory>
#include <vector>

#include "galoishull/field.hpp"

namespace ghl {

class MatrixGF {
public:
    MatrixGF() = default;
    MatrixGF(std::shared_ptr<const FieldCtx> ctx, std::size_t rows, std::size_t cols);
    static MatrixGF identity(std::shared_ptr<const FieldCtx> ctx, std::size_t n);
    static MatrixGF from_rows(std::shared_ptr<const FieldCtx> ctx,
                              const std::vector<std::vector<Fe>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::shared_ptr<const FieldCtx>& ctx() const { return ctx_; }

    const Fe& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Fe& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    std::vector<Fe> row(std::size_t i) const;

    MatrixGF transpose() const;
    MatrixGF select_columns(const std::vector<std::size_t>& idx) const;
    MatrixGF vstack(const MatrixGF& below) const;
    // every entry raised to p^e (Frobenius iterate e, reduced mod h)
    MatrixGF entrywise_frobenius(unsigned e) const;

    bool operator==(const MatrixGF& o) const;
    bool is_zero() const;

private:
    std::shared_ptr<const FieldCtx> ctx_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Fe> a_;
};

struct RrefResult {
    MatrixGF matrix;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const MatrixGF& m);
std::size_t rank(const MatrixGF& m);
// basis of {x : M x^T = 0}, returned in RREF (rows = cols - rank)
MatrixGF null_space(const MatrixGF& m);
std::size_t row_space_intersection_dim(const MatrixGF& a, const MatrixGF& b);
MatrixGF matmul(const MatrixGF& a, const MatrixGF& b);

// true iff v lies in the row space of m
bool in_row_space(const MatrixGF& m, const std::vector<Fe>& v);

}  // namespace ghl
