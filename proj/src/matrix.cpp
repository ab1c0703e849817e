#include "galoishull/matrix.hpp"

#include <algorithm>

namespace ghl {

MatrixGF::MatrixGF(std::shared_ptr<const FieldCtx> ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), a_(rows * cols, ctx_->zero()) {}

MatrixGF MatrixGF::identity(std::shared_ptr<const FieldCtx> ctx, std::size_t n) {
    MatrixGF m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ctx->one();
    return m;
}

MatrixGF MatrixGF::from_rows(std::shared_ptr<const FieldCtx> ctx,
                             const std::vector<std::vector<Fe>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    MatrixGF m(ctx, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimMismatch("ragged row list");
        for (std::size_t j = 0; j < c; ++j) {
            if (rows[i][j].ctx() != ctx.get())
                throw FieldMismatch("matrix entry from a different field");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

std::vector<Fe> MatrixGF::row(std::size_t i) const {
    return std::vector<Fe>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

MatrixGF MatrixGF::transpose() const {
    MatrixGF t(ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

MatrixGF MatrixGF::select_columns(const std::vector<std::size_t>& idx) const {
    MatrixGF s(ctx_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) s.at(i, j) = at(i, idx[j]);
    return s;
}

MatrixGF MatrixGF::vstack(const MatrixGF& below) const {
    if (below.cols_ != cols_) throw DimMismatch("vstack: column counts differ");
    if (below.ctx_.get() != ctx_.get()) throw FieldMismatch("vstack: fields differ");
    MatrixGF m(ctx_, rows_ + below.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < below.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = below.at(i, j);
    return m;
}

MatrixGF MatrixGF::entrywise_frobenius(unsigned e) const {
    MatrixGF m(ctx_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        m.a_[i] = ctx_->frobenius(a_[i], e);
    return m;
}

bool MatrixGF::operator==(const MatrixGF& o) const {
    return ctx_.get() == o.ctx_.get() && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool MatrixGF::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Fe& x) { return x.is_zero(); });
}

RrefResult rref(const MatrixGF& m) {
    RrefResult res;
    res.matrix = m;
    auto& a = res.matrix;
    const auto* ctx = m.ctx().get();
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t piv = r;
        while (piv < m.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(a.at(r, j), a.at(piv, j));
        Fe inv = ctx->inv(a.at(r, col));
        for (std::size_t j = col; j < m.cols(); ++j) a.at(r, j) = a.at(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || a.at(i, col).is_zero()) continue;
            Fe f = a.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(r, j);
        }
        res.pivot_cols.push_back(col);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank(const MatrixGF& m) { return rref(m).rank; }

MatrixGF null_space(const MatrixGF& m) {
    RrefResult rr = rref(m);
    const auto& ctx = m.ctx();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    MatrixGF basis(ctx, free_cols.size(), m.cols());
    for (std::size_t b = 0; b < free_cols.size(); ++b) {
        std::size_t fc = free_cols[b];
        basis.at(b, fc) = ctx->one();
        for (std::size_t i = 0; i < rr.rank; ++i)
            basis.at(b, rr.pivot_cols[i]) = -rr.matrix.at(i, fc);
    }
    return rref(basis).matrix;  // normalized so subspace equality is matrix equality
}

std::size_t row_space_intersection_dim(const MatrixGF& a, const MatrixGF& b) {
    if (a.cols() != b.cols()) throw DimMismatch("intersection: column counts differ");
    std::size_t ra = rank(a), rb = rank(b), rs = rank(a.vstack(b));
    return ra + rb - rs;
}

MatrixGF matmul(const MatrixGF& a, const MatrixGF& b) {
    if (a.cols() != b.rows()) throw DimMismatch("matmul: inner dimensions differ");
    if (a.ctx().get() != b.ctx().get()) throw FieldMismatch("matmul: fields differ");
    MatrixGF c(a.ctx(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = c.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return c;
}

bool in_row_space(const MatrixGF& m, const std::vector<Fe>& v) {
    if (v.size() != m.cols()) throw DimMismatch("vector length != column count");
    MatrixGF vm = MatrixGF::from_rows(m.ctx(), {v});
    return rank(m.vstack(vm)) == rank(m);
}

}  // namespace ghl
