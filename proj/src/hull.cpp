#include "galoishull/hull.hpp"

namespace ghl {

Fe galois_inner(const std::shared_ptr<const FieldCtx>& ctx, const std::vector<Fe>& a,
                const std::vector<Fe>& b, unsigned e) {
    if (a.size() != b.size()) throw DimMismatch("inner product: lengths differ");
    Fe acc = ctx->zero();
    for (std::size_t i = 0; i < a.size(); ++i)
        acc = acc + a[i] * ctx->frobenius(b[i], e);
    return acc;
}

MatrixGF galois_dual_basis(const MatrixGF& g, unsigned e) {
    if (rank(g) != g.rows()) throw RankDeficient("generator must have full row rank");
    return null_space(g.entrywise_frobenius(e));
}

HullReport hull_dim(const MatrixGF& g, unsigned e) {
    e %= g.ctx()->h();
    MatrixGF dual = galois_dual_basis(g, e);
    std::size_t inter = row_space_intersection_dim(g, dual);
    // cross-check: dim Hull_e = k - rank(G^{(p^e)} G^T)
    std::size_t gram_rank = rank(matmul(g.entrywise_frobenius(e), g.transpose()));
    HullReport r;
    r.e = e;
    r.hull_dim = inter;
    r.dual_dim = dual.rows();
    r.method_agreement = (inter == g.rows() - gram_rank);
    return r;
}

HullReport hull_dim(const GrsCode& code, unsigned e) {
    return hull_dim(generator_matrix(code), e);
}

MatrixGF hull_basis(const GrsCode& code, unsigned e) {
    MatrixGF g = generator_matrix(code);
    MatrixGF dual = galois_dual_basis(g, e % code.ctx->h());
    // rows of both spans; intersection = null-space combination trick:
    // x in C and x in C^perp_e  <=>  x = y G with y G stacked-solvable in dual.
    // Simplest exact route: intersect via the kernel of [G^T | -D^T].
    const auto& ctx = code.ctx;
    std::size_t kg = g.rows(), kd = dual.rows(), n = g.cols();
    MatrixGF m(ctx, n, kg + kd);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < kg; ++j) m.at(i, j) = g.at(j, i);
        for (std::size_t j = 0; j < kd; ++j) m.at(i, kg + j) = -dual.at(j, i);
    }
    // {(y|z) : G^T y^T = D^T z^T}; the y-part spans the hull through y G
    MatrixGF combos = null_space(m);
    std::vector<std::vector<Fe>> rows;
    for (std::size_t r = 0; r < combos.rows(); ++r) {
        std::vector<Fe> vec(n, ctx->zero());
        for (std::size_t j = 0; j < kg; ++j)
            for (std::size_t t = 0; t < n; ++t)
                vec[t] = vec[t] + combos.at(r, j) * g.at(j, t);
        rows.push_back(std::move(vec));
    }
    if (rows.empty()) return MatrixGF(ctx, 0, n);
    return rref(MatrixGF::from_rows(ctx, rows)).matrix;
}

std::optional<Poly> lemma1_membership(const GrsCode& code, const Poly& f, unsigned e) {
    const auto& ctx = code.ctx;
    if (f.degree() >= static_cast<int>(code.k))
        throw DegreeTooHigh("deg f must be <= k-1");
    e %= ctx->h();
    const std::size_t n = code.n();
    const std::uint64_t pe = ctx->p_pow(e);

    std::vector<Fe> u = u_vector(ctx, code.a);
    std::vector<Fe> ys;
    ys.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        // v_i^{p^e+1} f(a_i)^{p^e} = u_i g(a_i)
        Fe lhs = ctx->pow(code.v[i], pe + 1) * ctx->pow(f.eval(code.a[i]), pe);
        ys.push_back(lhs / u[i]);
    }
    Poly g = lagrange_interpolate(ctx, code.a, ys);
    const int dg = g.degree();
    if (!code.extended) {
        if (dg > static_cast<int>(n) - static_cast<int>(code.k) - 1) return std::nullopt;
        return g;
    }
    if (dg > static_cast<int>(n) - static_cast<int>(code.k)) return std::nullopt;
    Fe fk1 = ctx->pow(f.coeff(ctx.get(), code.k - 1), pe);
    Fe gnk = g.coeff(ctx.get(), n - code.k);
    if (fk1 != -gnk) return std::nullopt;
    return g;
}

HullReport hermitian_hull(const GrsCode& code) {
    if (code.ctx->h() % 2 != 0)
        throw EDoesNotDivideH("Hermitian hull requires even extension degree");
    return hull_dim(code, code.ctx->h() / 2);
}

}  // namespace ghl
