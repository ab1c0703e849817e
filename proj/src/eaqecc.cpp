#include "galoishull/eaqecc.hpp"

#include <sstream>

namespace ghl {

namespace {

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

}  // namespace

BigInt big_dimension_bound(const BigInt& pe, const BigInt& n) {
    return (pe + n - 1) / (pe + 1);
}

SingletonStatus singleton_check(const BigInt& n, const BigInt& kq, const BigInt& d,
                                const BigInt& c) {
    if (2 * d > n + 2) return SingletonStatus::NotApplicable;
    BigInt lhs = n + c - kq;
    BigInt rhs = 2 * (d - 1);
    if (lhs == rhs) return SingletonStatus::Equality;
    return lhs > rhs ? SingletonStatus::Satisfied : SingletonStatus::Violated;
}

DerivedEaqecc derive_eaqecc(const GrsCode& code, unsigned e) {
    const unsigned h = code.ctx->h();
    e %= h;
    const unsigned e_dual = (h - e) % h;

    DerivedEaqecc out;
    out.primal_hull = hull_dim(code, e);
    out.dual_hull = hull_dim(code, e_dual);
    out.classical_mds = is_mds(code);

    const std::uint64_t N = code.length();
    const std::uint64_t k = code.k;
    const std::uint64_t l = out.primal_hull.hull_dim;
    const std::uint64_t lp = out.dual_hull.hull_dim;
    const std::uint64_t d = N - k + 1;

    auto fill = [&](std::uint64_t kq, std::uint64_t dd, std::uint64_t c) {
        EaqeccParams p;
        p.n = N;
        p.kq = kq;
        p.d = dd;
        p.c = c;
        p.p = code.ctx->p();
        p.h = h;
        p.singleton = singleton_check(N, kq, dd, c);
        p.mds = (p.singleton == SingletonStatus::Equality);
        return p;
    };
    out.primal = fill(k - l, d, N - k - l);
    out.dual_side = fill(N - k - lp, k + 1, k - lp);
    return out;
}

std::size_t rank_formula_c(const GrsCode& code, unsigned e) {
    const unsigned h = code.ctx->h();
    e %= h;
    MatrixGF g = generator_matrix(code);
    MatrixGF H = null_space(g);  // Euclidean-dual basis, already RREF
    if (H.rows() == 0) return 0;
    // M^{T_e} = (M^{(p^{h-e})})^T, implemented literally
    MatrixGF Hte = H.entrywise_frobenius((h - e) % h).transpose();
    return rank(matmul(H, Hte));
}

RankConventionReport check_rank_conventions(const GrsCode& code, unsigned e) {
    const unsigned h = code.ctx->h();
    e %= h;
    RankConventionReport r;
    r.c = rank_formula_c(code, e);
    const std::size_t nk = code.length() - code.k;
    r.matches_e = (r.c == nk - hull_dim(code, e).hull_dim);
    r.matches_h_minus_e = (r.c == nk - hull_dim(code, (h - e) % h).hull_dim);
    return r;
}

std::vector<BigParamRow> param_table(const TableSpec& spec) {
    BigInt pe = big_pow(spec.p, spec.e);
    BigInt n0;          // finite evaluation-point count of the classical code
    BigInt code_len;    // EAQECC length
    std::uint64_t h = 0;
    bool l_up_to_k = false;  // 5.7 primal allows l = k

    if (spec.theorem == "5.5") {
        if (spec.m < 2 || spec.m % 2 != 0) throw InvalidRanges("5.5: m must be even");
        if (spec.r > spec.m - 1) throw InvalidRanges("5.5: r must be <= m-1");
        if (spec.t < 1 || (pe - 1) % spec.t != 0)
            throw InvalidRanges("5.5: t must divide p^e - 1");
        h = spec.e * spec.m;
        n0 = spec.t * big_pow(spec.p, std::uint64_t(spec.e) * spec.r);
        code_len = n0 + 1;
    } else if (spec.theorem == "5.6") {
        if (spec.e < 1 || spec.h % (2 * std::uint64_t(spec.e)) != 0)
            throw InvalidRanges("5.6: 2e must divide h");
        if (spec.t < 1 || BigInt(spec.t) > pe) throw InvalidRanges("5.6: need 1 <= t <= p^e");
        h = spec.h;
        n0 = spec.t * big_pow(spec.p, spec.h - spec.e);
        code_len = n0 + 1;
    } else if (spec.theorem == "5.7" || spec.theorem == "5.8") {
        if (spec.e < 1 || spec.h % spec.e != 0 || (spec.h / spec.e) % 2 == 0)
            throw InvalidRanges(spec.theorem + ": h/e must be an odd integer");
        if (spec.n_seed < 1) throw InvalidRanges(spec.theorem + ": seed length n required");
        h = spec.h;
        n0 = spec.n_seed;
        code_len = (spec.theorem == "5.8") ? n0 + 1 : n0;
        l_up_to_k = (spec.theorem == "5.7");
    } else {
        throw InvalidRanges("unknown theorem id: " + spec.theorem);
    }

    BigInt pe_side = (spec.side == TableSide::Primal) ? pe : big_pow(spec.p, h - spec.e);
    BigInt k_bound = big_dimension_bound(pe_side, n0);
    BigInt k_hi = spec.k_hi == 0 ? k_bound : std::min(spec.k_hi, k_bound);

    std::vector<BigParamRow> rows;
    for (BigInt k = std::max(spec.k_lo, BigInt(1)); k <= k_hi; ++k) {
        BigInt l_cap = l_up_to_k ? k : k - 1;
        BigInt l_hi = std::min(spec.l_hi, l_cap);
        for (BigInt l = spec.l_lo; l <= l_hi; ++l) {
            BigParamRow row;
            row.theorem = spec.theorem;
            row.p = spec.p;
            row.h_or_m = (spec.theorem == "5.5") ? spec.m : spec.h;
            row.e = spec.e;
            row.t = spec.t;
            row.r = spec.r;
            row.n = code_len;
            row.k = k;
            row.l = l;
            if (spec.side == TableSide::Primal) {
                row.kq = k - l;
                row.d = code_len - k + 1;
                row.c = code_len - k - l;
            } else {
                row.kq = code_len - k - l;
                row.d = k + 1;
                row.c = k - l;
            }
            row.singleton = singleton_check(row.n, row.kq, row.d, row.c);
            row.mds = (row.singleton == SingletonStatus::Equality);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string table_to_csv(const std::vector<BigParamRow>& rows) {
    std::ostringstream os;
    os << "theorem,p,h_or_m,e,t,r,n,k,l,kq,d,c,mds\n";
    for (const auto& r : rows) {
        os << r.theorem << ',' << r.p << ',' << r.h_or_m << ',' << r.e << ',' << r.t << ','
           << r.r << ',' << r.n.str() << ',' << r.k.str() << ',' << r.l.str() << ','
           << r.kq.str() << ',' << r.d.str() << ',' << r.c.str() << ','
           << (r.mds ? "true" : "false") << '\n';
    }
    return os.str();
}

}  // namespace ghl
