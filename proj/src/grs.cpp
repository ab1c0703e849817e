#include "galoishull/grs.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace ghl {

int Poly::degree() const {
    for (std::size_t i = c.size(); i-- > 0;)
        if (!c[i].is_zero()) return static_cast<int>(i);
    return -1;
}

Fe Poly::coeff(const FieldCtx* ctx, std::size_t i) const {
    return i < c.size() ? c[i] : ctx->zero();
}

Fe Poly::eval(const Fe& x) const {
    const FieldCtx* ctx = x.ctx();
    Fe acc = ctx->zero();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

void Poly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly poly_from_roots(const std::shared_ptr<const FieldCtx>& ctx, const std::vector<Fe>& roots) {
    Poly f{{ctx->one()}};
    for (const Fe& r : roots) {
        Poly next{std::vector<Fe>(f.c.size() + 1, ctx->zero())};
        for (std::size_t i = 0; i < f.c.size(); ++i) {
            next.c[i + 1] = next.c[i + 1] + f.c[i];
            next.c[i] = next.c[i] - r * f.c[i];
        }
        f = std::move(next);
    }
    return f;
}

Poly poly_mul(const std::shared_ptr<const FieldCtx>& ctx, const Poly& a, const Poly& b) {
    if (a.degree() < 0 || b.degree() < 0) return Poly{{}};
    Poly r{std::vector<Fe>(a.c.size() + b.c.size() - 1, ctx->zero())};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    return r;
}

Poly poly_divide_linear(const std::shared_ptr<const FieldCtx>& ctx, const Poly& f, const Fe& a) {
    // synthetic division by (x - a)
    int d = f.degree();
    if (d < 1) return Poly{{}};
    Poly q{std::vector<Fe>(d, ctx->zero())};
    Fe carry = f.c[d];
    for (int i = d - 1; i >= 0; --i) {
        q.c[i] = carry;
        carry = f.c[i] + a * carry;
    }
    return q;
}

Poly poly_derivative(const std::shared_ptr<const FieldCtx>& ctx, const Poly& f) {
    if (f.c.size() <= 1) return Poly{{}};
    Poly d{std::vector<Fe>(f.c.size() - 1, ctx->zero())};
    for (std::size_t i = 1; i < f.c.size(); ++i)
        d.c[i - 1] = ctx->from_int(static_cast<std::int64_t>(i % ctx->p())) * f.c[i];
    return d;
}

Poly poly_coeff_frobenius(const std::shared_ptr<const FieldCtx>& ctx, const Poly& f, unsigned e) {
    Poly r = f;
    for (auto& c : r.c) c = ctx->frobenius(c, e);
    return r;
}

GrsCode make_grs(std::shared_ptr<const FieldCtx> ctx, std::vector<Fe> a, std::vector<Fe> v,
                 std::size_t k, bool extended) {
    const std::size_t n = a.size();
    if (n == 0 || n > ctx->q()) throw InvalidParams("need 1 <= n <= q");
    if (v.size() != n) throw DimMismatch("|v| != |a|");
    if (k < 1 || k > n) throw InvalidParams("need 1 <= k <= n");
    std::set<std::uint64_t> seen;
    for (const Fe& x : a) {
        if (x.ctx() != ctx.get()) throw FieldMismatch("evaluation point from another field");
        if (!seen.insert(x.index()).second)
            throw DuplicatePoints("evaluation points must be distinct");
    }
    for (const Fe& x : v) {
        if (x.ctx() != ctx.get()) throw FieldMismatch("multiplier from another field");
        if (x.is_zero()) throw InvalidParams("multiplier zero");
    }
    return GrsCode{std::move(ctx), std::move(a), std::move(v), k, extended};
}

std::vector<Fe> u_vector(const std::shared_ptr<const FieldCtx>& ctx, const std::vector<Fe>& a) {
    const std::size_t n = a.size();
    std::vector<Fe> u;
    u.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Fe prod = ctx->one();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            Fe d = a[i] - a[j];
            if (d.is_zero()) throw DuplicatePoints("evaluation points must be distinct");
            prod = prod * d;
        }
        u.push_back(ctx->inv(prod));
    }
    return u;
}

MatrixGF generator_matrix(const GrsCode& code) {
    const std::size_t n = code.n();
    MatrixGF g(code.ctx, code.k, code.length());
    for (std::size_t i = 0; i < n; ++i) {
        Fe pw = code.ctx->one();
        for (std::size_t j = 0; j < code.k; ++j) {
            g.at(j, i) = code.v[i] * pw;
            pw = pw * code.a[i];
        }
    }
    if (code.extended) g.at(code.k - 1, n) = code.ctx->one();
    return g;
}

std::vector<Fe> encode(const GrsCode& code, const Poly& f) {
    if (f.degree() >= static_cast<int>(code.k))
        throw DegreeTooHigh("deg f must be <= k-1");
    std::vector<Fe> c;
    c.reserve(code.length());
    for (std::size_t i = 0; i < code.n(); ++i) c.push_back(code.v[i] * f.eval(code.a[i]));
    if (code.extended) c.push_back(f.coeff(code.ctx.get(), code.k - 1));
    return c;
}

namespace {

// visits every size-z subset of [0,n); returns true if pred held for some subset
bool any_subset(std::size_t n, std::size_t z, const std::function<bool(const std::vector<std::size_t>&)>& pred) {
    std::vector<std::size_t> idx(z);
    for (std::size_t i = 0; i < z; ++i) idx[i] = i;
    while (true) {
        if (pred(idx)) return true;
        std::size_t i = z;
        while (i-- > 0) {
            if (idx[i] != i + n - z) {
                ++idx[i];
                for (std::size_t j = i + 1; j < z; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return false;
        }
    }
}

}  // namespace

std::size_t min_distance_exact(const GrsCode& code, std::size_t guard) {
    const std::size_t N = code.length();
    if (N > guard) throw TooLargeForExact("length exceeds the exact-distance guard");
    MatrixGF g = generator_matrix(code);
    if (rank(g) != code.k) throw RankDeficient("generator matrix is rank deficient");
    const std::size_t k = code.k;
    // d = N - max{|Z| : rank(G_Z) < k}; any Z with |Z| <= k-1 qualifies
    if (k <= N) {
        bool singular_k_subset =
            k <= N && any_subset(N, k, [&](const std::vector<std::size_t>& z) {
                return rank(g.select_columns(z)) < k;
            });
        if (!singular_k_subset) return N - k + 1;
    }
    for (std::size_t z = N - 1; z >= k; --z) {
        bool hit = any_subset(N, z, [&](const std::vector<std::size_t>& zz) {
            return rank(g.select_columns(zz)) < k;
        });
        if (hit) return N - z;
    }
    return N - k + 1;  // unreachable: a singular k-subset exists
}

MdsResult is_mds(const GrsCode& code, std::size_t guard) {
    if (code.length() <= guard) {
        std::size_t d = min_distance_exact(code, guard);
        return MdsResult{d == code.length() - code.k + 1, true};
    }
    // structural: honest GRS / extended GRS codes are MDS
    return MdsResult{true, false};
}

Fe psi(const std::shared_ptr<const FieldCtx>& ctx, const std::vector<Fe>& B, const Fe& x) {
    Fe prod = ctx->one();
    for (const Fe& b : B) prod = prod * (x - b);
    return prod;
}

Fe delta(const std::shared_ptr<const FieldCtx>& ctx, const std::vector<Fe>& B, const Fe& x) {
    // formal derivative of Psi_B, evaluated at x
    Fe acc = ctx->zero();
    for (std::size_t i = 0; i < B.size(); ++i) {
        Fe term = ctx->one();
        for (std::size_t j = 0; j < B.size(); ++j) {
            if (j == i) continue;
            term = term * (x - B[j]);
        }
        acc = acc + term;
    }
    return acc;
}

std::vector<Fe> dual_multipliers(const GrsCode& code) {
    if (code.extended) throw ExtendedUnsupported("dual_multipliers: plain GRS only");
    if (code.k >= code.n()) throw InvalidParams("dual_multipliers needs k <= n-1");
    std::vector<Fe> u = u_vector(code.ctx, code.a);
    std::vector<Fe> w;
    w.reserve(code.n());
    for (std::size_t i = 0; i < code.n(); ++i) w.push_back(u[i] / code.v[i]);
    return w;
}

Poly lagrange_interpolate(const std::shared_ptr<const FieldCtx>& ctx,
                          const std::vector<Fe>& xs, const std::vector<Fe>& ys) {
    if (xs.size() != ys.size()) throw DimMismatch("interpolation: |xs| != |ys|");
    const std::size_t n = xs.size();
    std::vector<Fe> u = u_vector(ctx, xs);
    Poly master = poly_from_roots(ctx, xs);
    Poly acc{std::vector<Fe>(n, ctx->zero())};
    for (std::size_t i = 0; i < n; ++i) {
        if (ys[i].is_zero()) continue;
        Poly li = poly_divide_linear(ctx, master, xs[i]);  // prod_{j != i} (x - a_j)
        Fe scale = ys[i] * u[i];
        for (std::size_t j = 0; j < li.c.size(); ++j)
            acc.c[j] = acc.c[j] + scale * li.c[j];
    }
    acc.trim();
    return acc;
}

}  // namespace ghl
