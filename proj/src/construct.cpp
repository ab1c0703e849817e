#include "galoishull/construct.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ghl {

namespace {

using u64 = std::uint64_t;
using i128 = __int128;

i128 egcd(i128 a, i128 b, i128& x, i128& y) {
    if (b == 0) { x = 1; y = 0; return a; }
    i128 x1, y1;
    i128 g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

void verify_hull_and_mds(const GrsCode& code, unsigned e, std::size_t l) {
    HullReport hr = hull_dim(code, e);
    if (!hr.method_agreement)
        throw VerificationFailed("hull methods disagree on a constructed code");
    if (hr.hull_dim != l)
        throw VerificationFailed("constructed hull dimension " + std::to_string(hr.hull_dim) +
                                 " != requested " + std::to_string(l));
    MdsResult mr = is_mds(code);
    if (!mr.mds) throw VerificationFailed("constructed code failed the exact MDS check");
}

Fe pick_alpha(const std::shared_ptr<const FieldCtx>& ctx, u64 pe) {
    Fe alpha = ctx->g();
    if (ctx->pow(alpha, pe + 1) == ctx->one())
        throw InvalidParams("no alpha with alpha^{p^e+1} != 1 exists in this field");
    return alpha;
}

std::vector<Fe> scale_prefix(const std::shared_ptr<const FieldCtx>& ctx, std::vector<Fe> v,
                             std::size_t s, const Fe& alpha) {
    (void)ctx;
    for (std::size_t i = 0; i < s; ++i) v[i] = alpha * v[i];
    return v;
}

}  // namespace

std::size_t dimension_bound(u64 pe, std::size_t n) {
    return static_cast<std::size_t>((pe + n - 1) / (pe + 1));
}

GrsCode thm31_construct(const Thm31Params& prm, bool verify) {
    if (prm.e < 1) throw InvalidParams("e must be >= 1");
    if (prm.m < 2 || prm.m % 2 != 0) throw InvalidParams("m must be even");
    if (prm.r > prm.m - 1) throw InvalidParams("r must be <= m-1");
    const unsigned h = prm.e * prm.m;
    auto ctx = FieldCtx::make(prm.p, h);
    const u64 pe = ctx->p_pow(prm.e);
    if (prm.t < 1 || (pe - 1) % prm.t != 0) throw InvalidParams("t must divide p^e - 1");
    u64 per = ctx->p_pow(prm.e * prm.r);
    const std::size_t n = static_cast<std::size_t>(prm.t * per);
    if (prm.k < 1 || prm.k > dimension_bound(pe, n))
        throw InvalidParams("k out of range: need 1 <= k <= floor((p^e+n-1)/(p^e+1))");
    if (prm.l > prm.k - 1) throw InvalidParams("l out of range: need 0 <= l <= k-1");

    // V = F_{p^e}-span of g^1..g^r; coordinates are unique in the basis
    // {1, g, ..., g^{m-1}}, so V intersects F_{p^e} only in 0 (verified below)
    std::vector<Fe> subfield = ctx->subfield_elements(prm.e);
    std::vector<Fe> basis;
    for (unsigned i = 1; i <= prm.r; ++i) basis.push_back(ctx->pow(ctx->g(), i));
    std::vector<Fe> V{ctx->zero()};
    for (const Fe& be : basis) {
        std::vector<Fe> next;
        next.reserve(V.size() * subfield.size());
        for (const Fe& c : subfield)
            for (const Fe& x : V) next.push_back(x + c * be);
        V = std::move(next);
    }
    std::sort(V.begin(), V.end(), lex_less);
    if (std::adjacent_find(V.begin(), V.end()) != V.end())
        throw VerificationFailed("V is not p^{er}-dimensional");
    for (const Fe& gamma : V)
        if (!gamma.is_zero() && ctx->in_subfield(gamma, prm.e))
            throw VerificationFailed("V intersects F_{p^e} nontrivially");

    Fe omega = ctx->find_element_of_order(prm.t, prm.e);

    std::vector<Fe> a;
    a.reserve(n);
    for (u64 j = 0; j < prm.t; ++j) {
        Fe wj = ctx->pow(omega, j);
        for (const Fe& gamma : V) a.push_back(wj + gamma);
    }

    std::vector<Fe> u = u_vector(ctx, a);
    // b = (prod_{0 != gamma in V} gamma) * (prod_{gamma in V} prod_{d=1}^{t-1} (1 + gamma - omega^d))
    Fe b = ctx->one();
    for (const Fe& gamma : V)
        if (!gamma.is_zero()) b = b * gamma;
    for (const Fe& gamma : V)
        for (u64 d = 1; d < prm.t; ++d)
            b = b * (ctx->one() + gamma - ctx->pow(omega, d));
    // The derivative of the vanishing polynomial at a_i in V_{j0} has the
    // closed form omega^{-j0 p^{er}} b, so u_i is its inverse; lambda = b then
    // gives lambda u_i = omega^{j0 p^{er}} in F_{p^e}^*.
    Fe lambda = b;
    for (std::size_t i = 0; i < n; ++i) {
        u64 j0 = i / V.size();
        Fe expect = ctx->inv(ctx->pow_signed(omega, -static_cast<std::int64_t>(j0 * per)) * b);
        if (u[i] != expect)
            throw VerificationFailed("u_i does not match the closed form");
    }

    std::vector<Fe> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Fe lu = lambda * u[i];
        if (lu.is_zero() || !ctx->in_subfield(lu, prm.e))
            throw NormEquationFailed("lambda*u_i is not in F_{p^e}^*");
        try {
            v.push_back(ctx->solve_norm_equation(lu, prm.e));
        } catch (const NotInE&) {
            throw NormEquationFailed("lambda*u_i is not a (p^e+1)-th power");
        }
    }

    const std::size_t s = prm.k - 1 - prm.l;
    Fe alpha = pick_alpha(ctx, pe);
    GrsCode code = make_grs(ctx, std::move(a), scale_prefix(ctx, std::move(v), s, alpha),
                            prm.k, /*extended=*/true);
    if (verify) verify_hull_and_mds(code, prm.e, prm.l);
    return code;
}

std::vector<std::vector<Fe>> trace_cosets(const std::shared_ptr<const FieldCtx>& ctx,
                                          unsigned e, const std::vector<Fe>& bs) {
    const unsigned h = ctx->h();
    if (e == 0 || h % e != 0) throw EDoesNotDivideH("trace parameter must divide h");
    const u64 p = ctx->p();
    auto fp = FieldCtx::make(p, 1);

    // Tr(x) = b is an F_p-linear system in the h polynomial-basis coordinates
    Fe x = ctx->h() > 1 ? ctx->from_coeffs({0, 1}) : ctx->one();
    MatrixGF A(fp, h, h);
    for (unsigned j = 0; j < h; ++j) {
        Fe tj = ctx->trace_to(ctx->pow(x, j), e);
        for (unsigned i = 0; i < h; ++i)
            A.at(i, j) = fp->from_int(tj.coeffs()[i]);
    }
    MatrixGF kernel = null_space(A);  // rows: y with A y^T = 0
    if ((u64(1) << 22) < ctx->q() / ctx->p_pow(e))
        throw InvalidParams("trace coset enumeration too large");

    std::vector<std::vector<Fe>> cosets;
    for (const Fe& b : bs) {
        // particular solution from the augmented system
        MatrixGF aug(fp, h, h + 1);
        for (unsigned i = 0; i < h; ++i) {
            for (unsigned j = 0; j < h; ++j) aug.at(i, j) = A.at(i, j);
            aug.at(i, h) = fp->from_int(b.coeffs()[i]);
        }
        RrefResult rr = rref(aug);
        std::vector<std::int64_t> part(h, 0);
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) {
            if (rr.pivot_cols[i] == h)
                throw VerificationFailed("trace equation inconsistent");
            part[rr.pivot_cols[i]] = rr.matrix.at(i, h).coeffs()[0];
        }
        Fe particular = ctx->from_coeffs(part);

        std::vector<Fe> coset;
        std::vector<std::uint32_t> odo(kernel.rows(), 0);
        while (true) {
            Fe elem = particular;
            for (std::size_t r = 0; r < kernel.rows(); ++r) {
                if (odo[r] == 0) continue;
                std::vector<std::int64_t> kc(h, 0);
                for (unsigned j = 0; j < h; ++j)
                    kc[j] = static_cast<std::int64_t>(kernel.at(r, j).coeffs()[0]) * odo[r];
                elem = elem + ctx->from_coeffs(kc);
            }
            coset.push_back(elem);
            std::size_t i = odo.size();
            bool done = true;
            while (i-- > 0) {
                if (++odo[i] < p) { done = false; break; }
                odo[i] = 0;
            }
            if (done || odo.empty()) break;
        }
        std::sort(coset.begin(), coset.end(), lex_less);
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

GrsCode thm32_construct(const Thm32Params& prm, bool verify) {
    if (prm.e < 1 || prm.h % (2 * prm.e) != 0) throw InvalidParams("2e must divide h");
    auto ctx = FieldCtx::make(prm.p, prm.h);
    const u64 pe = ctx->p_pow(prm.e);
    if (prm.t < 1 || prm.t > pe) throw InvalidParams("t must satisfy 1 <= t <= p^e");
    const std::size_t n = static_cast<std::size_t>(prm.t * ctx->p_pow(prm.h - prm.e));
    if (prm.k < 1 || prm.k > dimension_bound(pe, n))
        throw InvalidParams("k out of range: need 1 <= k <= floor((p^e+n-1)/(p^e+1))");
    if (prm.l > prm.k - 1) throw InvalidParams("l out of range: need 0 <= l <= k-1");

    // B = F_{p^e}; b_1 = 0, then the t-1 smallest nonzero subfield elements
    std::vector<Fe> subfield = ctx->subfield_elements(prm.e);
    std::vector<Fe> bs(subfield.begin(), subfield.begin() + prm.t);

    std::vector<std::vector<Fe>> cosets = trace_cosets(ctx, prm.e, bs);
    std::vector<Fe> a;
    a.reserve(n);
    for (const auto& coset : cosets) {
        if (coset.size() != ctx->p_pow(prm.h - prm.e))
            throw VerificationFailed("trace coset has unexpected size");
        a.insert(a.end(), coset.begin(), coset.end());
    }

    std::vector<Fe> u = u_vector(ctx, a);
    // the vanishing-polynomial derivative at a_i is prod_{j != j0} (Tr(a_i) - b_j)
    // (the coset factor contributes 1), so u_i is the inverse of that product
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j0 = i / cosets[0].size();
        Fe tr = ctx->trace_to(a[i], prm.e);
        Fe expect = ctx->one();
        for (std::size_t j = 0; j < bs.size(); ++j) {
            if (j == j0) continue;
            expect = expect * (tr - bs[j]);
        }
        if (u[i] != ctx->inv(expect))
            throw VerificationFailed("u_i does not match the coset product");
        if (u[i].is_zero() || !ctx->in_subfield(u[i], prm.e))
            throw NormEquationFailed("u_i is not in F_{p^e}^*");
    }

    std::vector<Fe> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        try {
            v.push_back(ctx->solve_norm_equation(u[i], prm.e));
        } catch (const NotInE&) {
            throw NormEquationFailed("u_i is not a (p^e+1)-th power");
        }
    }

    const std::size_t s = prm.k - 1 - prm.l;
    Fe alpha = pick_alpha(ctx, pe);
    GrsCode code = make_grs(ctx, std::move(a), scale_prefix(ctx, std::move(v), s, alpha),
                            prm.k, /*extended=*/true);
    if (verify) verify_hull_and_mds(code, prm.e, prm.l);
    return code;
}

namespace {

// shared core of the two section-4 lifts
GrsCode lift_common(const EuclideanSeed& seed, unsigned e, std::size_t k, std::size_t l,
                    std::size_t s, bool extended, bool verify) {
    const auto& ctx = seed.ctx;
    const unsigned h = ctx->h();
    if (e < 1 || h % e != 0 || (h / e) % 2 == 0)
        throw HOverENotOdd("lift requires h/e to be an odd integer");
    const std::size_t n = seed.a.size();
    const u64 pe = ctx->p_pow(e);
    const u64 A = pe + 1;
    const u64 m = ctx->q() - 1;

    std::vector<Fe> u = u_vector(ctx, seed.a);
    Fe target_scale = extended ? -ctx->one() : *seed.lambda;
    for (std::size_t i = 0; i < n; ++i)
        if (seed.v[i] * seed.v[i] != target_scale * u[i])
            throw SeedInvalidWitness(extended ? "seed violates v_i^2 = -u_i"
                                              : "seed violates v_i^2 = lambda*u_i");

    if (std::gcd(A, m) != 2) throw GcdNotTwo("gcd(p^e+1, q-1) != 2");
    i128 x, y;
    i128 g = egcd(i128(A), i128(m), x, y);
    if (g != 2) throw GcdNotTwo("extended gcd did not yield 2");
    i128 mu = x % i128(m);
    if (mu < 0) mu += m;

    std::vector<Fe> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Fe vi = ctx->pow(seed.v[i], static_cast<u64>(mu));
        if (ctx->pow(vi, A) != target_scale * u[i])
            throw VerificationFailed("mu-power lift lost the norm witness");
        v.push_back(vi);
    }

    Fe alpha = pick_alpha(ctx, pe);
    GrsCode code = make_grs(ctx, seed.a, scale_prefix(ctx, std::move(v), s, alpha), k, extended);
    if (verify) verify_hull_and_mds(code, e % h, l);
    return code;
}

}  // namespace

GrsCode thm41_lift(const EuclideanSeed& seed, unsigned e, std::size_t k, std::size_t l,
                   bool verify) {
    if (seed.extended) throw InvalidParams("thm41_lift requires a plain seed");
    if (!seed.lambda) throw SeedInvalidWitness("plain seed must carry lambda");
    const std::size_t n = seed.a.size();
    if (k < 1 || k > dimension_bound(seed.ctx->p_pow(e), n))
        throw InvalidParams("k out of range");
    if (l > k) throw InvalidParams("l out of range: need 0 <= l <= k");
    return lift_common(seed, e, k, l, /*s=*/k - l, /*extended=*/false, verify);
}

GrsCode thm42_lift(const EuclideanSeed& seed, unsigned e, std::size_t k, std::size_t l,
                   bool verify) {
    if (!seed.extended) throw InvalidParams("thm42_lift requires an extended seed");
    const std::size_t n = seed.a.size();
    if (k < 1 || k > dimension_bound(seed.ctx->p_pow(e), n))
        throw InvalidParams("k out of range");
    if (l > k - 1) throw InvalidParams("l out of range: need 0 <= l <= k-1");
    return lift_common(seed, e, k, l, /*s=*/k - l - 1, /*extended=*/true, verify);
}

std::optional<EuclideanSeed> find_euclidean_seed(const std::shared_ptr<const FieldCtx>& ctx,
                                                 const std::vector<Fe>& a, bool extended) {
    std::vector<Fe> u = u_vector(ctx, a);
    EuclideanSeed seed;
    seed.ctx = ctx;
    seed.a = a;
    seed.extended = extended;
    if (extended) {
        for (const Fe& ui : u) {
            auto root = ctx->sqrt(-ui);
            if (!root) return std::nullopt;
            seed.v.push_back(*root);
        }
        return seed;
    }
    // all u_i must share one quadratic-character class
    Fe chi0 = ctx->pow(u[0], (ctx->q() - 1) / 2);
    for (const Fe& ui : u)
        if (ctx->pow(ui, (ctx->q() - 1) / 2) != chi0) return std::nullopt;
    Fe lambda = (chi0 == ctx->one()) ? ctx->one() : ctx->g();  // g is a fixed non-square
    for (const Fe& ui : u) {
        auto root = ctx->sqrt(lambda * ui);
        if (!root) return std::nullopt;  // unreachable given the class check
        seed.v.push_back(*root);
    }
    seed.lambda = lambda;
    return seed;
}

EuclideanSeed mu_subgroup_seed(const std::shared_ptr<const FieldCtx>& ctx, u64 n) {
    if (n == 0 || (ctx->q() - 1) % n != 0)
        throw InvalidParams("mu_n seed requires n | q-1");
    Fe zeta = ctx->pow(ctx->g(), (ctx->q() - 1) / n);
    std::vector<Fe> a;
    a.reserve(n);
    Fe acc = ctx->one();
    for (u64 i = 0; i < n; ++i) {
        a.push_back(acc);
        acc = acc * zeta;
    }
    auto seed = find_euclidean_seed(ctx, a, /*extended=*/false);
    if (!seed) throw InvalidParams("mu_n point set has no Euclidean witness");
    return *seed;
}

EuclideanSeed full_field_seed(const std::shared_ptr<const FieldCtx>& ctx) {
    auto seed = find_euclidean_seed(ctx, ctx->all_elements(), /*extended=*/true);
    if (!seed) throw InvalidParams("full-field seed unexpectedly failed");
    return *seed;
}

}  // namespace ghl
