#include <doctest.h>

#include <random>

#include "galoishull/hull.hpp"

using namespace ghl;

namespace {

std::shared_ptr<const FieldCtx> gf9() {
    return FieldCtx::make(3, 2, std::vector<std::uint32_t>{1, 0, 1});
}

GrsCode random_code(const std::shared_ptr<const FieldCtx>& ctx, std::mt19937_64& rng,
                    std::size_t n, std::size_t k, bool extended) {
    std::vector<std::uint64_t> pool(ctx->q());
    for (std::uint64_t i = 0; i < ctx->q(); ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Fe> a, v;
    for (std::size_t i = 0; i < n; ++i) {
        a.push_back(ctx->from_index(pool[i]));
        v.push_back(ctx->from_index(1 + rng() % (ctx->q() - 1)));
    }
    return make_grs(ctx, a, v, k, extended);
}

// brute-force hull membership: w in row(G) and <w, row_j(G)>_e = 0 for all j
bool in_hull_brute(const GrsCode& code, const std::vector<Fe>& w, unsigned e) {
    MatrixGF g = generator_matrix(code);
    if (!in_row_space(g, w)) return false;
    for (std::size_t j = 0; j < g.rows(); ++j)
        if (!galois_inner(code.ctx, g.row(j), w, e).is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("galois inner product basics") {
    auto f9 = gf9();
    Fe x = f9->from_coeffs({0, 1});
    // <(x),(x)>_1 = x * x^3 = x^4 = 1
    CHECK(galois_inner(f9, {x}, {x}, 1) == f9->one());
    // e = 0 is the plain Euclidean form
    CHECK(galois_inner(f9, {x, f9->one()}, {x, f9->from_int(2)}, 0)
          == x * x + f9->from_int(2));
    CHECK_THROWS_AS(galois_inner(f9, {x}, {x, x}, 0), DimMismatch);
    // conjugate-symmetric up to Frobenius: <a,b>_e = (<b,a>_{h-e})^{p^e}
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Fe> a, b;
        for (int i = 0; i < 4; ++i) {
            a.push_back(f9->from_index(rng() % 9));
            b.push_back(f9->from_index(rng() % 9));
        }
        unsigned e = rng() % 2;
        CHECK(galois_inner(f9, a, b, e)
              == f9->frobenius(galois_inner(f9, b, a, (2 - e) % 2), e));
    }
}

TEST_CASE("galois_dual_basis annihilates the code") {
    auto f9 = gf9();
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 3 + rng() % 5;
        std::size_t k = 1 + rng() % (n - 1);
        bool ext = rng() % 2;
        unsigned e = rng() % 2;
        GrsCode code = random_code(f9, rng, n, k, ext);
        MatrixGF g = generator_matrix(code);
        MatrixGF dual = galois_dual_basis(g, e);
        CHECK(dual.rows() == code.length() - k);
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < dual.rows(); ++j)
                CHECK(galois_inner(f9, g.row(i), dual.row(j), e).is_zero());
    }
}

TEST_CASE("hull_dim: two methods agree and match a brute-force count") {
    auto f9 = gf9();
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 3 + rng() % 4;
        std::size_t k = 1 + rng() % (n - 1);
        bool ext = rng() % 2;
        unsigned e = rng() % 2;
        GrsCode code = random_code(f9, rng, n, k, ext);
        HullReport hr = hull_dim(code, e);
        CHECK(hr.method_agreement);
        CHECK(hr.dual_dim == code.length() - k);

        // brute force: count hull vectors among all q^k codewords
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < k; ++i) total *= 9;
        std::uint64_t count = 0;
        MatrixGF g = generator_matrix(code);
        for (std::uint64_t msg = 0; msg < total; ++msg) {
            std::uint64_t m = msg;
            std::vector<Fe> w(code.length(), f9->zero());
            for (std::size_t i = 0; i < k; ++i) {
                Fe ci = f9->from_index(m % 9);
                m /= 9;
                if (ci.is_zero()) continue;
                for (std::size_t t = 0; t < code.length(); ++t)
                    w[t] = w[t] + ci * g.at(i, t);
            }
            bool orth = true;
            for (std::size_t j = 0; j < g.rows() && orth; ++j)
                orth = galois_inner(f9, g.row(j), w, e).is_zero();
            if (orth) ++count;
        }
        // count = 9^{hull_dim}
        std::uint64_t expect = 1;
        for (std::size_t i = 0; i < hr.hull_dim; ++i) expect *= 9;
        CHECK(count == expect);
    }
}

TEST_CASE("hull_basis spans exactly the hull") {
    auto f9 = gf9();
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 3 + rng() % 4;
        std::size_t k = 1 + rng() % (n - 1);
        unsigned e = rng() % 2;
        GrsCode code = random_code(f9, rng, n, k, rng() % 2);
        MatrixGF basis = hull_basis(code, e);
        HullReport hr = hull_dim(code, e);
        CHECK(basis.rows() == hr.hull_dim);
        if (basis.rows()) CHECK(rank(basis) == basis.rows());
        for (std::size_t i = 0; i < basis.rows(); ++i)
            CHECK(in_hull_brute(code, basis.row(i), e));
    }
}

TEST_CASE("euclidean and hermitian aliases") {
    auto f9 = gf9();
    std::mt19937_64 rng(53);
    GrsCode code = random_code(f9, rng, 5, 2, false);
    CHECK(euclidean_hull(code).hull_dim == hull_dim(code, 0).hull_dim);
    CHECK(hermitian_hull(code).hull_dim == hull_dim(code, 1).hull_dim);
    auto f27 = FieldCtx::make(3, 3);
    std::vector<Fe> a{f27->zero(), f27->one(), f27->from_int(2)};
    GrsCode odd = make_grs(f27, a, std::vector<Fe>(3, f27->one()), 1, false);
    CHECK_THROWS_AS(hermitian_hull(odd), EDoesNotDivideH);
}

TEST_CASE("hull membership witness: polynomial criterion matches brute force") {
    auto f9 = gf9();
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 3 + rng() % 4;
        std::size_t k = 1 + rng() % (n - 1);
        bool ext = rng() % 2;
        unsigned e = rng() % 2;
        GrsCode code = random_code(f9, rng, n, k, ext);
        // all monomials and a batch of random f of degree <= k-1
        std::vector<Poly> fs;
        for (std::size_t d = 0; d < k; ++d) {
            Poly mono{std::vector<Fe>(d + 1, f9->zero())};
            mono.c[d] = f9->one();
            fs.push_back(mono);
        }
        for (int i = 0; i < 60; ++i) {
            Poly f{std::vector<Fe>(k, f9->zero())};
            for (std::size_t j = 0; j < k; ++j) f.c[j] = f9->from_index(rng() % 9);
            fs.push_back(f);
        }
        for (const Poly& f : fs) {
            auto witness = lemma1_membership(code, f, e);
            bool brute = in_hull_brute(code, encode(code, f), e);
            CHECK(witness.has_value() == brute);
            if (witness) {
                // g really interpolates v_i^{p^e+1} f(a_i)^{p^e} / u_i
                std::vector<Fe> u = u_vector(f9, code.a);
                std::uint64_t pe = f9->p_pow(e);
                for (std::size_t i = 0; i < code.n(); ++i) {
                    Fe lhs = f9->pow(code.v[i], pe + 1) * f9->pow(f.eval(code.a[i]), pe);
                    CHECK(witness->eval(code.a[i]) * u[i] == lhs);
                }
            }
        }
    }
}
