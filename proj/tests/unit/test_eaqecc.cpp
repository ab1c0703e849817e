#include <doctest.h>

#include <random>

#include "galoishull/eaqecc.hpp"
#include "galoishull/serialize.hpp"

using namespace ghl;

TEST_CASE("singleton_check") {
    // [[7,1,6;4]]: d=6 > (7+2)/2 -> guard trips
    CHECK(singleton_check(7, 1, 6, 4) == SingletonStatus::NotApplicable);
    // [[7,4,3;1]]: 7+1-4 = 4 = 2*(3-1) -> equality
    CHECK(singleton_check(7, 4, 3, 1) == SingletonStatus::Equality);
    CHECK(singleton_check(7, 3, 3, 1) == SingletonStatus::Satisfied);
    CHECK(singleton_check(7, 5, 3, 1) == SingletonStatus::Violated);
}

TEST_CASE("derive_eaqecc on a hull-1 [7,2] fixture") {
    Thm31Params prm{3, 1, 2, 2, 1, 2, 1};
    GrsCode code = thm31_construct(prm);
    DerivedEaqecc d = derive_eaqecc(code, 1);
    CHECK(d.primal_hull.hull_dim == 1);
    CHECK(d.primal.n == 7);
    CHECK(d.primal.kq == 1);
    CHECK(d.primal.d == 6);
    CHECK(d.primal.c == 4);
    // dual side: [[7, 7-2-l', 3; 2-l']]
    std::size_t lp = d.dual_hull.hull_dim;
    CHECK(d.dual_side.n == 7);
    CHECK(d.dual_side.kq == 5 - lp);
    CHECK(d.dual_side.d == 3);
    CHECK(d.dual_side.c == 2 - lp);
    CHECK(d.classical_mds.mds);
}

TEST_CASE("rank identity: c = n - k - hull_dim under the literal convention") {
    std::mt19937_64 rng(61);
    for (auto [p, h] : {std::pair{3u, 2u}, {5u, 2u}, {3u, 3u}}) {
        auto ctx = FieldCtx::make(p, h);
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t n = 3 + rng() % 4;
            if (n > ctx->q()) n = static_cast<std::size_t>(ctx->q()) - 1;
            std::size_t k = 1 + rng() % (n - 1);
            std::vector<std::uint64_t> pool(ctx->q());
            for (std::uint64_t i = 0; i < ctx->q(); ++i) pool[i] = i;
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<Fe> a, v;
            for (std::size_t i = 0; i < n; ++i) {
                a.push_back(ctx->from_index(pool[i]));
                v.push_back(ctx->from_index(1 + rng() % (ctx->q() - 1)));
            }
            GrsCode code = make_grs(ctx, a, v, k, rng() % 2);
            for (unsigned e = 0; e < h; ++e) {
                RankConventionReport r = check_rank_conventions(code, e);
                CHECK(r.matches_e);
                CHECK(r.c == code.length() - k - hull_dim(code, e).hull_dim);
            }
        }
    }
}

TEST_CASE("param_table reproduces the large published rows exactly") {
    // family one: p=5, m=4, e=3, t=31, r=3 -> n+1 = 31*5^9 + 1 = 60546876
    TableSpec s1;
    s1.theorem = "5.5";
    s1.p = 5; s1.m = 4; s1.e = 3; s1.t = 31; s1.r = 3;
    s1.k_lo = 480531; s1.k_hi = 480531;
    s1.l_lo = 0; s1.l_hi = 0;
    auto rows1 = param_table(s1);
    REQUIRE(rows1.size() == 1);
    CHECK(rows1[0].n == 60546876);
    CHECK(big_dimension_bound(BigInt(125), BigInt(60546875)) == 480531);

    // family two: p=3, h=16, e=4, t=73 -> n+1 = 73*3^12 + 1 = 38795194
    TableSpec s2;
    s2.theorem = "5.6";
    s2.p = 3; s2.h = 16; s2.e = 4; s2.t = 73;
    s2.k_lo = 1; s2.k_hi = 1; s2.l_lo = 0; s2.l_hi = 0;
    auto rows2 = param_table(s2);
    REQUIRE(rows2.size() == 1);
    CHECK(rows2[0].n == 38795194);
    CHECK(big_dimension_bound(BigInt(81), BigInt(38795193)) == 473113);
}

TEST_CASE("param_table rows: MDS flag means Singleton equality when the guard holds") {
    TableSpec s;
    s.theorem = "5.5";
    s.p = 3; s.m = 2; s.e = 1; s.t = 2; s.r = 1;
    s.k_hi = 0;  // sweep up to the dimension bound
    s.l_hi = 10;
    for (TableSide side : {TableSide::Primal, TableSide::Dual}) {
        s.side = side;
        for (const auto& row : param_table(s)) {
            if (row.mds) {
                CHECK(row.singleton == SingletonStatus::Equality);
                CHECK(row.n + row.c - row.kq == 2 * (row.d - 1));
                CHECK(2 * row.d <= row.n + 2);
            }
        }
    }
}

TEST_CASE("param_table symbolic prediction matches measured small code") {
    TableSpec s;
    s.theorem = "5.5";
    s.p = 3; s.m = 2; s.e = 1; s.t = 2; s.r = 1;
    s.k_lo = 2; s.k_hi = 2; s.l_lo = 1; s.l_hi = 1;
    auto rows = param_table(s);
    REQUIRE(rows.size() == 1);
    GrsCode code = thm31_construct({3, 1, 2, 2, 1, 2, 1});
    DerivedEaqecc d = derive_eaqecc(code, 1);
    CHECK(rows[0].n == d.primal.n);
    CHECK(rows[0].kq == d.primal.kq);
    CHECK(rows[0].d == d.primal.d);
    CHECK(rows[0].c == d.primal.c);
}

TEST_CASE("param_table input validation") {
    TableSpec s;
    s.theorem = "5.5";
    s.p = 3; s.m = 3; s.e = 1; s.t = 2; s.r = 1;
    CHECK_THROWS_AS(param_table(s), InvalidRanges);  // m odd
    s.theorem = "9.9";
    CHECK_THROWS_AS(param_table(s), InvalidRanges);
    TableSpec s6;
    s6.theorem = "5.6";
    s6.p = 3; s6.h = 3; s6.e = 1; s6.t = 1;
    CHECK_THROWS_AS(param_table(s6), InvalidRanges);  // 2e does not divide h
}

TEST_CASE("csv and json serialization are stable") {
    TableSpec s;
    s.theorem = "5.5";
    s.p = 3; s.m = 2; s.e = 1; s.t = 2; s.r = 1;
    s.k_lo = 2; s.k_hi = 2; s.l_lo = 1; s.l_hi = 1;
    auto rows = param_table(s);
    std::string csv = table_to_csv(rows);
    CHECK(csv == "theorem,p,h_or_m,e,t,r,n,k,l,kq,d,c,mds\n"
                 "5.5,3,2,1,2,1,7,2,1,1,6,4,false\n");
    std::string a = dump_stable(table_to_json(rows));
    std::string b = dump_stable(table_to_json(rows));
    CHECK(a == b);
    CHECK(a.back() == '\n');
}

TEST_CASE("code json round-trip is byte-stable") {
    GrsCode code = thm31_construct({3, 1, 2, 2, 1, 2, 1});
    Json j = code_to_json(code);
    std::string s1 = dump_stable(j);
    GrsCode back = code_from_json(j);
    CHECK(dump_stable(code_to_json(back)) == s1);
    CHECK(back.k == code.k);
    CHECK(back.extended == code.extended);
    CHECK(generator_matrix(back).rows() == generator_matrix(code).rows());
    HullReport hr = hull_dim(back, 1);
    CHECK(hr.hull_dim == 1);
}
