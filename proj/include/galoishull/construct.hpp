#pragma once

// Theorem-level constructions of MDS (extended) GRS codes with e-Galois hull
// of a prescribed dimension, plus Euclidean-orthogonal seed handling.

#include <optional>
#include <variant>

#include "galoishull/hull.hpp"

namespace ghl {

struct Thm31Params {
    std::uint64_t p = 0;
    unsigned e = 0;
    unsigned m = 0;  // even; q = p^{em}
    std::uint64_t t = 0;  // divides p^e - 1
    unsigned r = 0;       // <= m-1; n = t p^{er}
    std::size_t k = 0;
    std::size_t l = 0;    // 0 <= l <= k-1
};

struct Thm32Params {
    std::uint64_t p = 0;
    unsigned h = 0;
    unsigned e = 0;       // 2e | h
    std::uint64_t t = 0;  // 1 <= t <= p^e; n = t p^{h-e}
    std::size_t k = 0;
    std::size_t l = 0;
};

struct EuclideanSeed {
    std::shared_ptr<const FieldCtx> ctx;
    std::vector<Fe> a;
    std::vector<Fe> v;
    std::optional<Fe> lambda;  // plain case: v_i^2 = lambda u_i; extended: v_i^2 = -u_i
    bool extended = false;
};

// floor((p^e + n - 1) / (p^e + 1))
std::size_t dimension_bound(std::uint64_t pe, std::size_t n);

GrsCode thm31_construct(const Thm31Params& params, bool verify = true);
GrsCode thm32_construct(const Thm32Params& params, bool verify = true);
GrsCode thm41_lift(const EuclideanSeed& seed, unsigned e, std::size_t k, std::size_t l,
                   bool verify = true);
GrsCode thm42_lift(const EuclideanSeed& seed, unsigned e, std::size_t k, std::size_t l,
                   bool verify = true);

// Lemma-2 witness search on an explicit point set
std::optional<EuclideanSeed> find_euclidean_seed(const std::shared_ptr<const FieldCtx>& ctx,
                                                 const std::vector<Fe>& a, bool extended);

// deterministic seed families
EuclideanSeed mu_subgroup_seed(const std::shared_ptr<const FieldCtx>& ctx, std::uint64_t n);
EuclideanSeed full_field_seed(const std::shared_ptr<const FieldCtx>& ctx);

// trace cosets T_i = {x : Tr(x) = b_i} for Theorem 3.2, each sorted lexicographically
std::vector<std::vector<Fe>> trace_cosets(const std::shared_ptr<const FieldCtx>& ctx,
                                          unsigned e, const std::vector<Fe>& bs);

}  // namespace ghl
