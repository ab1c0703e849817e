#pragma once

// (Extended) generalized Reed-Solomon codes: generator matrices, encoding,
// the u_i products, vanishing polynomials and exact MDS verification.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "galoishull/matrix.hpp"

namespace ghl {

struct Poly {
    std::vector<Fe> c;  // ascending, may carry trailing zeros

    int degree() const;  // -1 for the zero polynomial
    Fe coeff(const FieldCtx* ctx, std::size_t i) const;
    Fe eval(const Fe& x) const;
    void trim();
};

Poly poly_from_roots(const std::shared_ptr<const FieldCtx>& ctx, const std::vector<Fe>& roots);
Poly poly_mul(const std::shared_ptr<const FieldCtx>& ctx, const Poly& a, const Poly& b);
// quotient of f by (x - a); requires f(a) = 0 handled by caller (remainder dropped)
Poly poly_divide_linear(const std::shared_ptr<const FieldCtx>& ctx, const Poly& f, const Fe& a);
Poly poly_derivative(const std::shared_ptr<const FieldCtx>& ctx, const Poly& f);
// raise every coefficient to p^e; equals f(x)^{p^e} with x^{p^e} substituted back
Poly poly_coeff_frobenius(const std::shared_ptr<const FieldCtx>& ctx, const Poly& f, unsigned e);

struct GrsCode {
    std::shared_ptr<const FieldCtx> ctx;
    std::vector<Fe> a;  // distinct evaluation points
    std::vector<Fe> v;  // nonzero column multipliers
    std::size_t k = 0;
    bool extended = false;

    std::size_t n() const { return a.size(); }
    std::size_t length() const { return a.size() + (extended ? 1 : 0); }
};

// validates distinctness, nonzero multipliers and 1 <= k <= n <= q
GrsCode make_grs(std::shared_ptr<const FieldCtx> ctx, std::vector<Fe> a, std::vector<Fe> v,
                 std::size_t k, bool extended);

// u_i = prod_{j != i} (a_i - a_j)^{-1}
std::vector<Fe> u_vector(const std::shared_ptr<const FieldCtx>& ctx, const std::vector<Fe>& a);

MatrixGF generator_matrix(const GrsCode& code);
std::vector<Fe> encode(const GrsCode& code, const Poly& f);

inline constexpr std::size_t kExactDistanceGuard = 22;

// exact minimum Hamming distance via column-subset descent; guarded by length
std::size_t min_distance_exact(const GrsCode& code, std::size_t guard = kExactDistanceGuard);

struct MdsResult {
    bool mds = false;
    bool exact = false;  // false: structural argument only (length beyond guard)
};
MdsResult is_mds(const GrsCode& code, std::size_t guard = kExactDistanceGuard);

Fe psi(const std::shared_ptr<const FieldCtx>& ctx, const std::vector<Fe>& B, const Fe& x);
Fe delta(const std::shared_ptr<const FieldCtx>& ctx, const std::vector<Fe>& B, const Fe& x);

// w with GRS_{n-k}(a, w) the Euclidean dual of GRS_k(a, v); plain codes only
std::vector<Fe> dual_multipliers(const GrsCode& code);

// unique interpolant of degree <= n-1 through (xs_i, ys_i)
Poly lagrange_interpolate(const std::shared_ptr<const FieldCtx>& ctx,
                          const std::vector<Fe>& xs, const std::vector<Fe>& ys);

}  // namespace ghl
