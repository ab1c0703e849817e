#pragma once

// e-Galois inner products, duals and hull dimensions, plus the polynomial
// hull-membership oracle for (extended) GRS codes.

#include <optional>

#include "galoishull/grs.hpp"

namespace ghl {

struct HullReport {
    unsigned e = 0;            // reduced mod h
    std::size_t hull_dim = 0;
    std::size_t dual_dim = 0;
    bool method_agreement = false;  // intersection vs. rank identity
};

Fe galois_inner(const std::shared_ptr<const FieldCtx>& ctx, const std::vector<Fe>& a,
                const std::vector<Fe>& b, unsigned e);

// basis of C^{perp_e} for the code with generator matrix g (full row rank)
MatrixGF galois_dual_basis(const MatrixGF& g, unsigned e);

// hull dimension by honest subspace intersection, cross-checked against
// k - rank(G^{(p^e)} G^T)
HullReport hull_dim(const GrsCode& code, unsigned e);
HullReport hull_dim(const MatrixGF& g, unsigned e);

// RREF basis of Hull_e as row vectors
MatrixGF hull_basis(const GrsCode& code, unsigned e);

// Returns the witness polynomial g when encode(f) lies in Hull_e(code):
// deg(g) <= n-k-1 (plain) or <= n-k with f_{k-1}^{p^e} = -g_{n-k} (extended).
std::optional<Poly> lemma1_membership(const GrsCode& code, const Poly& f, unsigned e);

// named aliases
inline HullReport euclidean_hull(const GrsCode& code) { return hull_dim(code, 0); }
HullReport hermitian_hull(const GrsCode& code);  // requires even h

}  // namespace ghl
