#pragma once

// Exact arithmetic in GF(p^h), p an odd prime. A FieldCtx owns the modulus,
// a verified primitive element and (for small fields) a discrete-log table;
// elements are polynomial-basis coefficient vectors, constant term first.

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "galoishull/errors.hpp"

namespace ghl {

class FieldCtx;

class Fe {
public:
    Fe() = default;
    Fe(const FieldCtx* ctx, std::vector<std::uint32_t> coeffs);

    const FieldCtx* ctx() const { return ctx_; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    bool is_zero() const;
    std::uint64_t index() const;  // sum c_i * p^i, a canonical encoding

    Fe operator+(const Fe& o) const;
    Fe operator-(const Fe& o) const;
    Fe operator*(const Fe& o) const;
    Fe operator/(const Fe& o) const;
    Fe operator-() const;
    bool operator==(const Fe& o) const;
    bool operator!=(const Fe& o) const { return !(*this == o); }

private:
    const FieldCtx* ctx_ = nullptr;
    std::vector<std::uint32_t> c_;
};

// Lexicographic order on coefficient lists, constant term compared first.
// This is the tie-break order used everywhere determinism is needed.
bool lex_less(const Fe& a, const Fe& b);

class FieldCtx {
public:
    // Builds GF(p^h). If no modulus is given, the lexicographically smallest
    // monic irreducible of degree h is searched; the primitive element is the
    // lex-smallest one. dlog_limit caps the discrete-log table size
    // (default 2^20, overridable through GHL_DLOG_LIMIT / GHC_DLOG_LIMIT).
    static std::shared_ptr<const FieldCtx> make(
        std::uint64_t p, unsigned h,
        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
        std::optional<std::uint64_t> dlog_limit = std::nullopt);

    std::uint64_t p() const { return p_; }
    unsigned h() const { return h_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Fe zero() const;
    Fe one() const;
    Fe g() const { return g_; }  // primitive element
    Fe from_coeffs(const std::vector<std::int64_t>& c) const;  // reduced mod p
    Fe from_index(std::uint64_t idx) const;
    Fe from_int(std::int64_t v) const;  // prime-subfield scalar

    Fe add(const Fe& a, const Fe& b) const;
    Fe sub(const Fe& a, const Fe& b) const;
    Fe neg(const Fe& a) const;
    Fe mul(const Fe& a, const Fe& b) const;
    Fe inv(const Fe& a) const;
    Fe pow(const Fe& a, std::uint64_t e) const;
    Fe pow_signed(const Fe& a, std::int64_t e) const;  // a != 0, exponent mod q-1

    // x^{p^e}; e is reduced mod h
    Fe frobenius(const Fe& x, unsigned e) const;
    // x + x^{p^e} + ... + x^{p^{h-e}}; requires e | h
    Fe trace_to(const Fe& x, unsigned e) const;
    bool in_subfield(const Fe& x, unsigned e) const;  // fixed by Frobenius^e

    // membership in E = {x^{p^e+1} : x in F_q^*}
    bool in_image_E(const Fe& c, unsigned e) const;
    // some v with v^{p^e+1} = c; smallest-dlog root when the table exists
    Fe solve_norm_equation(const Fe& c, unsigned e) const;
    std::optional<Fe> sqrt(const Fe& c) const;

    std::uint64_t element_order(const Fe& c) const;
    // element of F_{p^e}^* of multiplicative order exactly t (smallest dlog)
    Fe find_element_of_order(std::uint64_t t, unsigned subfield_e) const;

    bool has_dlog_table() const { return !dlog_.empty(); }
    std::optional<std::uint64_t> dlog(const Fe& c) const;

    // elements of F_{p^e} inside this field, sorted by lex_less
    std::vector<Fe> subfield_elements(unsigned e) const;
    std::vector<Fe> all_elements() const;  // lex order; guarded for large q

    const std::vector<std::pair<std::uint64_t, unsigned>>& unit_group_factors() const {
        return q1_factors_;
    }

    std::uint64_t p_pow(unsigned e) const;  // p^e

private:
    FieldCtx() = default;

    std::uint64_t p_ = 0;
    unsigned h_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;                     // degree h, monic
    std::vector<std::vector<std::uint32_t>> xpow_red_;       // x^{h+j} mod modulus
    Fe g_;
    std::vector<std::uint64_t> dlog_;                        // index -> exponent
    std::vector<std::pair<std::uint64_t, unsigned>> q1_factors_;

    void check_same(const Fe& a, const Fe& b) const;
    void check_mine(const Fe& a) const;
};

std::uint64_t default_dlog_limit();

}  // namespace ghl
