#pragma once

// EAQECC parameter derivation from hull dimensions, the rank/hull identity,
// the quantum Singleton bound and exact big-integer parameter tables.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "galoishull/construct.hpp"

namespace ghl {

using BigInt = boost::multiprecision::cpp_int;

enum class SingletonStatus { NotApplicable, Satisfied, Equality, Violated };

struct EaqeccParams {
    std::uint64_t n = 0;   // channel qubits
    std::uint64_t kq = 0;  // logical dimension
    std::uint64_t d = 0;
    std::uint64_t c = 0;   // entangled pairs
    std::uint64_t p = 0;
    unsigned h = 0;
    bool mds = false;      // Singleton equality under the d <= (n+2)/2 guard
    SingletonStatus singleton = SingletonStatus::NotApplicable;
};

SingletonStatus singleton_check(const BigInt& n, const BigInt& kq, const BigInt& d,
                                const BigInt& c);

struct DerivedEaqecc {
    EaqeccParams primal;    // [[n, k-l, d; n-k-l]] from Hull_e
    EaqeccParams dual_side; // [[n, n-k-l', k+1; k-l']] from Hull_{h-e}
    HullReport primal_hull;
    HullReport dual_hull;
    MdsResult classical_mds;
};

DerivedEaqecc derive_eaqecc(const GrsCode& code, unsigned e);

// literal rank(H H^{T_e}) with H the RREF Euclidean-dual basis of the generator
std::size_t rank_formula_c(const GrsCode& code, unsigned e);

struct RankConventionReport {
    std::size_t c = 0;              // the literal rank
    bool matches_e = false;         // c == n - k - dim Hull_e
    bool matches_h_minus_e = false; // c == n - k - dim Hull_{h-e}
};
RankConventionReport check_rank_conventions(const GrsCode& code, unsigned e);

struct BigParamRow {
    std::string theorem;  // "5.5".."5.8"
    std::uint64_t p = 0;
    std::uint64_t h_or_m = 0;
    unsigned e = 0;
    std::uint64_t t = 0;
    std::uint64_t r = 0;
    BigInt n, k, l, kq, d, c;
    bool mds = false;
    SingletonStatus singleton = SingletonStatus::NotApplicable;
};

enum class TableSide { Primal, Dual };

struct TableSpec {
    std::string theorem;  // "5.5" (Thm 3.1 family), "5.6" (3.2), "5.7" (4.1), "5.8" (4.2)
    std::uint64_t p = 0;
    std::uint64_t m = 0;  // 5.5 only
    std::uint64_t h = 0;  // 5.6/5.7/5.8
    unsigned e = 0;
    std::uint64_t t = 0;  // 5.5/5.6
    std::uint64_t r = 0;  // 5.5
    BigInt n_seed = 0;    // 5.7/5.8: length of the Euclidean-orthogonal seed code
    BigInt k_lo = 1, k_hi = 0;
    BigInt l_lo = 0, l_hi = 0;
    TableSide side = TableSide::Primal;
};

// symbolic enumeration; never constructs a field
std::vector<BigParamRow> param_table(const TableSpec& spec);

std::string table_to_csv(const std::vector<BigParamRow>& rows);

// k upper bound floor((pe + n - 1)/(pe + 1)) with big integers
BigInt big_dimension_bound(const BigInt& pe, const BigInt& n);

}  // namespace ghl
