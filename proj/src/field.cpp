#include "galoishull/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace ghl {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(u64 n) {
    if (n < 2) return false;
    for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % sp == 0) return n == sp;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// extended gcd: returns g, sets x,y with a*x + b*y = g
i128 egcd(i128 a, i128 b, i128& x, i128& y) {
    if (b == 0) { x = 1; y = 0; return a; }
    i128 x1, y1;
    i128 g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

u64 modinv(u64 a, u64 m) {
    i128 x, y;
    i128 g = egcd(i128(a % m), i128(m), x, y);
    if (g != 1) throw Error("modinv: arguments not coprime");
    i128 r = x % i128(m);
    if (r < 0) r += m;
    return static_cast<u64>(r);
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<std::pair<u64, unsigned>> f;
    for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            unsigned m = 0;
            while (n % d == 0) { n /= d; ++m; }
            f.emplace_back(d, m);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

// ---- dense polynomials over Z_p (ascending coefficients) ----

using ZpPoly = std::vector<u64>;

void trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly poly_mod(ZpPoly a, const ZpPoly& f, u64 p) {
    // f monic
    trim(a);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        u64 c = a.back();
        std::size_t shift = a.size() - 1 - df;
        if (c != 0) {
            for (std::size_t i = 0; i < df; ++i) {
                u64 t = mulmod(c, f[i], p);
                a[shift + i] = (a[shift + i] + p - t) % p;
            }
        }
        a.pop_back();
        trim(a);
        if (a.size() <= df) break;
    }
    return a;
}

ZpPoly poly_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    return poly_mod(std::move(r), f, p);
}

ZpPoly poly_powmod(ZpPoly base, u64 e, const ZpPoly& f, u64 p) {
    ZpPoly r{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

ZpPoly poly_gcd(ZpPoly a, ZpPoly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // reduce a mod b (b made monic on the fly)
        u64 lead_inv = modinv(b.back(), p);
        ZpPoly bm = b;
        for (auto& c : bm) c = mulmod(c, lead_inv, p);
        a = poly_mod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const std::vector<std::uint32_t>& fc, u64 p, unsigned h) {
    ZpPoly f(fc.begin(), fc.end());
    if (f.size() != h + 1 || f.back() != 1) return false;
    if (h == 1) return true;
    ZpPoly x{0, 1};
    // x^{p^h} == x mod f
    ZpPoly t = x;
    for (unsigned i = 0; i < h; ++i) t = poly_powmod(t, p, f, p);
    ZpPoly tx = t;
    // t - x
    if (tx.size() < 2) tx.resize(2, 0);
    tx[1] = (tx[1] + p - 1) % p;
    trim(tx);
    if (!tx.empty()) return false;
    for (auto [r, m] : factorize(h)) {
        (void)m;
        ZpPoly s = x;
        for (unsigned i = 0; i < h / r; ++i) s = poly_powmod(s, p, f, p);
        if (s.size() < 2) s.resize(2, 0);
        s[1] = (s[1] + p - 1) % p;
        trim(s);
        ZpPoly gpoly = poly_gcd(f, s, p);
        if (gpoly.size() != 1) return false;
    }
    return true;
}

}  // namespace

u64 default_dlog_limit() {
    for (const char* name : {"GHL_DLOG_LIMIT", "GHC_DLOG_LIMIT"}) {
        if (const char* v = std::getenv(name)) {
            char* end = nullptr;
            u64 lim = std::strtoull(v, &end, 10);
            if (end && *end == '\0' && lim > 0) return lim;
        }
    }
    return u64(1) << 20;
}

// ---- Fe ----

Fe::Fe(const FieldCtx* ctx, std::vector<std::uint32_t> coeffs)
    : ctx_(ctx), c_(std::move(coeffs)) {}

bool Fe::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](std::uint32_t v) { return v == 0; });
}

std::uint64_t Fe::index() const {
    u64 idx = 0;
    for (std::size_t i = c_.size(); i-- > 0;) idx = idx * ctx_->p() + c_[i];
    return idx;
}

Fe Fe::operator+(const Fe& o) const { return ctx_->add(*this, o); }
Fe Fe::operator-(const Fe& o) const { return ctx_->sub(*this, o); }
Fe Fe::operator*(const Fe& o) const { return ctx_->mul(*this, o); }
Fe Fe::operator/(const Fe& o) const { return ctx_->mul(*this, ctx_->inv(o)); }
Fe Fe::operator-() const { return ctx_->neg(*this); }

bool Fe::operator==(const Fe& o) const {
    if (ctx_ != o.ctx_) throw FieldMismatch("comparing elements of different fields");
    return c_ == o.c_;
}

bool lex_less(const Fe& a, const Fe& b) {
    if (a.ctx() != b.ctx()) throw FieldMismatch("ordering elements of different fields");
    return a.coeffs() < b.coeffs();
}

// ---- FieldCtx ----

void FieldCtx::check_mine(const Fe& a) const {
    if (a.ctx() != this) throw FieldMismatch("element belongs to a different FieldCtx");
}

void FieldCtx::check_same(const Fe& a, const Fe& b) const {
    check_mine(a);
    check_mine(b);
}

std::shared_ptr<const FieldCtx> FieldCtx::make(
    u64 p, unsigned h, std::optional<std::vector<std::uint32_t>> modulus,
    std::optional<u64> dlog_limit) {
    if (p < 3 || p % 2 == 0 || !miller_rabin(p))
        throw NonPrimeP("p must be an odd prime, got " + std::to_string(p));
    if (h < 1) throw DegreeMismatch("extension degree h must be >= 1");
    // q = p^h, guarded against overflow past 2^40
    u128 q = 1;
    for (unsigned i = 0; i < h; ++i) {
        q *= p;
        if (q > (u128(1) << 40)) throw Error("q = p^h exceeds the supported bound 2^40");
    }

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->h_ = h;
    ctx->q_ = static_cast<u64>(q);

    if (modulus) {
        auto& f = *modulus;
        if (f.size() != h + 1)
            throw DegreeMismatch("modulus must have degree exactly h");
        for (auto& c : f)
            if (c >= p) throw DegreeMismatch("modulus coefficient out of range [0,p)");
        if (f.back() != 1) throw DegreeMismatch("modulus must be monic");
        if (!is_irreducible(f, p, h))
            throw ReducibleModulus("modulus is reducible over Z_p");
        ctx->modulus_ = f;
    } else {
        // lex-smallest monic irreducible: odometer over (c_0,...,c_{h-1}),
        // constant term most significant, last coordinate fastest
        std::vector<std::uint32_t> f(h + 1, 0);
        f[h] = 1;
        bool found = false;
        while (true) {
            if (is_irreducible(f, p, h)) { found = true; break; }
            std::size_t i = h;
            while (i-- > 0) {
                if (++f[i] < p) break;
                f[i] = 0;
                if (i == 0) goto search_done;
            }
        }
    search_done:
        if (!found) throw Error("no irreducible modulus found");  // unreachable
        ctx->modulus_ = f;
    }

    // precompute x^{h+j} mod modulus, j = 0..h-2
    {
        ZpPoly f(ctx->modulus_.begin(), ctx->modulus_.end());
        ctx->xpow_red_.clear();
        ZpPoly cur(h + 1, 0);
        cur[h] = 1;
        for (unsigned j = 0; j + 1 < h; ++j) {
            ZpPoly red = poly_mod(cur, f, p);
            red.resize(h, 0);
            ctx->xpow_red_.emplace_back(red.begin(), red.end());
            cur.insert(cur.begin(), 0);  // multiply by x
        }
    }

    ctx->q1_factors_ = factorize(ctx->q_ - 1);

    // lex-smallest primitive element
    {
        std::vector<std::uint32_t> c(h, 0);
        bool found = false;
        while (true) {
            std::size_t i = h;
            while (i-- > 0) {
                if (++c[i] < p) break;
                c[i] = 0;
                if (i == 0) goto prim_done;
            }
            Fe cand(ctx.get(), c);
            bool prim = true;
            for (auto [r, m] : ctx->q1_factors_) {
                (void)m;
                if (ctx->pow(cand, (ctx->q_ - 1) / r) == ctx->one()) { prim = false; break; }
            }
            if (prim) { ctx->g_ = cand; found = true; break; }
        }
    prim_done:
        if (!found) throw Error("no primitive element found");  // unreachable
    }

    u64 limit = dlog_limit.value_or(default_dlog_limit());
    if (ctx->q_ <= limit) {
        ctx->dlog_.assign(ctx->q_, 0);
        Fe acc = ctx->one();
        for (u64 i = 0; i < ctx->q_ - 1; ++i) {
            ctx->dlog_[acc.index()] = i;
            acc = ctx->mul(acc, ctx->g_);
        }
        if (acc != ctx->one()) throw Error("primitive element order check failed");
    }
    return ctx;
}

Fe FieldCtx::zero() const { return Fe(this, std::vector<std::uint32_t>(h_, 0)); }

Fe FieldCtx::one() const {
    std::vector<std::uint32_t> c(h_, 0);
    c[0] = 1;
    return Fe(this, c);
}

Fe FieldCtx::from_coeffs(const std::vector<std::int64_t>& in) const {
    if (in.size() > h_) throw DegreeMismatch("too many coefficients for this field");
    std::vector<std::uint32_t> c(h_, 0);
    for (std::size_t i = 0; i < in.size(); ++i) {
        std::int64_t v = in[i] % static_cast<std::int64_t>(p_);
        if (v < 0) v += p_;
        c[i] = static_cast<std::uint32_t>(v);
    }
    return Fe(this, std::move(c));
}

Fe FieldCtx::from_index(u64 idx) const {
    std::vector<std::uint32_t> c(h_, 0);
    for (unsigned i = 0; i < h_; ++i) {
        c[i] = static_cast<std::uint32_t>(idx % p_);
        idx /= p_;
    }
    return Fe(this, std::move(c));
}

Fe FieldCtx::from_int(std::int64_t v) const { return from_coeffs({v}); }

Fe FieldCtx::add(const Fe& a, const Fe& b) const {
    check_same(a, b);
    std::vector<std::uint32_t> c(h_);
    for (unsigned i = 0; i < h_; ++i) c[i] = (a.coeffs()[i] + b.coeffs()[i]) % p_;
    return Fe(this, std::move(c));
}

Fe FieldCtx::sub(const Fe& a, const Fe& b) const {
    check_same(a, b);
    std::vector<std::uint32_t> c(h_);
    for (unsigned i = 0; i < h_; ++i)
        c[i] = static_cast<std::uint32_t>((a.coeffs()[i] + p_ - b.coeffs()[i]) % p_);
    return Fe(this, std::move(c));
}

Fe FieldCtx::neg(const Fe& a) const {
    check_mine(a);
    std::vector<std::uint32_t> c(h_);
    for (unsigned i = 0; i < h_; ++i)
        c[i] = static_cast<std::uint32_t>((p_ - a.coeffs()[i]) % p_);
    return Fe(this, std::move(c));
}

Fe FieldCtx::mul(const Fe& a, const Fe& b) const {
    check_same(a, b);
    std::vector<u64> prod(2 * h_ - 1, 0);
    for (unsigned i = 0; i < h_; ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (unsigned j = 0; j < h_; ++j)
            prod[i + j] = (prod[i + j] + u64(a.coeffs()[i]) * b.coeffs()[j]) % p_;
    }
    std::vector<std::uint32_t> c(h_);
    for (unsigned i = 0; i < h_; ++i) c[i] = static_cast<std::uint32_t>(prod[i]);
    for (unsigned j = 0; j + 1 < h_; ++j) {
        u64 hi = prod[h_ + j];
        if (hi == 0) continue;
        const auto& red = xpow_red_[j];
        for (unsigned i = 0; i < h_; ++i)
            c[i] = static_cast<std::uint32_t>((c[i] + hi * red[i]) % p_);
    }
    return Fe(this, std::move(c));
}

Fe FieldCtx::inv(const Fe& a) const {
    check_mine(a);
    if (a.is_zero()) throw ZeroInput("division by zero");
    return pow(a, q_ - 2);
}

Fe FieldCtx::pow(const Fe& a, u64 e) const {
    check_mine(a);
    Fe r = one();
    Fe base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Fe FieldCtx::pow_signed(const Fe& a, std::int64_t e) const {
    check_mine(a);
    if (a.is_zero()) {
        if (e <= 0) throw ZeroInput("0 raised to a non-positive power");
        return zero();
    }
    std::int64_t m = static_cast<std::int64_t>(q_ - 1);
    std::int64_t r = e % m;
    if (r < 0) r += m;
    return pow(a, static_cast<u64>(r));
}

u64 FieldCtx::p_pow(unsigned e) const {
    u64 r = 1;
    for (unsigned i = 0; i < e; ++i) r *= p_;
    return r;
}

Fe FieldCtx::frobenius(const Fe& x, unsigned e) const {
    check_mine(x);
    e %= h_;
    if (e == 0) return x;
    return pow(x, p_pow(e));
}

Fe FieldCtx::trace_to(const Fe& x, unsigned e) const {
    check_mine(x);
    if (e == 0 || h_ % e != 0) throw EDoesNotDivideH("trace_to requires e | h");
    Fe acc = zero();
    Fe cur = x;
    for (unsigned i = 0; i < h_ / e; ++i) {
        acc = add(acc, cur);
        cur = pow(cur, p_pow(e));
    }
    return acc;
}

bool FieldCtx::in_subfield(const Fe& x, unsigned e) const {
    check_mine(x);
    return frobenius(x, e % h_) == x;
}

bool FieldCtx::in_image_E(const Fe& c, unsigned e) const {
    check_mine(c);
    if (c.is_zero()) throw ZeroInput("in_image_E requires nonzero input");
    e %= h_;
    u64 a = p_pow(e) + 1;
    u64 d = std::gcd(a, q_ - 1);
    return pow(c, (q_ - 1) / d) == one();
}

std::optional<u64> FieldCtx::dlog(const Fe& c) const {
    check_mine(c);
    if (dlog_.empty() || c.is_zero()) return std::nullopt;
    return dlog_[c.index()];
}

Fe FieldCtx::solve_norm_equation(const Fe& c, unsigned e) const {
    check_mine(c);
    if (c.is_zero()) throw ZeroInput("solve_norm_equation requires nonzero input");
    if (!in_image_E(c, e)) throw NotInE("c is not a (p^e+1)-th power");
    e %= h_;
    const u64 a = p_pow(e) + 1;
    const u64 m = q_ - 1;
    const u64 g0 = std::gcd(a, m);
    if (has_dlog_table()) {
        u64 d = *dlog(c);
        // solve s*a == d (mod m); smallest solution s in [0, m/g0)
        u64 mm = m / g0;
        u64 s = mulmod((d / g0) % mm, modinv((a / g0) % mm, mm), mm);
        return pow(g_, s);
    }
    if (g0 == 1) return pow(c, modinv(a % m, m));
    if (g0 == 2) {
        auto w = sqrt(c);
        if (!w) throw NormEquationFailed("expected square did not have a root");
        i128 x, y;
        i128 gg = egcd(i128(a), i128(m), x, y);
        if (gg != 2) throw NormEquationFailed("gcd(p^e+1, q-1) != 2");
        i128 mu = x % i128(m);
        if (mu < 0) mu += m;
        return pow(*w, static_cast<u64>(mu));
    }
    throw NormEquationFailed(
        "norm equation with gcd(p^e+1, q-1) > 2 needs the discrete-log table");
}

std::optional<Fe> FieldCtx::sqrt(const Fe& c) const {
    check_mine(c);
    if (c.is_zero()) return zero();
    if (has_dlog_table()) {
        u64 d = *dlog(c);
        if (d % 2 != 0) return std::nullopt;
        return pow(g_, d / 2);  // the root with the smaller discrete log
    }
    if (pow(c, (q_ - 1) / 2) != one()) return std::nullopt;
    // Tonelli-Shanks; g is a non-residue since it is primitive and q is odd
    u64 s = q_ - 1;
    unsigned t = 0;
    while (s % 2 == 0) { s /= 2; ++t; }
    Fe z = pow(g_, s);
    Fe x = pow(c, (s + 1) / 2);
    Fe b = pow(c, s);
    unsigned mexp = t;
    while (b != one()) {
        unsigned i = 0;
        Fe bb = b;
        while (bb != one()) { bb = mul(bb, bb); ++i; }
        Fe zz = z;
        for (unsigned j = 0; j + 1 < mexp - i; ++j) zz = mul(zz, zz);
        x = mul(x, zz);
        z = mul(zz, zz);
        b = mul(b, z);
        mexp = i;
    }
    Fe other = neg(x);
    return lex_less(x, other) ? x : other;  // deterministic without a dlog table
}

u64 FieldCtx::element_order(const Fe& c) const {
    check_mine(c);
    if (c.is_zero()) throw ZeroInput("zero has no multiplicative order");
    u64 ord = q_ - 1;
    for (auto [r, m] : q1_factors_) {
        for (unsigned i = 0; i < m; ++i) {
            if (ord % r == 0 && pow(c, ord / r) == one())
                ord /= r;
            else
                break;
        }
    }
    return ord;
}

Fe FieldCtx::find_element_of_order(u64 t, unsigned subfield_e) const {
    if (t == 0) throw NoSuchOrder("order must be positive");
    if (subfield_e == 0 || h_ % subfield_e != 0)
        throw EDoesNotDivideH("subfield parameter must divide h");
    u64 sub_order = p_pow(subfield_e) - 1;
    if (sub_order % t != 0)
        throw NoSuchOrder("t does not divide p^e - 1");
    // order-t elements are g^{m(q-1)/t} with gcd(m,t)=1; smallest dlog is m=1
    Fe w = pow(g_, (q_ - 1) / t);
    return w;
}

std::vector<Fe> FieldCtx::subfield_elements(unsigned e) const {
    if (e == 0 || h_ % e != 0) throw EDoesNotDivideH("subfield parameter must divide h");
    u64 pe = p_pow(e);
    std::vector<Fe> out;
    out.reserve(pe);
    out.push_back(zero());
    Fe w = pow(g_, (q_ - 1) / (pe - 1));
    Fe acc = one();
    for (u64 i = 0; i + 1 < pe; ++i) {
        out.push_back(acc);
        acc = mul(acc, w);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<Fe> FieldCtx::all_elements() const {
    if (q_ > (u64(1) << 22)) throw Error("field too large to enumerate");
    std::vector<std::uint32_t> c(h_, 0);
    std::vector<Fe> out;
    out.reserve(q_);
    while (true) {
        out.push_back(Fe(this, c));
        std::size_t i = h_;
        bool done = true;
        while (i-- > 0) {
            if (++c[i] < p_) { done = false; break; }
            c[i] = 0;
        }
        if (done) break;
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace ghl
