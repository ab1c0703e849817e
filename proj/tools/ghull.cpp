// ghull: construct (extended) GRS codes with prescribed Galois hulls, verify
// them by independent linear algebra, and derive quantum code parameters.
//
// Exit codes: 0 success, 2 invalid usage/parameters, 3 internal assertion
// failure during construction, 4 verification failure on given input.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "galoishull/serialize.hpp"

using namespace ghl;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;
constexpr int kExitVerify = 4;

std::string show(const Fe& x) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (i) os << ',';
        os << x.coeffs()[i];
    }
    os << ')';
    if (x.ctx()->has_dlog_table() && !x.is_zero()) {
        auto d = x.ctx()->dlog(x);
        if (d) os << "=g^" << *d;
    }
    return os.str();
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CLI::ValidationError("cannot write " + path);
    out << content;
}

void print_code_summary(const GrsCode& code) {
    std::cout << "code: [" << code.length() << "," << code.k << "] over GF("
              << code.ctx->p() << "^" << code.ctx->h() << ")"
              << (code.extended ? " (extended)" : "") << "\n";
}

void print_hull_report(const HullReport& hr) {
    std::cout << "hull: e=" << hr.e << " dim=" << hr.hull_dim
              << " dual_dim=" << hr.dual_dim
              << " method_agreement=" << (hr.method_agreement ? "yes" : "no") << "\n";
}

void print_mds(const MdsResult& mr) {
    std::cout << "mds: " << (mr.mds ? "yes" : "no")
              << (mr.exact ? " (exact)" : " (structural)") << "\n";
}

void print_eaqecc(const char* label, const EaqeccParams& p) {
    std::cout << label << ": [[" << p.n << "," << p.kq << "," << p.d << ";" << p.c
              << "]]_" << p.p << (p.mds ? " MDS" : "") << "\n";
}

EuclideanSeed resolve_seed(const std::string& spec, std::uint64_t p, unsigned h) {
    auto ctx = FieldCtx::make(p, h);
    if (spec == "full-field") return full_field_seed(ctx);
    if (spec.rfind("mu:", 0) == 0) {
        std::uint64_t n = std::stoull(spec.substr(3));
        return mu_subgroup_seed(ctx, n);
    }
    return seed_from_json(read_json_file(spec));
}

struct ConstructArgs {
    std::string theorem;
    std::uint64_t p = 0;
    unsigned e = 0, m = 0, h = 0, r = 0;
    std::uint64_t t = 0;
    std::size_t k = 0, l = 0;
    std::string seed;
    std::string out;
    bool no_verify = false;
};

int run_construct(const ConstructArgs& a) {
    GrsCode code = [&] {
        bool verify = !a.no_verify;
        if (a.theorem == "3.1")
            return thm31_construct({a.p, a.e, a.m, a.t, a.r, a.k, a.l}, verify);
        if (a.theorem == "3.2")
            return thm32_construct({a.p, a.h, a.e, a.t, a.k, a.l}, verify);
        if (a.theorem == "4.1")
            return thm41_lift(resolve_seed(a.seed, a.p, a.h), a.e, a.k, a.l, verify);
        if (a.theorem == "4.2")
            return thm42_lift(resolve_seed(a.seed, a.p, a.h), a.e, a.k, a.l, verify);
        throw InvalidParams("unknown theorem: " + a.theorem + " (expected 3.1|3.2|4.1|4.2)");
    }();

    print_code_summary(code);
    HullReport hr = hull_dim(code, a.e);
    print_hull_report(hr);
    print_mds(is_mds(code));
    std::cout << "v[0]=" << show(code.v[0]) << " a[0]=" << show(code.a[0]) << "\n";
    if (!a.out.empty()) {
        write_output(a.out, dump_stable(code_to_json(code)));
        std::cout << "wrote " << a.out << "\n";
    }
    return kExitOk;
}

int run_verify(const std::string& file, unsigned e, bool exact_distance) {
    GrsCode code = code_from_json(read_json_file(file));
    print_code_summary(code);
    HullReport hr = hull_dim(code, e);
    print_hull_report(hr);
    if (!hr.method_agreement) {
        std::cerr << "verification failed: hull-dimension methods disagree\n";
        return kExitVerify;
    }
    MdsResult mr = exact_distance
                       ? MdsResult{min_distance_exact(code) == code.length() - code.k + 1, true}
                       : is_mds(code);
    print_mds(mr);
    if (!mr.mds) {
        std::cerr << "verification failed: code is not MDS\n";
        return kExitVerify;
    }
    return kExitOk;
}

int run_hull(const std::string& file, unsigned e) {
    GrsCode code = code_from_json(read_json_file(file));
    print_code_summary(code);
    HullReport hr = hull_dim(code, e);
    print_hull_report(hr);
    MatrixGF basis = hull_basis(code, e);
    std::cout << "basis rows: " << basis.rows() << "\n";
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::cout << "  ";
        for (std::size_t j = 0; j < basis.cols(); ++j) {
            if (j) std::cout << ' ';
            std::cout << show(basis.at(i, j));
        }
        std::cout << "\n";
    }
    return hr.method_agreement ? kExitOk : kExitVerify;
}

int run_eaqecc(const std::string& file, unsigned e) {
    GrsCode code = code_from_json(read_json_file(file));
    print_code_summary(code);
    DerivedEaqecc d = derive_eaqecc(code, e);
    print_eaqecc("primal", d.primal);
    print_eaqecc("dual-side", d.dual_side);
    print_hull_report(d.primal_hull);
    print_hull_report(d.dual_hull);
    if (!d.primal_hull.method_agreement || !d.dual_hull.method_agreement) {
        std::cerr << "verification failed: hull-dimension methods disagree\n";
        return kExitVerify;
    }
    return kExitOk;
}

// "LO..HI" or a single value
std::pair<BigInt, BigInt> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        BigInt v(s);
        return {v, v};
    }
    return {BigInt(s.substr(0, dots)), BigInt(s.substr(dots + 2))};
}

struct TableArgs {
    std::string theorem;
    std::uint64_t p = 0, m = 0, h = 0, t = 0, r = 0;
    unsigned e = 0;
    std::string n_seed = "0";
    std::string k_range = "1..0";  // upper bound 0 = up to the dimension bound
    std::string l_range = "0..0";
    std::string side = "primal";
    std::string format = "csv";
    std::string out;
};

int run_table(const TableArgs& a) {
    TableSpec spec;
    spec.theorem = a.theorem;
    spec.p = a.p;
    spec.m = a.m;
    spec.h = a.h;
    spec.e = a.e;
    spec.t = a.t;
    spec.r = a.r;
    spec.n_seed = BigInt(a.n_seed);
    std::tie(spec.k_lo, spec.k_hi) = parse_range(a.k_range);
    std::tie(spec.l_lo, spec.l_hi) = parse_range(a.l_range);
    if (a.side == "primal")
        spec.side = TableSide::Primal;
    else if (a.side == "dual")
        spec.side = TableSide::Dual;
    else
        throw InvalidRanges("--side must be primal or dual");

    auto rows = param_table(spec);
    if (a.format == "csv")
        write_output(a.out, table_to_csv(rows));
    else if (a.format == "json")
        write_output(a.out, dump_stable(table_to_json(rows)));
    else
        throw InvalidRanges("--format must be csv or json");
    if (!a.out.empty() && a.out != "-")
        std::cout << rows.size() << " rows -> " << a.out << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galois hulls of generalized Reed-Solomon codes"};
    app.require_subcommand(1);
    // --h is a domain flag (extension degree); keep help on --help only
    app.set_help_flag("--help", "print help");
    unsigned jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for verification sweeps (accepted; "
                                   "all current workloads are single-threaded)");

    ConstructArgs ca;
    auto* c = app.add_subcommand("construct", "build a code with prescribed hull dimension");
    c->set_help_flag("--help", "print help");
    c->add_option("--theorem", ca.theorem, "3.1 | 3.2 | 4.1 | 4.2")->required();
    c->add_option("--p", ca.p, "characteristic (odd prime)")->required();
    c->add_option("--e", ca.e, "Galois parameter e")->required();
    c->add_option("--m", ca.m, "even extension multiplier (theorem 3.1; h = e*m)");
    c->add_option("--h", ca.h, "extension degree (theorems 3.2/4.1/4.2)");
    c->add_option("--t", ca.t, "coset count");
    c->add_option("--r", ca.r, "subspace dimension (theorem 3.1)");
    c->add_option("--k", ca.k, "code dimension")->required();
    c->add_option("--l", ca.l, "prescribed hull dimension")->required();
    c->add_option("--seed", ca.seed, "mu:N | full-field | FILE.json (theorems 4.x)");
    c->add_option("--out", ca.out, "write the code as stable JSON");
    c->add_flag("--no-verify", ca.no_verify, "skip the post-construction checks");

    std::string file;
    unsigned e = 0;
    bool exact_distance = false;
    auto* v = app.add_subcommand("verify", "recheck hull and MDS claims of a stored code");
    v->add_option("code", file, "code JSON file")->required();
    v->add_option("--e", e, "Galois parameter e")->required();
    v->add_flag("--exact-distance", exact_distance, "force the exact distance computation");

    auto* hl = app.add_subcommand("hull", "print the hull basis of a stored code");
    hl->add_option("code", file, "code JSON file")->required();
    hl->add_option("--e", e, "Galois parameter e")->required();

    auto* q = app.add_subcommand("eaqecc", "derive quantum code parameters");
    q->add_option("code", file, "code JSON file")->required();
    q->add_option("--e", e, "Galois parameter e")->required();

    TableArgs ta;
    auto* tb = app.add_subcommand("table", "emit symbolic parameter tables");
    tb->set_help_flag("--help", "print help");
    tb->add_option("--theorem", ta.theorem, "5.5 | 5.6 | 5.7 | 5.8")->required();
    tb->add_option("--p", ta.p)->required();
    tb->add_option("--e", ta.e)->required();
    tb->add_option("--m", ta.m, "5.5 only");
    tb->add_option("--h", ta.h, "5.6/5.7/5.8");
    tb->add_option("--t", ta.t, "5.5/5.6");
    tb->add_option("--r", ta.r, "5.5");
    tb->add_option("--n", ta.n_seed, "seed code length (5.7/5.8)");
    tb->add_option("--k", ta.k_range, "K or LO..HI (HI=0: up to the dimension bound)");
    tb->add_option("--l", ta.l_range, "L or LO..HI");
    tb->add_option("--side", ta.side, "primal | dual");
    tb->add_option("--format", ta.format, "csv | json");
    tb->add_option("--out", ta.out, "output file ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        return app.exit(ex) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*c) return run_construct(ca);
        if (*v) return run_verify(file, e, exact_distance);
        if (*hl) return run_hull(file, e);
        if (*q) return run_eaqecc(file, e);
        if (*tb) return run_table(ta);
    } catch (const VerificationFailed& ex) {
        // a construct-time assertion: the library contradicted itself
        std::cerr << "internal assertion failed: " << ex.what() << "\n";
        return kExitInternal;
    } catch (const InvalidRanges& ex) {
        std::cerr << "invalid ranges: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        // input-data failures during verify/hull/eaqecc are verification
        // failures; parameter errors during construct are usage errors
        if (*v || *hl || *q) return kExitVerify;
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
