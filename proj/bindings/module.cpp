// Python bindings for the main operations: field arithmetic, GRS codes,
// hull dimensions, the theorem constructions and EAQECC parameter derivation.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "galoishull/serialize.hpp"

namespace py = pybind11;
using namespace ghl;

namespace {

using Ctx = std::shared_ptr<const FieldCtx>;

std::vector<std::int64_t> coeffs_of(const Fe& x) {
    return {x.coeffs().begin(), x.coeffs().end()};
}

Fe to_fe(const Ctx& ctx, const std::vector<std::int64_t>& c) { return ctx->from_coeffs(c); }

std::vector<Fe> to_fes(const Ctx& ctx, const std::vector<std::vector<std::int64_t>>& cs) {
    std::vector<Fe> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(to_fe(ctx, c));
    return out;
}

std::vector<std::vector<std::int64_t>> from_fes(const std::vector<Fe>& xs) {
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(coeffs_of(x));
    return out;
}

py::dict hull_report_dict(const HullReport& r) {
    py::dict d;
    d["e"] = r.e;
    d["hull_dim"] = r.hull_dim;
    d["dual_dim"] = r.dual_dim;
    d["method_agreement"] = r.method_agreement;
    return d;
}

py::dict eaqecc_dict(const EaqeccParams& p) {
    py::dict d;
    d["n"] = p.n;
    d["k"] = p.kq;
    d["d"] = p.d;
    d["c"] = p.c;
    d["p"] = p.p;
    d["h"] = p.h;
    d["mds"] = p.mds;
    return d;
}

}  // namespace

PYBIND11_MODULE(galoishull, m) {
    m.doc() = "Galois hulls of generalized Reed-Solomon codes and EAQECC parameters";

    py::register_exception<Error>(m, "GaloisHullError");

    py::class_<FieldCtx, std::shared_ptr<FieldCtx>>(m, "Field")
        .def(py::init([](std::uint64_t p, unsigned h,
                         std::optional<std::vector<std::uint32_t>> modulus) {
                 return std::const_pointer_cast<FieldCtx>(FieldCtx::make(p, h, modulus));
             }),
             py::arg("p"), py::arg("h"), py::arg("modulus") = std::nullopt)
        .def_property_readonly("p", &FieldCtx::p)
        .def_property_readonly("h", &FieldCtx::h)
        .def_property_readonly("q", &FieldCtx::q)
        .def_property_readonly("modulus", &FieldCtx::modulus)
        .def_property_readonly("generator", [](const FieldCtx& f) { return coeffs_of(f.g()); })
        .def("add", [](const Ctx& f, const std::vector<std::int64_t>& a,
                       const std::vector<std::int64_t>& b) {
            return coeffs_of(to_fe(f, a) + to_fe(f, b));
        })
        .def("mul", [](const Ctx& f, const std::vector<std::int64_t>& a,
                       const std::vector<std::int64_t>& b) {
            return coeffs_of(to_fe(f, a) * to_fe(f, b));
        })
        .def("inv", [](const Ctx& f, const std::vector<std::int64_t>& a) {
            return coeffs_of(f->inv(to_fe(f, a)));
        })
        .def("pow", [](const Ctx& f, const std::vector<std::int64_t>& a, std::uint64_t e) {
            return coeffs_of(f->pow(to_fe(f, a), e));
        })
        .def("frobenius", [](const Ctx& f, const std::vector<std::int64_t>& a, unsigned e) {
            return coeffs_of(f->frobenius(to_fe(f, a), e));
        })
        .def("trace", [](const Ctx& f, const std::vector<std::int64_t>& a, unsigned e) {
            return coeffs_of(f->trace_to(to_fe(f, a), e));
        })
        .def("in_norm_image", [](const Ctx& f, const std::vector<std::int64_t>& a, unsigned e) {
            return f->in_image_E(to_fe(f, a), e);
        })
        .def("solve_norm_equation",
             [](const Ctx& f, const std::vector<std::int64_t>& a, unsigned e) {
                 return coeffs_of(f->solve_norm_equation(to_fe(f, a), e));
             })
        .def("sqrt", [](const Ctx& f, const std::vector<std::int64_t>& a)
                 -> std::optional<std::vector<std::int64_t>> {
            auto r = f->sqrt(to_fe(f, a));
            if (!r) return std::nullopt;
            return coeffs_of(*r);
        });

    py::class_<GrsCode>(m, "GrsCode")
        .def_property_readonly("n", &GrsCode::length)
        .def_property_readonly("k", [](const GrsCode& c) { return c.k; })
        .def_property_readonly("extended", [](const GrsCode& c) { return c.extended; })
        .def_property_readonly("field", [](const GrsCode& c) { return c.ctx; })
        .def_property_readonly("points", [](const GrsCode& c) { return from_fes(c.a); })
        .def_property_readonly("multipliers", [](const GrsCode& c) { return from_fes(c.v); })
        .def("to_json", [](const GrsCode& c) { return dump_stable(code_to_json(c)); });

    m.def(
        "make_grs",
        [](const Ctx& ctx, const std::vector<std::vector<std::int64_t>>& a,
           const std::vector<std::vector<std::int64_t>>& v, std::size_t k, bool extended) {
            return make_grs(ctx, to_fes(ctx, a), to_fes(ctx, v), k, extended);
        },
        py::arg("field"), py::arg("points"), py::arg("multipliers"), py::arg("k"),
        py::arg("extended") = false);

    m.def("code_from_json",
          [](const std::string& s) { return code_from_json(Json::parse(s)); });

    m.def(
        "hull_dim",
        [](const GrsCode& code, unsigned e) {
            return hull_report_dict(hull_dim(code, e));
        },
        py::arg("code"), py::arg("e"));

    m.def(
        "min_distance",
        [](const GrsCode& code) { return min_distance_exact(code); }, py::arg("code"));

    m.def(
        "is_mds",
        [](const GrsCode& code) {
            MdsResult r = is_mds(code);
            py::dict d;
            d["mds"] = r.mds;
            d["exact"] = r.exact;
            return d;
        },
        py::arg("code"));

    m.def(
        "construct_subgroup_family",
        [](std::uint64_t p, unsigned e, unsigned mm, std::uint64_t t, unsigned r,
           std::size_t k, std::size_t l, bool verify) {
            return thm31_construct({p, e, mm, t, r, k, l}, verify);
        },
        py::arg("p"), py::arg("e"), py::arg("m"), py::arg("t"), py::arg("r"), py::arg("k"),
        py::arg("l"), py::arg("verify") = true);

    m.def(
        "construct_trace_family",
        [](std::uint64_t p, unsigned h, unsigned e, std::uint64_t t, std::size_t k,
           std::size_t l, bool verify) {
            return thm32_construct({p, h, e, t, k, l}, verify);
        },
        py::arg("p"), py::arg("h"), py::arg("e"), py::arg("t"), py::arg("k"), py::arg("l"),
        py::arg("verify") = true);

    m.def(
        "lift_from_roots_of_unity",
        [](std::uint64_t p, unsigned h, std::uint64_t n, unsigned e, std::size_t k,
           std::size_t l, bool verify) {
            auto ctx = FieldCtx::make(p, h);
            return thm41_lift(mu_subgroup_seed(ctx, n), e, k, l, verify);
        },
        py::arg("p"), py::arg("h"), py::arg("n"), py::arg("e"), py::arg("k"), py::arg("l"),
        py::arg("verify") = true);

    m.def(
        "lift_from_full_field",
        [](std::uint64_t p, unsigned h, unsigned e, std::size_t k, std::size_t l,
           bool verify) {
            auto ctx = FieldCtx::make(p, h);
            return thm42_lift(full_field_seed(ctx), e, k, l, verify);
        },
        py::arg("p"), py::arg("h"), py::arg("e"), py::arg("k"), py::arg("l"),
        py::arg("verify") = true);

    m.def(
        "derive_eaqecc",
        [](const GrsCode& code, unsigned e) {
            DerivedEaqecc d = derive_eaqecc(code, e);
            py::dict out;
            out["primal"] = eaqecc_dict(d.primal);
            out["dual_side"] = eaqecc_dict(d.dual_side);
            out["primal_hull"] = hull_report_dict(d.primal_hull);
            out["dual_hull"] = hull_report_dict(d.dual_hull);
            return out;
        },
        py::arg("code"), py::arg("e"));

    m.def(
        "param_table_csv",
        [](const std::string& theorem, std::uint64_t p, unsigned e, std::uint64_t mm,
           std::uint64_t h, std::uint64_t t, std::uint64_t r, const std::string& n_seed,
           const std::string& k_lo, const std::string& k_hi, const std::string& l_lo,
           const std::string& l_hi, const std::string& side) {
            TableSpec spec;
            spec.theorem = theorem;
            spec.p = p;
            spec.e = e;
            spec.m = mm;
            spec.h = h;
            spec.t = t;
            spec.r = r;
            spec.n_seed = BigInt(n_seed);
            spec.k_lo = BigInt(k_lo);
            spec.k_hi = BigInt(k_hi);
            spec.l_lo = BigInt(l_lo);
            spec.l_hi = BigInt(l_hi);
            spec.side = (side == "dual") ? TableSide::Dual : TableSide::Primal;
            return table_to_csv(param_table(spec));
        },
        py::arg("theorem"), py::arg("p"), py::arg("e"), py::arg("m") = 0, py::arg("h") = 0,
        py::arg("t") = 0, py::arg("r") = 0, py::arg("n_seed") = "0", py::arg("k_lo") = "1",
        py::arg("k_hi") = "0", py::arg("l_lo") = "0", py::arg("l_hi") = "0",
        py::arg("side") = "primal");
}
