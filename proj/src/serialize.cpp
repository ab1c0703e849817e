#include "galoishull/serialize.hpp"

namespace ghl {

Json field_to_json(const FieldCtx& ctx) {
    Json j;
    j["p"] = ctx.p();
    j["h"] = ctx.h();
    j["modulus"] = ctx.modulus();
    return j;
}

std::shared_ptr<const FieldCtx> field_from_json(const Json& j) {
    std::uint64_t p = j.at("p").get<std::uint64_t>();
    unsigned h = j.at("h").get<unsigned>();
    std::vector<std::uint32_t> modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    return FieldCtx::make(p, h, modulus);
}

Json fe_to_json(const Fe& x) { return Json(x.coeffs()); }

Fe fe_from_json(const std::shared_ptr<const FieldCtx>& ctx, const Json& j) {
    auto c = j.get<std::vector<std::int64_t>>();
    if (c.size() != ctx->h()) throw DegreeMismatch("element coefficient list has wrong length");
    return ctx->from_coeffs(c);
}

Json code_to_json(const GrsCode& code) {
    Json j;
    j["field"] = field_to_json(*code.ctx);
    Json a = Json::array(), v = Json::array();
    for (const Fe& x : code.a) a.push_back(fe_to_json(x));
    for (const Fe& x : code.v) v.push_back(fe_to_json(x));
    j["a"] = std::move(a);
    j["v"] = std::move(v);
    j["k"] = code.k;
    j["extended"] = code.extended;
    return j;
}

GrsCode code_from_json(const Json& j) {
    auto ctx = field_from_json(j.at("field"));
    std::vector<Fe> a, v;
    for (const auto& x : j.at("a")) a.push_back(fe_from_json(ctx, x));
    for (const auto& x : j.at("v")) v.push_back(fe_from_json(ctx, x));
    return make_grs(ctx, std::move(a), std::move(v), j.at("k").get<std::size_t>(),
                    j.at("extended").get<bool>());
}

Json seed_to_json(const EuclideanSeed& seed) {
    Json j;
    j["field"] = field_to_json(*seed.ctx);
    Json a = Json::array(), v = Json::array();
    for (const Fe& x : seed.a) a.push_back(fe_to_json(x));
    for (const Fe& x : seed.v) v.push_back(fe_to_json(x));
    j["a"] = std::move(a);
    j["v"] = std::move(v);
    if (seed.extended)
        j["lambda"] = "minus-one";
    else
        j["lambda"] = fe_to_json(*seed.lambda);
    j["extended"] = seed.extended;
    return j;
}

EuclideanSeed seed_from_json(const Json& j) {
    EuclideanSeed seed;
    seed.ctx = field_from_json(j.at("field"));
    for (const auto& x : j.at("a")) seed.a.push_back(fe_from_json(seed.ctx, x));
    for (const auto& x : j.at("v")) seed.v.push_back(fe_from_json(seed.ctx, x));
    seed.extended = j.at("extended").get<bool>();
    if (!seed.extended) seed.lambda = fe_from_json(seed.ctx, j.at("lambda"));
    return seed;
}

Json hull_report_to_json(const HullReport& r) {
    Json j;
    j["e"] = r.e;
    j["hull_dim"] = r.hull_dim;
    j["dual_dim"] = r.dual_dim;
    j["agreement"] = r.method_agreement;
    return j;
}

namespace {

const char* singleton_str(SingletonStatus s) {
    switch (s) {
        case SingletonStatus::NotApplicable: return "not-applicable";
        case SingletonStatus::Satisfied: return "satisfied";
        case SingletonStatus::Equality: return "equality";
        case SingletonStatus::Violated: return "violated";
    }
    return "?";
}

}  // namespace

Json eaqecc_to_json(const EaqeccParams& p) {
    Json j;
    j["n"] = p.n;
    j["k"] = p.kq;
    j["d"] = p.d;
    j["c"] = p.c;
    j["p"] = p.p;
    j["h"] = p.h;
    j["mds"] = p.mds;
    j["singleton"] = singleton_str(p.singleton);
    return j;
}

Json matrix_to_json(const MatrixGF& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json e = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(fe_to_json(m.at(i, c)));
        e.push_back(std::move(row));
    }
    j["entries"] = std::move(e);
    return j;
}

Json table_to_json(const std::vector<BigParamRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json j;
        j["theorem"] = r.theorem;
        j["p"] = r.p;
        j["h_or_m"] = r.h_or_m;
        j["e"] = r.e;
        j["t"] = r.t;
        j["r"] = r.r;
        j["n"] = r.n.str();
        j["k"] = r.k.str();
        j["l"] = r.l.str();
        j["kq"] = r.kq.str();
        j["d"] = r.d.str();
        j["c"] = r.c.str();
        j["mds"] = r.mds;
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string dump_stable(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ghl
