#pragma once

// Stable JSON interchange formats for fields, codes, seeds and reports.
// Key order is fixed so serialized output is byte-stable across runs.

#include <nlohmann/json.hpp>

#include "galoishull/eaqecc.hpp"

namespace ghl {

using Json = nlohmann::ordered_json;

Json field_to_json(const FieldCtx& ctx);
std::shared_ptr<const FieldCtx> field_from_json(const Json& j);

Json fe_to_json(const Fe& x);
Fe fe_from_json(const std::shared_ptr<const FieldCtx>& ctx, const Json& j);

Json code_to_json(const GrsCode& code);
GrsCode code_from_json(const Json& j);

Json seed_to_json(const EuclideanSeed& seed);
EuclideanSeed seed_from_json(const Json& j);

Json hull_report_to_json(const HullReport& r);
Json eaqecc_to_json(const EaqeccParams& p);
Json matrix_to_json(const MatrixGF& m);  // debug only, not stability-guaranteed
Json table_to_json(const std::vector<BigParamRow>& rows);

std::string dump_stable(const Json& j);  // 2-space indent, trailing newline

}  // namespace ghl
