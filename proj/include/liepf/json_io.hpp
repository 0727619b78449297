#pragma once

#include <json.hpp>

#include "liepf/dynkin.hpp"
#include "liepf/parabolic.hpp"
#include "liepf/pfaffian.hpp"
#include "liepf/repr.hpp"
#include "liepf/verlinde.hpp"

namespace liepf::json_io {

using nlohmann::json;

json weight_to_json(const Weight& w);

/// [{"weight": [...], "mult": "decimal"}, ...] in key order.
json character_to_json(const FormalCharacter& character);
FormalCharacter character_from_json(const SimpleLieAlgebra& alg, const json& j);

/// {"n": int, "entries": [["p/q", ...], ...]}; integer entries are accepted on input.
json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j);

json algebra_to_json(const SimpleLieAlgebra& alg);
json index_report_to_json(const IndexReport& report);
json picard_to_json(const PicardDescription& picard);

}  // namespace liepf::json_io
