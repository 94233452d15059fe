#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "flagdesic/equigeo.hpp"
#include "flagdesic/metric.hpp"

namespace flagdesic::cli {

/// Reads a vector document:
///   {"n": 4, "parts": [2,1,1], "mode": "float",
///    "blocks": {"1,2": [[[1,0]],[[0,0]]], ...}}
/// Keys are 1-based block pairs i < j; a lower key j,i is accepted only next
/// to a consistent i,j. Float entries are [re, im] (or a bare real), exact
/// entries are strings "p/q+r/si" (or integers). Missing blocks are zero.
/// Throws flagdesic::Error(InvalidArgument) naming the offending field.
TangentVector parse_vector_document(std::string_view text);
TangentVector vector_from_json(const nlohmann::json& doc);

nlohmann::json vector_to_json(const TangentVector& x);

/// {"parts": [...], "lambda": {"1,2": 2.5, ...}}; absent pairs default to 1.
InvariantMetric parse_metric_document(std::string_view text);

nlohmann::json matrix_to_json(const CMatrix& m);

/// VectorDocument-compatible rendering of J plus "unitary", "pairs", "residual".
nlohmann::json canonical_to_json(const TangentVector& x, const CanonicalForm& form);

}  // namespace flagdesic::cli
