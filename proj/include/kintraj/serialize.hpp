#pragma once

// JSON record forms shared by the archive and report documents. All
// rationals travel as fraction strings; term lists follow the canonical
// map order so identical values serialize to identical bytes.

#include "kintraj/poly_matrix.hpp"
#include "kintraj/trajectory.hpp"

#include <json.hpp>

namespace kintraj {

using Json = nlohmann::json;  // std maps underneath: keys are emitted sorted

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json poly_to_json(const PuiseuxPoly& p);
PuiseuxPoly poly_from_json(const Json& j);

Json matrix_to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const Json& j);

// 64-bit FNV-1a over a string, rendered as 16 hex digits. Used to pin
// archive contents for regression comparisons.
std::string fnv1a_hex(const std::string& data);

}  // namespace kintraj
