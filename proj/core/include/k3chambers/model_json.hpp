#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "k3chambers/lattice_model.hpp"

namespace k3chambers {

/// Insertion-ordered JSON, so that every document has a fixed field order.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Integers that fit in 64 bits become JSON numbers, everything else a
/// "p/q" string. Used in model documents.
Json rational_to_json(const Rational& value);
/// Accepts JSON integers and "n" / "p/q" strings; rejects floats.
/// Throws ParseError.
Rational rational_from_json(const Json& value);

/// Canonical model document:
///   {"schema_version", "mode", "gram", "curves": [{"name", "coords"?}],
///    "ample": {"coords"} | {"dots", "self"}}
Json model_to_json(const SurfaceModel& m);
/// Throws ParseError on malformed documents and InvalidModel on shape
/// errors. Does not run validate_model().
SurfaceModel model_from_json(const Json& doc);

std::string serialize_model(const SurfaceModel& m);
SurfaceModel parse_model(std::string_view text);

/// Report form of a divisor, rationals as strings:
///   {"coords": [...]} or {"ample_coeff", "curve_coeffs": [...]}.
Json divisor_to_json(const DivisorClass& d);
/// Accepts the report form (strings or integers). Throws ParseError.
DivisorClass divisor_from_json(const Json& doc);

Json curve_set_to_json(const SurfaceModel& m, const CurveSet& s);

}  // namespace k3chambers
