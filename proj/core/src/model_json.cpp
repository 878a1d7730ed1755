#include "k3chambers/model_json.hpp"

#include <limits>
#include <utility>

#include "k3chambers/error.hpp"

namespace k3chambers {

namespace {

[[noreturn]] void parse_error(const std::string& message) {
  throw Error(ErrorCode::ParseError, message);
}

const Json& member(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    parse_error(std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

RatVector vector_from_json(const Json& arr, const char* what) {
  if (!arr.is_array()) parse_error(std::string(what) + " must be an array");
  RatVector out;
  out.reserve(arr.size());
  for (const auto& v : arr) out.push_back(rational_from_json(v));
  return out;
}

Json vector_to_json(const RatVector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(rational_to_json(x));
  return arr;
}

Json string_vector(const RatVector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

}  // namespace

Json rational_to_json(const Rational& value) {
  if (is_integer(value) && value.get_num().fits_slong_p()) {
    return Json(static_cast<std::int64_t>(value.get_num().get_si()));
  }
  return Json(to_string(value));
}

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) {
      return Rational(mpz_class(std::to_string(value.get<std::uint64_t>())));
    }
    return Rational(mpz_class(std::to_string(value.get<std::int64_t>())));
  }
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number()) parse_error("floating-point value " + value.dump() + " is not exact");
  parse_error("expected an integer or a rational string, got " + value.dump());
}

Json model_to_json(const SurfaceModel& m) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["mode"] = std::string(mode_name(m.mode()));
  Json gram = Json::array();
  for (std::size_t i = 0; i < m.gram().dim(); ++i) {
    gram.push_back(vector_to_json(RatVector(m.gram().row(i).begin(), m.gram().row(i).end())));
  }
  doc["gram"] = std::move(gram);
  Json curves = Json::array();
  for (const auto& c : m.curves()) {
    Json entry;
    entry["name"] = c.name;
    if (m.mode() == ModelMode::FullLattice) entry["coords"] = vector_to_json(c.coords);
    curves.push_back(std::move(entry));
  }
  doc["curves"] = std::move(curves);
  Json ample;
  if (m.mode() == ModelMode::FullLattice) {
    ample["coords"] = vector_to_json(m.ample_coords());
  } else {
    ample["dots"] = vector_to_json(m.ample_dots());
    ample["self"] = rational_to_json(m.ample_self());
  }
  doc["ample"] = std::move(ample);
  return doc;
}

SurfaceModel model_from_json(const Json& doc) {
  if (!doc.is_object()) parse_error("model document must be a JSON object");
  if (doc.contains("schema_version") && doc.at("schema_version") != kSchemaVersion) {
    parse_error("unsupported schema_version " + doc.at("schema_version").dump());
  }
  const Json& mode = member(doc, "mode");
  if (!mode.is_string()) parse_error("'mode' must be a string");
  const std::string mode_str = mode.get<std::string>();

  const Json& gram_doc = member(doc, "gram");
  if (!gram_doc.is_array()) parse_error("'gram' must be an array of rows");
  std::vector<RatVector> rows;
  for (const auto& row : gram_doc) rows.push_back(vector_from_json(row, "gram row"));
  RatMatrix gram;
  try {
    gram = RatMatrix::from_rows(rows);
  } catch (const Error& e) {
    parse_error(std::string("'gram' is not square: ") + e.what());
  }

  const Json& curves_doc = member(doc, "curves");
  if (!curves_doc.is_array()) parse_error("'curves' must be an array");
  const Json& ample = member(doc, "ample");

  if (mode_str == "FullLattice") {
    std::vector<Curve> curves;
    for (const auto& c : curves_doc) {
      const Json& name = member(c, "name");
      if (!name.is_string()) parse_error("curve name must be a string");
      curves.push_back({name.get<std::string>(), vector_from_json(member(c, "coords"), "coords")});
    }
    return SurfaceModel::full_lattice(std::move(gram), std::move(curves),
                                      vector_from_json(member(ample, "coords"), "ample.coords"));
  }
  if (mode_str == "Configuration") {
    std::vector<std::string> names;
    for (const auto& c : curves_doc) {
      const Json& name = member(c, "name");
      if (!name.is_string()) parse_error("curve name must be a string");
      names.push_back(name.get<std::string>());
    }
    return SurfaceModel::configuration(std::move(gram), std::move(names),
                                       vector_from_json(member(ample, "dots"), "ample.dots"),
                                       rational_from_json(member(ample, "self")));
  }
  parse_error("unknown mode '" + mode_str + "' (expected FullLattice or Configuration)");
}

std::string serialize_model(const SurfaceModel& m) { return model_to_json(m).dump(2) + "\n"; }

SurfaceModel parse_model(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  return model_from_json(doc);
}

Json divisor_to_json(const DivisorClass& d) {
  Json doc;
  if (d.mode == ModelMode::FullLattice) {
    doc["coords"] = string_vector(d.coords);
  } else {
    doc["ample_coeff"] = to_string(d.ample_coeff);
    doc["curve_coeffs"] = string_vector(d.curve_coeffs);
  }
  return doc;
}

DivisorClass divisor_from_json(const Json& doc) {
  if (doc.is_object() && doc.contains("coords")) {
    return DivisorClass::lattice(vector_from_json(doc.at("coords"), "coords"));
  }
  if (doc.is_object() && doc.contains("ample_coeff")) {
    return DivisorClass::combination(rational_from_json(doc.at("ample_coeff")),
                                     vector_from_json(member(doc, "curve_coeffs"), "curve_coeffs"));
  }
  parse_error("divisor must have 'coords' or 'ample_coeff' and 'curve_coeffs'");
}

Json curve_set_to_json(const SurfaceModel& m, const CurveSet& s) {
  Json arr = Json::array();
  for (const auto& name : curve_set_names(m, s)) arr.push_back(name);
  return arr;
}

}  // namespace k3chambers
