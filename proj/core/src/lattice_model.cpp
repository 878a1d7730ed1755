#include "k3chambers/lattice_model.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "k3chambers/error.hpp"

namespace k3chambers {

namespace {

void add_issue(ValidationReport& report, std::string code, std::optional<std::size_t> index,
               std::string message) {
  report.issues.push_back({std::move(code), index, std::move(message)});
}

void check_curve_gram_entries(const SurfaceModel& m, ValidationReport& report) {
  const RatMatrix& cg = m.curve_gram();
  for (std::size_t i = 0; i < cg.dim(); ++i) {
    if (cg(i, i) != -2) {
      add_issue(report, "self_intersection", i,
                "curve " + m.curve_name(i) + " has self-intersection " + to_string(cg(i, i)) +
                    ", expected -2");
    }
    for (std::size_t j = i + 1; j < cg.dim(); ++j) {
      if (cg(i, j) != cg(j, i)) {
        add_issue(report, "curve_gram_asymmetric", i,
                  "curves " + m.curve_name(i) + " and " + m.curve_name(j) +
                      " have asymmetric intersection numbers");
      } else if (!is_integer(cg(i, j)) || sign(cg(i, j)) < 0) {
        add_issue(report, "curve_intersection", i,
                  "curves " + m.curve_name(i) + " and " + m.curve_name(j) + " meet in " +
                      to_string(cg(i, j)) + ", expected a nonnegative integer");
      }
    }
  }
}

void check_ample(const SurfaceModel& m, ValidationReport& report) {
  if (sign(m.ample_self()) <= 0) {
    add_issue(report, "ample_self", std::nullopt,
              "ample class has self-intersection " + to_string(m.ample_self()) +
                  ", expected > 0");
  }
  for (std::size_t j = 0; j < m.curve_count(); ++j) {
    if (sign(m.ample_dots()[j]) <= 0) {
      add_issue(report, "ample_curve", j,
                "ample class meets curve " + m.curve_name(j) + " in " +
                    to_string(m.ample_dots()[j]) + ", expected > 0");
    }
  }
}

void check_names(const SurfaceModel& m, ValidationReport& report) {
  std::set<std::string> seen;
  for (std::size_t j = 0; j < m.curve_count(); ++j) {
    const std::string& name = m.curve_name(j);
    if (name.empty()) {
      add_issue(report, "curve_name", j, "curve " + std::to_string(j) + " has an empty name");
    } else if (!seen.insert(name).second) {
      add_issue(report, "curve_name", j, "duplicate curve name '" + name + "'");
    }
  }
}

}  // namespace

std::string_view mode_name(ModelMode mode) noexcept {
  return mode == ModelMode::FullLattice ? "FullLattice" : "Configuration";
}

SurfaceModel SurfaceModel::full_lattice(RatMatrix gram, std::vector<Curve> curves,
                                        RatVector ample) {
  const std::size_t n = gram.dim();
  if (ample.size() != n) {
    throw Error(ErrorCode::InvalidModel, "ample class has " + std::to_string(ample.size()) +
                                             " coordinates, lattice rank is " +
                                             std::to_string(n));
  }
  for (const auto& c : curves) {
    if (c.coords.size() != n) {
      throw Error(ErrorCode::InvalidModel, "curve '" + c.name + "' has " +
                                               std::to_string(c.coords.size()) +
                                               " coordinates, lattice rank is " +
                                               std::to_string(n));
    }
  }
  SurfaceModel m;
  m.mode_ = ModelMode::FullLattice;
  m.gram_ = std::move(gram);
  m.curves_ = std::move(curves);
  m.ample_coords_ = std::move(ample);
  const std::size_t k = m.curves_.size();
  m.curve_duals_.reserve(k);
  for (const auto& c : m.curves_) m.curve_duals_.push_back(m.gram_ * c.coords);
  m.curve_gram_ = RatMatrix(k);
  m.ample_dots_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m.curve_gram_(i, j) = dot(m.curves_[i].coords, m.curve_duals_[j]);
    m.ample_dots_[i] = dot(m.ample_coords_, m.curve_duals_[i]);
  }
  m.ample_self_ = bilinear(m.gram_, m.ample_coords_, m.ample_coords_);
  return m;
}

SurfaceModel SurfaceModel::configuration(RatMatrix curve_gram, std::vector<std::string> names,
                                         RatVector ample_dots, Rational ample_self) {
  const std::size_t k = curve_gram.dim();
  if (names.size() != k || ample_dots.size() != k) {
    throw Error(ErrorCode::InvalidModel,
                "configuration needs one name and one ample intersection per curve (" +
                    std::to_string(k) + " curves, " + std::to_string(names.size()) +
                    " names, " + std::to_string(ample_dots.size()) + " ample values)");
  }
  SurfaceModel m;
  m.mode_ = ModelMode::Configuration;
  m.gram_ = curve_gram;
  m.curve_gram_ = std::move(curve_gram);
  m.curves_.reserve(k);
  for (auto& name : names) m.curves_.push_back({std::move(name), {}});
  m.ample_dots_ = std::move(ample_dots);
  m.ample_self_ = std::move(ample_self);
  return m;
}

std::optional<std::size_t> SurfaceModel::curve_index(std::string_view name) const {
  for (std::size_t j = 0; j < curves_.size(); ++j) {
    if (curves_[j].name == name) return j;
  }
  return std::nullopt;
}

DivisorClass DivisorClass::lattice(RatVector coords) {
  DivisorClass d;
  d.mode = ModelMode::FullLattice;
  d.coords = std::move(coords);
  return d;
}

DivisorClass DivisorClass::combination(Rational ample_coeff, RatVector curve_coeffs) {
  DivisorClass d;
  d.mode = ModelMode::Configuration;
  d.ample_coeff = std::move(ample_coeff);
  d.curve_coeffs = std::move(curve_coeffs);
  return d;
}

namespace {

void require_same_shape(const DivisorClass& a, const DivisorClass& b) {
  if (a.mode != b.mode) throw Error(ErrorCode::ModeMismatch, "divisors from different modes");
  if (a.coords.size() != b.coords.size() || a.curve_coeffs.size() != b.curve_coeffs.size()) {
    throw Error(ErrorCode::DimensionMismatch, "divisor dimensions differ");
  }
}

}  // namespace

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  require_same_shape(a, b);
  DivisorClass out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  out.ample_coeff += b.ample_coeff;
  for (std::size_t i = 0; i < out.curve_coeffs.size(); ++i) out.curve_coeffs[i] += b.curve_coeffs[i];
  return out;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  return a + Rational(-1) * b;
}

DivisorClass operator*(const Rational& scale, const DivisorClass& d) {
  DivisorClass out = d;
  for (auto& c : out.coords) c *= scale;
  out.ample_coeff *= scale;
  for (auto& c : out.curve_coeffs) c *= scale;
  return out;
}

void check_divisor(const SurfaceModel& m, const DivisorClass& d) {
  if (d.mode != m.mode()) {
    throw Error(ErrorCode::ModeMismatch, std::string("divisor is in ") +
                                             std::string(mode_name(d.mode)) +
                                             " mode, model is " +
                                             std::string(mode_name(m.mode())));
  }
  const bool ok = m.mode() == ModelMode::FullLattice
                      ? d.coords.size() == m.gram().dim() && d.curve_coeffs.empty()
                      : d.curve_coeffs.size() == m.curve_count() && d.coords.empty();
  if (!ok) throw Error(ErrorCode::DimensionMismatch, "divisor dimension does not match model");
}

DivisorClass zero_divisor(const SurfaceModel& m) {
  if (m.mode() == ModelMode::FullLattice) return DivisorClass::lattice(RatVector(m.gram().dim()));
  return DivisorClass::combination(Rational(0), RatVector(m.curve_count()));
}

DivisorClass ample_class(const SurfaceModel& m) {
  if (m.mode() == ModelMode::FullLattice) return DivisorClass::lattice(m.ample_coords());
  return DivisorClass::combination(Rational(1), RatVector(m.curve_count()));
}

DivisorClass curve_class(const SurfaceModel& m, std::size_t index) {
  if (index >= m.curve_count()) throw Error(ErrorCode::IndexOutOfRange, "curve index out of range");
  if (m.mode() == ModelMode::FullLattice) return DivisorClass::lattice(m.curves()[index].coords);
  RatVector a(m.curve_count());
  a[index] = 1;
  return DivisorClass::combination(Rational(0), std::move(a));
}

DivisorClass combine(const SurfaceModel& m, const Rational& t, const RatVector& a) {
  if (a.size() != m.curve_count()) {
    throw Error(ErrorCode::DimensionMismatch, "one coefficient per curve expected");
  }
  if (m.mode() == ModelMode::Configuration) return DivisorClass::combination(t, a);
  RatVector coords(m.gram().dim());
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] = t * m.ample_coords()[k];
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += a[i] * m.curves()[i].coords[k];
  }
  return DivisorClass::lattice(std::move(coords));
}

RatVector curve_pairings(const SurfaceModel& m, const DivisorClass& d) {
  check_divisor(m, d);
  const std::size_t k = m.curve_count();
  RatVector out(k);
  if (m.mode() == ModelMode::FullLattice) {
    for (std::size_t j = 0; j < k; ++j) out[j] = dot(d.coords, m.curve_dual(j));
    return out;
  }
  const RatMatrix& cg = m.curve_gram();
  for (std::size_t j = 0; j < k; ++j) {
    Rational v = d.ample_coeff * m.ample_dots()[j];
    for (std::size_t i = 0; i < k; ++i) {
      if (d.curve_coeffs[i] != 0) v += d.curve_coeffs[i] * cg(i, j);
    }
    out[j] = std::move(v);
  }
  return out;
}

Rational pair(const SurfaceModel& m, const DivisorClass& d1, const DivisorClass& d2) {
  check_divisor(m, d1);
  check_divisor(m, d2);
  if (m.mode() == ModelMode::FullLattice) return bilinear(m.gram(), d1.coords, d2.coords);
  // (tH + a.C)(sH + b.C) = ts H^2 + t (b.h) + s (a.h) + a^T G b
  Rational v = d1.ample_coeff * d2.ample_coeff * m.ample_self();
  v += d1.ample_coeff * dot(d2.curve_coeffs, m.ample_dots());
  v += d2.ample_coeff * dot(d1.curve_coeffs, m.ample_dots());
  v += bilinear(m.curve_gram(), d1.curve_coeffs, d2.curve_coeffs);
  return v;
}

Rational ample_pairing(const SurfaceModel& m, const DivisorClass& d) {
  return pair(m, d, ample_class(m));
}

bool is_nef(const SurfaceModel& m, const DivisorClass& d) {
  const RatVector dots = curve_pairings(m, d);
  return std::all_of(dots.begin(), dots.end(), [](const Rational& v) { return sign(v) >= 0; });
}

RatMatrix restrict_gram(const SurfaceModel& m, const CurveSet& s) {
  for (std::size_t i : s) {
    if (i >= m.curve_count()) {
      throw Error(ErrorCode::IndexOutOfRange, "curve index " + std::to_string(i) + " out of range");
    }
  }
  return principal_submatrix(m.curve_gram(), s);
}

SurfaceModel reduce_to_configuration(const SurfaceModel& m) {
  std::vector<std::string> names;
  names.reserve(m.curve_count());
  for (const auto& c : m.curves()) names.push_back(c.name);
  return SurfaceModel::configuration(m.curve_gram(), std::move(names), m.ample_dots(),
                                     m.ample_self());
}

ValidationReport validate_model(const SurfaceModel& m) {
  ValidationReport report;
  if (m.mode() == ModelMode::FullLattice) {
    const RatMatrix& g = m.gram();
    if (g.dim() == 0) {
      add_issue(report, "gram_empty", std::nullopt, "lattice Gram matrix is empty");
    } else if (!g.is_symmetric()) {
      add_issue(report, "gram_asymmetric", std::nullopt, "lattice Gram matrix is not symmetric");
    } else {
      const Inertia s = signature(g);
      if (s.positive != 1 || s.zero != 0) {
        add_issue(report, "gram_signature", std::nullopt,
                  "lattice Gram matrix has signature (" + std::to_string(s.positive) + "," +
                      std::to_string(s.negative) + "," + std::to_string(s.zero) +
                      "), expected (1," + std::to_string(g.dim() - 1) + ",0)");
      }
    }
    for (std::size_t j = 0; j < m.curve_count(); ++j) {
      const auto& coords = m.curves()[j].coords;
      if (!std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return is_integer(c); })) {
        add_issue(report, "curve_coords", j,
                  "curve " + m.curve_name(j) + " has non-integral coordinates");
      }
    }
  } else if (!m.gram().is_symmetric()) {
    add_issue(report, "gram_asymmetric", std::nullopt, "curve Gram matrix is not symmetric");
  }
  check_curve_gram_entries(m, report);
  check_ample(m, report);
  check_names(m, report);
  return report;
}

void require_valid(const SurfaceModel& m) {
  const ValidationReport report = validate_model(m);
  if (!report.valid()) throw Error(ErrorCode::InvalidModel, report.issues.front().message);
}

CurveSet make_curve_set(const SurfaceModel& m, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (!indices.empty() && indices.back() >= m.curve_count()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "curve index " + std::to_string(indices.back()) + " out of range");
  }
  return indices;
}

CurveSet curve_set_from_names(const SurfaceModel& m, const std::vector<std::string>& names) {
  std::vector<std::size_t> indices;
  for (const auto& name : names) {
    const auto index = m.curve_index(name);
    if (!index) throw Error(ErrorCode::InvalidArgument, "unknown curve '" + name + "'");
    indices.push_back(*index);
  }
  return make_curve_set(m, std::move(indices));
}

std::vector<std::string> curve_set_names(const SurfaceModel& m, const CurveSet& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (std::size_t i : s) out.push_back(m.curve_name(i));
  return out;
}

}  // namespace k3chambers
