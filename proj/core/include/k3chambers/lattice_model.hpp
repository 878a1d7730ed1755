#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "k3chambers/exact_linalg.hpp"

namespace k3chambers {

/// Sorted list of curve indices.
using CurveSet = std::vector<std::size_t>;

enum class ModelMode {
  /// Full Neron-Severi Gram matrix; curves and the ample class are
  /// coordinate vectors in the lattice basis.
  FullLattice,
  /// Only curve-curve and ample-curve intersection numbers are known.
  Configuration,
};

std::string_view mode_name(ModelMode mode) noexcept;

struct Curve {
  std::string name;
  /// Lattice coordinates; empty in Configuration mode.
  RatVector coords;

  friend bool operator==(const Curve&, const Curve&) = default;
};

/// A K3 surface described by its (-2)-curves and an ample class.
///
/// The curve list is assumed to be the complete set of (-2)-curves:
/// nefness is always decided against the listed curves only.
class SurfaceModel {
 public:
  /// Throws InvalidModel if the coordinate vectors do not match the
  /// Gram matrix order. Semantic checks live in validate_model().
  static SurfaceModel full_lattice(RatMatrix gram, std::vector<Curve> curves, RatVector ample);
  /// Throws InvalidModel if `ample_dots` does not have one entry per curve.
  static SurfaceModel configuration(RatMatrix curve_gram, std::vector<std::string> names,
                                    RatVector ample_dots, Rational ample_self);

  ModelMode mode() const noexcept { return mode_; }
  /// FullLattice: the lattice Gram matrix. Configuration: the curve Gram.
  const RatMatrix& gram() const noexcept { return gram_; }
  const std::vector<Curve>& curves() const noexcept { return curves_; }
  std::size_t curve_count() const noexcept { return curves_.size(); }
  /// Lattice coordinates of the ample class (FullLattice only).
  const RatVector& ample_coords() const noexcept { return ample_coords_; }

  /// C_i . C_j for the listed curves.
  const RatMatrix& curve_gram() const noexcept { return curve_gram_; }
  /// H . C_j for the listed curves.
  const RatVector& ample_dots() const noexcept { return ample_dots_; }
  /// H^2.
  const Rational& ample_self() const noexcept { return ample_self_; }

  std::optional<std::size_t> curve_index(std::string_view name) const;
  const std::string& curve_name(std::size_t index) const { return curves_.at(index).name; }
  /// G * v_j, so that D . C_j = coords(D) . curve_dual(j) (FullLattice only).
  const RatVector& curve_dual(std::size_t j) const { return curve_duals_.at(j); }

  friend bool operator==(const SurfaceModel& a, const SurfaceModel& b) {
    return a.mode_ == b.mode_ && a.gram_ == b.gram_ && a.curves_ == b.curves_ &&
           a.ample_coords_ == b.ample_coords_ && a.ample_dots_ == b.ample_dots_ &&
           a.ample_self_ == b.ample_self_;
  }

 private:
  SurfaceModel() = default;

  ModelMode mode_ = ModelMode::Configuration;
  RatMatrix gram_;
  std::vector<Curve> curves_;
  RatVector ample_coords_;
  RatMatrix curve_gram_;
  RatVector ample_dots_;
  Rational ample_self_;
  std::vector<RatVector> curve_duals_;
};

/// A rational divisor class. In FullLattice mode `coords` holds lattice
/// coordinates; in Configuration mode the class is
/// ample_coeff * H + sum curve_coeffs[i] * C_i.
struct DivisorClass {
  ModelMode mode = ModelMode::FullLattice;
  RatVector coords;
  Rational ample_coeff;
  RatVector curve_coeffs;

  static DivisorClass lattice(RatVector coords);
  static DivisorClass combination(Rational ample_coeff, RatVector curve_coeffs);

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(const Rational& scale, const DivisorClass& d);

/// Throws ModeMismatch or DimensionMismatch if `d` does not belong to `m`.
void check_divisor(const SurfaceModel& m, const DivisorClass& d);

DivisorClass zero_divisor(const SurfaceModel& m);
DivisorClass ample_class(const SurfaceModel& m);
DivisorClass curve_class(const SurfaceModel& m, std::size_t index);
/// t * H + sum a_i C_i, expressed in the model's mode.
DivisorClass combine(const SurfaceModel& m, const Rational& t, const RatVector& a);

/// Exact intersection number D1 . D2.
Rational pair(const SurfaceModel& m, const DivisorClass& d1, const DivisorClass& d2);
/// D . C_j for every listed curve.
RatVector curve_pairings(const SurfaceModel& m, const DivisorClass& d);
/// D . H.
Rational ample_pairing(const SurfaceModel& m, const DivisorClass& d);
/// D . C >= 0 for every listed curve.
bool is_nef(const SurfaceModel& m, const DivisorClass& d);

/// Principal submatrix of the curve Gram on S (sorted order).
/// Throws IndexOutOfRange.
RatMatrix restrict_gram(const SurfaceModel& m, const CurveSet& s);

/// Configuration-mode model carrying the same curve and ample data.
SurfaceModel reduce_to_configuration(const SurfaceModel& m);

struct ValidationIssue {
  std::string code;
  std::optional<std::size_t> index;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool valid() const noexcept { return issues.empty(); }
};

/// Checks the standing hypotheses: Gram symmetry and hyperbolic signature
/// (FullLattice), curve self-intersection -2, integral nonnegative curve
/// intersections, ample positivity, unique curve names.
ValidationReport validate_model(const SurfaceModel& m);

/// Throws InvalidModel with the first issue if the model is invalid.
void require_valid(const SurfaceModel& m);

/// Sorted, duplicate-free, in range. Throws IndexOutOfRange.
CurveSet make_curve_set(const SurfaceModel& m, std::vector<std::size_t> indices);
/// Resolves curve names. Throws InvalidArgument on unknown names.
CurveSet curve_set_from_names(const SurfaceModel& m, const std::vector<std::string>& names);
std::vector<std::string> curve_set_names(const SurfaceModel& m, const CurveSet& s);

}  // namespace k3chambers
