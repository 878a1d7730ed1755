#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3chambers/lattice_model.hpp"

namespace k3chambers {

/// D = P + N with P nef (against the listed curves), N = sum b_i C_i
/// effective with negative definite support, P . C_i = 0 on the support.
struct ZariskiResult {
  DivisorClass nef_part;
  DivisorClass negative_part;
  /// Support of N, sorted.
  CurveSet neg_set;
  /// Coefficient b_i > 0 for each curve of neg_set, same order.
  std::vector<Rational> neg_coeffs;
  /// Curves with P . C = 0; always contains neg_set.
  CurveSet null_set;
  /// P . C_j for every listed curve.
  RatVector nef_pairings;
};

/// Coefficients b (indexed like S) with (D - sum_{i in S} b_i C_i) . C_j = 0
/// for all j in S. Throws SingularMatrix when the restricted Gram is.
std::vector<Rational> solve_negative_part(const SurfaceModel& m, const RatVector& pairings,
                                          const CurveSet& s);

/// Iterative support growth: start from the curves D meets negatively,
/// solve for the negative part on the current support, and add the most
/// negative curve against the remainder (lowest index on ties) until the
/// remainder is nef.
///
/// Throws NotBig if the support stops being negative definite or the nef
/// part fails P^2 > 0, P.H > 0. Throws ModeUnsupported for a
/// Configuration-mode divisor with ample coefficient <= 0.
ZariskiResult zariski_decompose(const SurfaceModel& m, const DivisorClass& d);

/// vol(D) = P^2. Throws NotBig.
Rational volume(const SurfaceModel& m, const DivisorClass& d);

struct BigCertificate {
  bool big = false;
  std::optional<ZariskiResult> decomposition;
  /// Empty when big; otherwise "mode_unsupported", "support_not_negative_definite"
  /// or "nef_part_not_big".
  std::string failing_stage;
  std::string detail;
};

BigCertificate is_big(const SurfaceModel& m, const DivisorClass& d);

}  // namespace k3chambers
