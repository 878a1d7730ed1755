#pragma once

#include <cstddef>
#include <vector>

#include "k3chambers/exact_linalg.hpp"

namespace k3chambers {

enum class Sense { Negative, Positive };

/// One strict affine constraint: coeffs . x + constant < 0 (Negative)
/// or > 0 (Positive).
struct StrictRow {
  RatVector coeffs;
  Rational constant;
  Sense sense = Sense::Negative;
};

/// A finite system of strict affine inequalities over rational variables,
/// together with non-strict sign constraints x_i >= 0.
struct LinearSystemFeasibility {
  std::size_t variable_count = 0;
  std::vector<StrictRow> strict_rows;
  std::vector<std::size_t> nonneg_vars;
};

struct FeasibilityResult {
  bool feasible = false;
  /// A rational point satisfying every constraint; empty when infeasible.
  RatVector sample;
};

/// Exact Fourier-Motzkin elimination. Variables are eliminated in
/// decreasing order of the number of rows they occur in (ties: lowest
/// index). Derived rows combining more than k + 1 input rows after k
/// eliminations are dropped as redundant. The sample point is obtained by
/// back substitution, taking the midpoint of each variable's admissible
/// interval.
///
/// Throws DimensionMismatch / IndexOutOfRange on malformed problems.
FeasibilityResult fm_feasible(const LinearSystemFeasibility& problem);

/// Evaluates row constraints at `point`; true iff all are satisfied.
bool satisfies(const LinearSystemFeasibility& problem, const RatVector& point);

}  // namespace k3chambers
