#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "k3chambers/rational.hpp"

namespace k3chambers {

using RatVector = std::vector<Rational>;

/// Dense square matrix of exact rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t dim);
  /// Throws Error{DimensionMismatch} unless every row has `rows.size()` entries.
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return dim_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * dim_ + j];
  }

  std::span<const Rational> row(std::size_t i) const {
    return {entries_.data() + i * dim_, dim_};
  }

  bool is_symmetric() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

RatVector operator*(const RatMatrix& m, std::span<const Rational> v);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// x^T S y.
Rational bilinear(const RatMatrix& s, std::span<const Rational> x, std::span<const Rational> y);

/// Principal submatrix on `indices`, in the given order.
RatMatrix principal_submatrix(const RatMatrix& s, std::span<const std::size_t> indices);

/// Fraction-free (Bareiss) determinant with row pivoting.
Rational determinant(const RatMatrix& s);

/// Leading principal minors det(S[0..k]) for k = 1..dim, computed by
/// Bareiss elimination. Stops early (shorter result) at the first zero
/// minor unless `complete` is set, in which case each remaining minor is
/// computed directly.
std::vector<Rational> leading_principal_minors(const RatMatrix& s, bool complete = false);

/// Exact solve of S x = b. Throws SingularMatrix / DimensionMismatch.
RatVector solve_linear(const RatMatrix& s, std::span<const Rational> b);

/// Exact inverse. Throws SingularMatrix.
RatMatrix inverse(const RatMatrix& s);

/// Sylvester test: (-1)^k det(S_k) > 0 for every leading minor.
/// Throws NotSymmetric.
bool is_negative_definite(const RatMatrix& s);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia of a symmetric matrix via exact symmetric elimination.
/// Throws NotSymmetric.
Inertia signature(const RatMatrix& s);

/// Checks that the inverse of a negative definite matrix with nonnegative
/// off-diagonal entries has only nonpositive entries. Throws
/// PreconditionViolated when S is not symmetric, not negative definite,
/// or has a negative off-diagonal entry. A `false` return on valid input
/// signals a bug.
bool inverse_nonpositive_check(const RatMatrix& s);

/// Rank of a list of row vectors of equal length.
std::size_t rank(std::vector<RatVector> rows);

}  // namespace k3chambers
