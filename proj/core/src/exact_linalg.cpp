#include "k3chambers/exact_linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "k3chambers/error.hpp"

namespace k3chambers {

namespace {

void require_square_system(const RatMatrix& s, std::size_t rhs) {
  if (s.dim() != rhs) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix of order " + std::to_string(s.dim()) + " against vector of length " +
                    std::to_string(rhs));
  }
}

void require_symmetric(const RatMatrix& s) {
  if (!s.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");
}

void swap_rows(RatMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.dim(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : dim_(rows.size()), entries_() {
  entries_.reserve(dim_ * dim_);
  for (const auto& r : rows) {
    if (r.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "matrix rows must be square");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t dim) {
  RatMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  RatMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                      " entries, expected " + std::to_string(rows.size()));
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool RatMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

RatVector operator*(const RatMatrix& m, std::span<const Rational> v) {
  require_square_system(m, v.size());
  RatVector out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) out[i] = dot(m.row(i), v);
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "matrix orders differ");
  const std::size_t n = a.dim();
  RatMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
  Rational sum;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Rational bilinear(const RatMatrix& s, std::span<const Rational> x, std::span<const Rational> y) {
  return dot(x, s * y);
}

RatMatrix principal_submatrix(const RatMatrix& s, std::span<const std::size_t> indices) {
  RatMatrix sub(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = 0; b < indices.size(); ++b) {
      if (indices[a] >= s.dim() || indices[b] >= s.dim()) {
        throw Error(ErrorCode::IndexOutOfRange, "submatrix index out of range");
      }
      sub(a, b) = s(indices[a], indices[b]);
    }
  }
  return sub;
}

Rational determinant(const RatMatrix& s) {
  const std::size_t n = s.dim();
  if (n == 0) return Rational(1);
  RatMatrix m = s;
  Rational prev(1);
  int flips = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return Rational(0);
      swap_rows(m, k, p);
      flips = -flips;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return flips * m(n - 1, n - 1);
}

std::vector<Rational> leading_principal_minors(const RatMatrix& s, bool complete) {
  const std::size_t n = s.dim();
  std::vector<Rational> minors;
  minors.reserve(n);
  RatMatrix m = s;
  Rational prev(1);
  std::size_t k = 0;
  for (; k < n; ++k) {
    if (m(k, k) == 0) break;
    minors.push_back(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  if (complete) {
    std::vector<std::size_t> lead;
    for (std::size_t i = 0; i < n; ++i) {
      lead.push_back(i);
      if (i >= minors.size()) minors.push_back(determinant(principal_submatrix(s, lead)));
    }
  }
  return minors;
}

RatVector solve_linear(const RatMatrix& s, std::span<const Rational> b) {
  require_square_system(s, b.size());
  const std::size_t n = s.dim();
  RatMatrix m = s;
  RatVector x(b.begin(), b.end());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    if (p != k) {
      swap_rows(m, k, p);
      std::swap(x[k], x[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational factor = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
      x[i] -= factor * x[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t j = k + 1; j < n; ++j) x[k] -= m(k, j) * x[j];
    x[k] /= m(k, k);
  }
  return x;
}

RatMatrix inverse(const RatMatrix& s) {
  const std::size_t n = s.dim();
  RatMatrix m = s;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    if (p != k) {
      swap_rows(m, k, p);
      swap_rows(inv, k, p);
    }
    const Rational pivot = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      const Rational factor = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= factor * m(k, j);
        inv(i, j) -= factor * inv(k, j);
      }
    }
  }
  return inv;
}

bool is_negative_definite(const RatMatrix& s) {
  require_symmetric(s);
  const auto minors = leading_principal_minors(s);
  if (minors.size() != s.dim()) return false;
  for (std::size_t k = 0; k < minors.size(); ++k) {
    // (-1)^(k+1) det(S_{k+1}) > 0
    const int expected = (k % 2 == 0) ? -1 : 1;
    if (sign(minors[k]) != expected) return false;
  }
  return true;
}

Inertia signature(const RatMatrix& s) {
  require_symmetric(s);
  const std::size_t n = s.dim();
  RatMatrix a = s;
  Inertia inertia;
  std::size_t k = 0;
  while (k < n) {
    std::size_t p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      // Zero diagonal: a congruence row_i += row_j makes a(i,i) = 2 a(i,j).
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n && bi == n; ++i) {
        for (std::size_t j = k; j < n; ++j) {
          if (i != j && a(i, j) != 0) {
            bi = i;
            bj = j;
            break;
          }
        }
      }
      if (bi == n) {
        inertia.zero += n - k;
        break;
      }
      for (std::size_t j = k; j < n; ++j) a(bi, j) += a(bj, j);
      for (std::size_t i = k; i < n; ++i) a(i, bi) += a(i, bj);
      continue;
    }
    if (p != k) {
      swap_rows(a, k, p);
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, p));
    }
    const Rational pivot = a(k, k);
    (sign(pivot) > 0 ? inertia.positive : inertia.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational factor = a(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) a(i, k) = 0;
    ++k;
  }
  return inertia;
}

bool inverse_nonpositive_check(const RatMatrix& s) {
  if (!s.is_symmetric()) {
    throw Error(ErrorCode::PreconditionViolated, "matrix is not symmetric");
  }
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      if (i != j && sign(s(i, j)) < 0) {
        throw Error(ErrorCode::PreconditionViolated,
                    "negative off-diagonal entry at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
      }
    }
  }
  if (!is_negative_definite(s)) {
    throw Error(ErrorCode::PreconditionViolated, "matrix is not negative definite");
  }
  const RatMatrix inv = inverse(s);
  for (std::size_t i = 0; i < inv.dim(); ++i) {
    for (std::size_t j = 0; j < inv.dim(); ++j) {
      if (sign(inv(i, j)) > 0) return false;
    }
  }
  return true;
}

std::size_t rank(std::vector<RatVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged row list");
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational factor = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace k3chambers
