#pragma once

// Slow, obviously-correct reference computations used only by tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "k3chambers/exact_linalg.hpp"
#include "k3chambers/lattice_model.hpp"

namespace k3chambers::oracle {

/// Leibniz expansion over all permutations.
inline Rational leibniz_det(const RatMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= a(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Negative definiteness from all 2^n principal minors: every k x k
/// principal minor has sign (-1)^k.
inline bool nd_by_all_minors(const RatMatrix& a) {
  const std::size_t n = a.dim();
  if (n == 0) return true;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    RatMatrix sub(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = a(idx[i], idx[j]);
    const int expected = idx.size() % 2 ? -1 : 1;
    if (sgn(leibniz_det(sub)) != expected) return false;
  }
  return true;
}

/// Cramer's rule.
inline RatVector cramer_solve(const RatMatrix& a, const RatVector& b) {
  const Rational d = leibniz_det(a);
  RatVector x(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) {
    RatMatrix ak = a;
    for (std::size_t i = 0; i < a.dim(); ++i) ak(i, k) = b[i];
    x[k] = leibniz_det(ak) / d;
  }
  return x;
}

inline RatMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  RatMatrix a(n);
  std::uniform_int_distribution<long> dist(lo, hi);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = dist(rng);
  return a;
}

/// All subsets of {0..n-1} as sorted index vectors.
inline std::vector<CurveSet> all_subsets(std::size_t n) {
  std::vector<CurveSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    CurveSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

/// Brute force: subsets of the curves whose Gram block passes the
/// all-minors test.
inline std::vector<CurveSet> nd_subsets(const SurfaceModel& m) {
  std::vector<CurveSet> out;
  for (const auto& s : all_subsets(m.curve_count())) {
    if (s.empty() || nd_by_all_minors(restrict_gram(m, s))) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const CurveSet& a, const CurveSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

/// Every subset T (negative definite or empty) for which
/// N_T = sum_{i in T} b_i C_i with (D - N_T) . C_i = 0 on T has all b_i > 0
/// and leaves D - N_T nonnegative on every curve. Solved by Cramer's rule.
inline std::vector<CurveSet> zariski_candidates(const SurfaceModel& m, const DivisorClass& d) {
  const RatVector dc = curve_pairings(m, d);
  const RatMatrix& g = m.curve_gram();
  std::vector<CurveSet> out;
  for (const auto& t : nd_subsets(m)) {
    RatVector b;
    if (!t.empty()) {
      RatMatrix gt(t.size());
      RatVector rhs(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) {
        rhs[i] = dc[t[i]];
        for (std::size_t j = 0; j < t.size(); ++j) gt(i, j) = g(t[i], t[j]);
      }
      b = cramer_solve(gt, rhs);
    }
    bool ok = std::all_of(b.begin(), b.end(), [](const Rational& x) { return x > 0; });
    for (std::size_t c = 0; c < m.curve_count() && ok; ++c) {
      Rational p = dc[c];
      for (std::size_t i = 0; i < t.size(); ++i) p -= b[i] * g(t[i], c);
      ok = p >= 0;
    }
    if (ok) out.push_back(t);
  }
  return out;
}

}  // namespace k3chambers::oracle
