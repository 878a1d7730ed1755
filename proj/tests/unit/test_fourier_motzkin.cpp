#include <gtest/gtest.h>

#include <random>

#include "k3chambers/fourier_motzkin.hpp"
#include "k3chambers/gallery.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace k3chambers;
using k3chambers::testing::code_of;

namespace {

StrictRow row(RatVector c, Rational k, Sense s) { return {std::move(c), std::move(k), s}; }

// Points of the box [-2, 2]^n with denominator q.
bool grid_hit(const LinearSystemFeasibility& p, long q) {
  const std::size_t n = p.variable_count;
  std::vector<long> idx(n, -2 * q);
  for (;;) {
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = ratio(idx[i], q);
    if (satisfies(p, x)) return true;
    std::size_t i = 0;
    while (i < n && idx[i] == 2 * q) idx[i++] = -2 * q;
    if (i == n) return false;
    ++idx[i];
  }
}

// The Weyl sign system of S in terms of the simplex t + sum a_i = 1,
// t > 0: (t H + sum a_i C_i) . C_j < 0 on S and > 0 elsewhere.
bool simplex_hit(const SurfaceModel& m, const CurveSet& s, long q) {
  const std::size_t k = m.curve_count();
  std::vector<long> a(k, 0);
  for (;;) {
    long used = 0;
    for (long v : a) used += v;
    if (used < q) {
      const Rational t = ratio(q - used, q);
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        Rational d = t * m.ample_dots()[j];
        for (std::size_t i = 0; i < k; ++i) d += ratio(a[i], q) * m.curve_gram()(i, j);
        const bool neg = std::find(s.begin(), s.end(), j) != s.end();
        ok = neg ? d < 0 : d > 0;
      }
      if (ok) return true;
    }
    std::size_t i = 0;
    while (i < k && a[i] == q) a[i++] = 0;
    if (i == k) return false;
    ++a[i];
  }
}

LinearSystemFeasibility weyl_system(const SurfaceModel& m, const CurveSet& s) {
  LinearSystemFeasibility p;
  p.variable_count = m.curve_count();
  for (std::size_t j = 0; j < m.curve_count(); ++j) {
    RatVector c(m.curve_count());
    for (std::size_t i = 0; i < m.curve_count(); ++i) c[i] = m.curve_gram()(i, j);
    const bool neg = std::find(s.begin(), s.end(), j) != s.end();
    p.strict_rows.push_back(row(c, m.ample_dots()[j], neg ? Sense::Negative : Sense::Positive));
  }
  for (std::size_t i = 0; i < m.curve_count(); ++i) p.nonneg_vars.push_back(i);
  return p;
}

}  // namespace

TEST(FourierMotzkin, OneVariable) {
  LinearSystemFeasibility p;
  p.variable_count = 1;
  p.strict_rows = {row({1}, -1, Sense::Negative), row({1}, 0, Sense::Positive)};
  const auto r = fm_feasible(p);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.sample, (RatVector{ratio(1, 2)}));

  p.strict_rows = {row({1}, 0, Sense::Negative), row({1}, 0, Sense::Positive)};
  EXPECT_FALSE(fm_feasible(p).feasible);
  EXPECT_TRUE(fm_feasible(p).sample.empty());
}

TEST(FourierMotzkin, NonStrictSignConstraints) {
  LinearSystemFeasibility p;
  p.variable_count = 1;
  p.nonneg_vars = {0};
  p.strict_rows = {row({1}, 0, Sense::Negative)};
  EXPECT_FALSE(fm_feasible(p).feasible);
  p.strict_rows = {row({1}, 0, Sense::Positive)};
  EXPECT_TRUE(fm_feasible(p).feasible);
  // x <= 0 and x >= 0 leave exactly x = 0.
  p.strict_rows = {row({1}, -1, Sense::Negative)};
  p.nonneg_vars = {0};
  const auto r = fm_feasible(p);
  ASSERT_TRUE(r.feasible);
  EXPECT_TRUE(satisfies(p, r.sample));
}

TEST(FourierMotzkin, EmptySystems) {
  LinearSystemFeasibility p;
  p.variable_count = 2;
  const auto r = fm_feasible(p);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.sample.size(), 2u);
  p.variable_count = 0;
  p.strict_rows = {row({}, -1, Sense::Negative)};
  EXPECT_TRUE(fm_feasible(p).feasible);
  p.strict_rows = {row({}, 1, Sense::Negative)};
  EXPECT_FALSE(fm_feasible(p).feasible);
}

TEST(FourierMotzkin, TriangleInterior) {
  // x > 0, y > 0, x + y < 1.
  LinearSystemFeasibility p;
  p.variable_count = 2;
  p.strict_rows = {row({1, 0}, 0, Sense::Positive), row({0, 1}, 0, Sense::Positive),
                   row({1, 1}, -1, Sense::Negative)};
  auto r = fm_feasible(p);
  ASSERT_TRUE(r.feasible);
  EXPECT_TRUE(satisfies(p, r.sample));
  // ... and x + y > 1 as well.
  p.strict_rows.push_back(row({1, 1}, -1, Sense::Positive));
  EXPECT_FALSE(fm_feasible(p).feasible);
}

TEST(FourierMotzkin, MalformedProblems) {
  LinearSystemFeasibility p;
  p.variable_count = 2;
  p.strict_rows = {row({1}, 0, Sense::Negative)};
  EXPECT_EQ(code_of([&] { fm_feasible(p); }), ErrorCode::DimensionMismatch);
  p.strict_rows.clear();
  p.nonneg_vars = {2};
  EXPECT_EQ(code_of([&] { fm_feasible(p); }), ErrorCode::IndexOutOfRange);
}

TEST(FourierMotzkin, RandomSystemsAgreeWithGridSearch) {
  std::mt19937_64 rng(21);
  int feasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    LinearSystemFeasibility p;
    p.variable_count = 1 + trial % 3;
    const std::size_t rows = 1 + rng() % 5;
    for (std::size_t r = 0; r < rows; ++r) {
      RatVector c(p.variable_count);
      for (auto& x : c) x = static_cast<long>(rng() % 5) - 2;
      p.strict_rows.push_back(row(c, static_cast<long>(rng() % 5) - 2,
                                  rng() % 2 ? Sense::Negative : Sense::Positive));
    }
    for (std::size_t i = 0; i < p.variable_count; ++i)
      if (rng() % 3 == 0) p.nonneg_vars.push_back(i);
    const auto r = fm_feasible(p);
    if (r.feasible) {
      ++feasible;
      EXPECT_TRUE(satisfies(p, r.sample)) << "trial " << trial;
    } else {
      EXPECT_FALSE(grid_hit(p, 4)) << "grid found a point FM missed, trial " << trial;
    }
  }
  EXPECT_GT(feasible, 50);
}

TEST(FourierMotzkin, WeylSystemsAgreeWithSimplexGrid) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const SurfaceModel m = random_configuration(seed, 1 + seed % 3, 0.6);
    for (const auto& s : oracle::all_subsets(m.curve_count())) {
      const auto r = fm_feasible(weyl_system(m, s));
      bool hit = false;
      for (long q = 1; q <= 8 && !hit; ++q) hit = simplex_hit(m, s, q);
      if (r.feasible) {
        EXPECT_TRUE(satisfies(weyl_system(m, s), r.sample));
      } else {
        EXPECT_FALSE(hit) << "seed " << seed;
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 200);
}
