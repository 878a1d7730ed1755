#include <gtest/gtest.h>

#include <random>

#include "k3chambers/gallery.hpp"
#include "k3chambers/lattice_model.hpp"
#include "test_util.hpp"

using namespace k3chambers;
using k3chambers::testing::code_of;

namespace {

DivisorClass random_divisor(const SurfaceModel& m, std::mt19937_64& rng) {
  RatVector a(m.curve_count());
  for (auto& x : a) x = ratio(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 4));
  return combine(m, Rational(1 + static_cast<long>(rng() % 4)), a);
}

bool has_issue(const ValidationReport& r, const std::string& code) {
  for (const auto& i : r.issues)
    if (i.code == code) return true;
  return false;
}

}  // namespace

TEST(LatticeModel, QuarticPairings) {
  const SurfaceModel m = quartic_example().model;
  ASSERT_EQ(m.curve_count(), 3u);
  EXPECT_EQ(m.curve_gram(), (RatMatrix{{-2, 1, 2}, {1, -2, 2}, {2, 2, -2}}));
  EXPECT_EQ(m.ample_dots(), (RatVector{2, 2, 4}));
  EXPECT_EQ(m.ample_self(), Rational(16));
  const DivisorClass d = DivisorClass::lattice({5, 2, 2});
  EXPECT_EQ(curve_pairings(m, d), (RatVector{-4, 5, 10}));
  EXPECT_EQ(ample_pairing(m, d), Rational(22));
  EXPECT_EQ(*m.curve_index("C"), 2u);
  EXPECT_FALSE(m.curve_index("X"));
}

TEST(LatticeModel, QuarticNefInequalities) {
  // x L1 + y L2 + z C is nef iff -2x + y + 2z, x - 2y + 2z and
  // 2x + 2y - 2z are all nonnegative.
  const SurfaceModel m = quartic_example().model;
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y)
      for (long z = -3; z <= 3; ++z) {
        const bool expected = -2 * x + y + 2 * z >= 0 && x - 2 * y + 2 * z >= 0 && 2 * x + 2 * y - 2 * z >= 0;
        EXPECT_EQ(is_nef(m, DivisorClass::lattice({x, y, z})), expected) << x << y << z;
      }
}

TEST(LatticeModel, PairIsSymmetricAndBilinear) {
  std::mt19937_64 rng(3);
  const SurfaceModel models[] = {quartic_example().model, double_cover_example().model,
                                 reduce_to_configuration(quartic_example().model),
                                 random_configuration(9, 5, 0.5)};
  for (const auto& m : models) {
    for (int trial = 0; trial < 100; ++trial) {
      const DivisorClass a = random_divisor(m, rng), b = random_divisor(m, rng),
                         c = random_divisor(m, rng);
      const Rational s = ratio(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
      EXPECT_EQ(pair(m, a, b), pair(m, b, a));
      EXPECT_EQ(pair(m, s * a + b, c), s * pair(m, a, c) + pair(m, b, c));
      const RatVector pc = curve_pairings(m, a);
      for (std::size_t j = 0; j < m.curve_count(); ++j) EXPECT_EQ(pc[j], pair(m, a, curve_class(m, j)));
    }
  }
}

TEST(LatticeModel, ReductionPreservesPairings) {
  std::mt19937_64 rng(4);
  for (const auto& id : gallery_ids()) {
    const SurfaceModel full = gallery_entry(id).model;
    const SurfaceModel conf = reduce_to_configuration(full);
    EXPECT_EQ(conf.mode(), ModelMode::Configuration);
    EXPECT_EQ(conf.curve_gram(), full.curve_gram());
    EXPECT_EQ(conf.ample_dots(), full.ample_dots());
    for (int trial = 0; trial < 50; ++trial) {
      RatVector a(full.curve_count());
      for (auto& x : a) x = static_cast<long>(rng() % 9) - 4;
      const Rational t(1 + static_cast<long>(rng() % 3));
      const DivisorClass df = combine(full, t, a), dc = combine(conf, t, a);
      EXPECT_EQ(curve_pairings(full, df), curve_pairings(conf, dc));
      EXPECT_EQ(pair(full, df, df), pair(conf, dc, dc));
    }
  }
}

TEST(LatticeModel, GalleryModelsAreValid) {
  for (const auto& id : gallery_ids()) EXPECT_TRUE(validate_model(gallery_entry(id).model).valid()) << id;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_TRUE(validate_model(random_configuration(seed, seed % 8, 0.4)).valid());
  }
}

TEST(LatticeModel, ValidationFindsEachViolation) {
  auto curves = [](std::initializer_list<const char*> names) {
    std::vector<Curve> out;
    std::size_t i = 0;
    for (const char* n : names) {
      RatVector e(names.size());
      e[i++] = 1;
      out.push_back({n, e});
    }
    return out;
  };
  // Definite Gram: wrong signature.
  EXPECT_TRUE(has_issue(validate_model(SurfaceModel::full_lattice(
                            RatMatrix{{-2, 0}, {0, -2}}, curves({"A", "B"}), {1, 1})),
                        "gram_signature"));
  // Self-intersection -4.
  EXPECT_TRUE(has_issue(validate_model(SurfaceModel::configuration(
                            RatMatrix{{-4}}, {"A"}, {1}, 2)),
                        "self_intersection"));
  // Negative intersection between curves.
  EXPECT_TRUE(has_issue(validate_model(SurfaceModel::configuration(
                            RatMatrix{{-2, -1}, {-1, -2}}, {"A", "B"}, {1, 1}, 2)),
                        "curve_intersection"));
  // Ample meets a curve in 0.
  EXPECT_TRUE(has_issue(validate_model(SurfaceModel::configuration(
                            RatMatrix{{-2}}, {"A"}, {0}, 2)),
                        "ample_curve"));
  EXPECT_TRUE(has_issue(validate_model(SurfaceModel::configuration(RatMatrix{{-2}}, {"A"}, {1}, 0)),
                        "ample_self"));
  EXPECT_TRUE(has_issue(validate_model(SurfaceModel::configuration(
                            RatMatrix{{-2, 0}, {0, -2}}, {"A", "A"}, {1, 1}, 2)),
                        "curve_name"));
  // The double cover with H = (2, 2, 2) is orthogonal to F1.
  const RatMatrix g{{-2, 0, 2}, {0, -2, 2}, {2, 2, -2}};
  EXPECT_TRUE(has_issue(validate_model(SurfaceModel::full_lattice(g, curves({"F1", "F2", "C"}),
                                                                  {2, 2, 2})),
                        "ample_curve"));
  EXPECT_EQ(code_of([&] {
              require_valid(SurfaceModel::configuration(RatMatrix{{-2}}, {"A"}, {0}, 2));
            }),
            ErrorCode::InvalidModel);
}

TEST(LatticeModel, ShapeErrorsAtConstruction) {
  EXPECT_EQ(code_of([] { SurfaceModel::full_lattice(RatMatrix{{2}}, {}, {1, 1}); }),
            ErrorCode::InvalidModel);
  EXPECT_EQ(code_of([] { SurfaceModel::configuration(RatMatrix{{-2}}, {"A", "B"}, {1}, 2); }),
            ErrorCode::InvalidModel);
}

TEST(LatticeModel, DivisorChecks) {
  const SurfaceModel full = quartic_example().model;
  const SurfaceModel conf = reduce_to_configuration(full);
  EXPECT_EQ(code_of([&] { check_divisor(full, DivisorClass::lattice({1, 2})); }),
            ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([&] { check_divisor(full, DivisorClass::combination(1, {0, 0, 0})); }),
            ErrorCode::ModeMismatch);
  EXPECT_EQ(code_of([&] { check_divisor(conf, DivisorClass::lattice({1, 2, 3})); }),
            ErrorCode::ModeMismatch);
  EXPECT_EQ(code_of([&] { curve_class(full, 3); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(ample_class(full), DivisorClass::lattice({2, 2, 2}));
  EXPECT_EQ(ample_class(conf), DivisorClass::combination(1, {0, 0, 0}));
}

TEST(LatticeModel, CurveSets) {
  const SurfaceModel m = quartic_example().model;
  EXPECT_EQ(make_curve_set(m, {2, 0, 2}), (CurveSet{0, 2}));
  EXPECT_EQ(code_of([&] { make_curve_set(m, {3}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(curve_set_from_names(m, {"C", "L1"}), (CurveSet{0, 2}));
  EXPECT_EQ(code_of([&] { curve_set_from_names(m, {"L3"}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(curve_set_names(m, {0, 1}), (std::vector<std::string>{"L1", "L2"}));
  EXPECT_EQ(restrict_gram(m, {0, 1}), (RatMatrix{{-2, 1}, {1, -2}}));
}

TEST(LatticeModel, GramOffDiagonalsNonnegativeOnValidModels) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const SurfaceModel m = random_configuration(seed, 1 + seed % 10, 0.5);
    ASSERT_TRUE(validate_model(m).valid());
    for (std::size_t i = 0; i < m.curve_count(); ++i)
      for (std::size_t j = 0; j < m.curve_count(); ++j)
        if (i != j) EXPECT_GE(m.curve_gram()(i, j), 0);
  }
}
