#include <gtest/gtest.h>

#include <random>

#include "k3chambers/chamber_atlas.hpp"
#include "k3chambers/gallery.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace k3chambers;
using k3chambers::testing::code_of;

namespace {

bool contains(const CurveSet& s, std::size_t c) { return std::find(s.begin(), s.end(), c) != s.end(); }

std::vector<SurfaceModel> random_models(std::size_t count, std::size_t max_curves) {
  std::vector<SurfaceModel> out;
  for (std::uint64_t seed = 0; seed < count; ++seed) {
    out.push_back(random_configuration(1000 + seed, 1 + seed % max_curves, 0.3 + 0.1 * (seed % 5)));
  }
  return out;
}

}  // namespace

TEST(ChamberAtlas, QuarticFamilies) {
  const SurfaceModel m = quartic_example().model;
  const std::vector<CurveSet> expected{{}, {0}, {1}, {2}, {0, 1}};
  EXPECT_EQ(enumerate_zariski_chambers(m).family(), expected);
  EXPECT_EQ(enumerate_weyl_chambers(m).family(), expected);
  EXPECT_TRUE(verify_bijection(m).equal);
}

TEST(ChamberAtlas, GalleryExpectationsHold) {
  for (const auto& id : gallery_ids()) {
    const GalleryEntry g = gallery_entry(id);
    const ChamberAtlas atlas = enumerate_zariski_chambers(g.model);
    EXPECT_EQ(atlas.size(), g.expected.chamber_count) << id;
    EXPECT_EQ(decompositions_coincide(g.model).coincide, g.expected.coincide) << id;
    ASSERT_EQ(atlas.entries.size(), g.expected.inclusion.size()) << id;
    for (std::size_t i = 0; i < atlas.entries.size(); ++i) {
      const auto& e = atlas.entries[i];
      const auto& row = g.expected.inclusion[i];
      EXPECT_EQ(e.support, row.support);
      EXPECT_EQ(e.weyl_in_zariski->holds, row.weyl_in_zariski) << id << " row " << i;
      EXPECT_EQ(e.zariski_in_weyl->holds, row.zariski_interior_in_weyl) << id << " row " << i;
    }
  }
}

TEST(ChamberAtlas, QuarticCertificates) {
  const SurfaceModel m = quartic_example().model;
  EXPECT_EQ(*weyl_in_zariski(m, {0}).counterexample, 1u);
  EXPECT_EQ(*weyl_in_zariski(m, {1}).counterexample, 0u);
  EXPECT_TRUE(weyl_in_zariski(m, {2}).holds);
  EXPECT_EQ(*zariski_interior_in_weyl(m, {0, 1}).pair, (CurvePair{0, 1}));
  EXPECT_EQ(code_of([&] { weyl_in_zariski(m, {0, 1, 2}); }), ErrorCode::NotNegativeDefinite);
  EXPECT_EQ(code_of([&] { classify_ade(m, {1, 2}); }), ErrorCode::NotNegativeDefinite);
  EXPECT_EQ(classify_ade(m, {0, 1}), (std::vector<AdeType>{{AdeFamily::A, 2}}));
}

TEST(ChamberAtlas, DivergenceWitnessByHand) {
  // G_{12} x = -h with G_{12} = [[-2, 1], [1, -2]], h = (2, 2): x = (2, 2).
  const SurfaceModel m = quartic_example().model;
  const DivisorClass d = divergence_witness(m, 0, 1);
  EXPECT_EQ(d, DivisorClass::lattice({5, 7, 2}));
  EXPECT_EQ(curve_pairings(m, d), (RatVector{1, -5, 20}));
  const CoincidenceCertificate c = decompositions_coincide(m);
  EXPECT_FALSE(c.coincide);
  EXPECT_EQ(*c.pair, (CurvePair{0, 1}));
  EXPECT_EQ(*c.witness, d);
  EXPECT_EQ(c.witness_weyl->support, (CurveSet{1}));
  EXPECT_EQ(c.witness_zariski->support, (CurveSet{0, 1}));
}

TEST(ChamberAtlas, WeylWitnessMeetsSupportInMinusOne) {
  std::vector<SurfaceModel> models = random_models(60, 6);
  models.push_back(quartic_example().model);
  models.push_back(double_cover_example().model);
  for (const auto& m : models) {
    for (const auto& e : enumerate_zariski_chambers(m).entries) {
      if (e.support.empty()) continue;
      const DivisorClass w = weyl_witness(m, e.support);
      const RatVector dc = curve_pairings(m, w);
      for (std::size_t j = 0; j < m.curve_count(); ++j) {
        if (contains(e.support, j)) EXPECT_EQ(dc[j], -1);
        else EXPECT_GT(dc[j], 0);
      }
      EXPECT_EQ(weyl_signature(m, w), (ChamberSignature{e.support, false, ChamberKind::Weyl}));
    }
  }
  const SurfaceModel q = quartic_example().model;
  EXPECT_EQ(code_of([&] { weyl_witness(q, {}); }), ErrorCode::NotNegativeDefinite);
  EXPECT_EQ(code_of([&] { weyl_witness(q, {0, 1, 2}); }), ErrorCode::NotNegativeDefinite);
}

TEST(ChamberAtlas, BijectionOnRandomModels) {
  for (const auto& m : random_models(120, 6)) {
    const ChamberAtlas z = enumerate_zariski_chambers(m);
    EXPECT_EQ(z.family(), oracle::nd_subsets(m));
    const BijectionReport r = compare_families(z, enumerate_weyl_chambers(m));
    EXPECT_TRUE(r.equal);
    EXPECT_TRUE(r.zariski_only.empty());
    EXPECT_TRUE(r.weyl_only.empty());
  }
}

TEST(ChamberAtlas, FamilyIsDownwardClosed) {
  for (const auto& m : random_models(80, 7)) {
    const ChamberAtlas z = enumerate_zariski_chambers(m);
    for (const auto& s : z.family()) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        CurveSet t = s;
        t.erase(t.begin() + static_cast<long>(drop));
        EXPECT_TRUE(z.contains(t));
      }
    }
  }
}

TEST(ChamberAtlas, NegativeDefiniteSupportsMeetInZeroOrOne) {
  for (const auto& m : random_models(80, 7)) {
    for (const auto& s : enumerate_zariski_chambers(m).family()) {
      for (std::size_t a : s)
        for (std::size_t b : s)
          if (a != b) EXPECT_TRUE(m.curve_gram()(a, b) == 0 || m.curve_gram()(a, b) == 1);
    }
  }
}

TEST(ChamberAtlas, WitnessesLandInTheirChambers) {
  std::vector<SurfaceModel> models = random_models(60, 6);
  models.push_back(quartic_example().model);
  for (const auto& m : models) {
    for (const auto& e : enumerate_zariski_chambers(m).entries) {
      const DivisorClass w = e.support.empty() ? ample_class(m) : weyl_witness(m, e.support);
      if (e.weyl_in_zariski->holds) {
        EXPECT_EQ(zariski_chamber_of(m, w).support, e.support);
        continue;
      }
      const std::size_t cp = *e.weyl_in_zariski->counterexample;
      const DivisorClass x = weyl_not_zariski_witness(m, e.support, cp);
      const auto ch = classify_divisor(m, x);
      ASSERT_TRUE(ch.has_value());
      EXPECT_EQ(ch->weyl.support, e.support);
      EXPECT_NE(ch->zariski.support, e.support);
      EXPECT_TRUE(contains(ch->zariski.support, cp));
    }
  }
}

TEST(ChamberAtlas, CoincidenceMatchesInclusionVerdicts) {
  std::vector<SurfaceModel> models = random_models(150, 6);
  for (const auto& id : gallery_ids()) models.push_back(gallery_entry(id).model);
  int coinciding = 0;
  for (const auto& m : models) {
    const CoincidenceCertificate c = decompositions_coincide(m);
    bool all = true;
    for (const auto& e : enumerate_zariski_chambers(m).entries) {
      all = all && e.weyl_in_zariski->holds && e.zariski_in_weyl->holds;
    }
    EXPECT_EQ(c.coincide, all);
    coinciding += c.coincide;
    if (!c.coincide) {
      EXPECT_EQ(m.curve_gram()(c.pair->first, c.pair->second), 1);
      EXPECT_NE(c.witness_weyl->support, c.witness_zariski->support);
    }
  }
  EXPECT_GT(coinciding, 10);
  EXPECT_LT(coinciding, static_cast<int>(models.size()));
}

TEST(ChamberAtlas, SignaturesAgreeWhenDecompositionsCoincide) {
  std::mt19937_64 rng(31);
  std::vector<SurfaceModel> models = random_models(100, 6);
  models.push_back(double_cover_example().model);
  for (const auto& m : models) {
    if (!decompositions_coincide(m).coincide) continue;
    int sampled = 0;
    for (int trial = 0; trial < 400 && sampled < 30; ++trial) {
      RatVector a(m.curve_count());
      for (auto& x : a) x = ratio(static_cast<long>(rng() % 25), 1 + static_cast<long>(rng() % 4));
      const auto ch = classify_divisor(m, combine(m, 1, a));
      if (!ch || ch->weyl.boundary || ch->zariski.boundary) continue;
      ++sampled;
      EXPECT_EQ(ch->weyl.support, ch->zariski.support);
    }
  }
}

TEST(ChamberAtlas, ReductionCommutesWithAtlas) {
  for (const auto& id : gallery_ids()) {
    const SurfaceModel full = gallery_entry(id).model;
    const SurfaceModel conf = reduce_to_configuration(full);
    EXPECT_EQ(enumerate_zariski_chambers(full).family(), enumerate_zariski_chambers(conf).family());
    EXPECT_EQ(enumerate_weyl_chambers(full).family(), enumerate_weyl_chambers(conf).family());
    EXPECT_EQ(decompositions_coincide(full).coincide, decompositions_coincide(conf).coincide);
    EXPECT_EQ(decompositions_coincide(full).pair, decompositions_coincide(conf).pair);
  }
}

TEST(ChamberAtlas, BoundaryFlags) {
  const SurfaceModel m = quartic_example().model;
  // (3, 2, 2) is orthogonal to L1: on the wall of W_empty and W_{L1}.
  const DivisorClass wall = DivisorClass::lattice({3, 2, 2});
  EXPECT_TRUE(weyl_signature(m, wall).boundary);
  EXPECT_TRUE(zariski_chamber_of(m, wall).boundary);
  EXPECT_FALSE(weyl_signature(m, ample_class(m)).boundary);
  EXPECT_EQ(code_of([&] { weyl_signature(m, curve_class(m, 0)); }), ErrorCode::NotBig);
  EXPECT_FALSE(classify_divisor(m, curve_class(m, 0)).has_value());
}

TEST(ChamberAtlas, AtlasJson) {
  const SurfaceModel m = quartic_example().model;
  const Json j = atlas_to_json(m, enumerate_zariski_chambers(m));
  EXPECT_EQ(j["kind"], "zariski");
  EXPECT_EQ(j["count"], 5);
  EXPECT_EQ(j["chambers"][4]["support"], Json::array({"L1", "L2"}));
  EXPECT_EQ(j["chambers"][4]["ade"], Json::array({"A2"}));
  EXPECT_EQ(j["chambers"][1]["weyl_in_zariski"]["counterexample"], "L2");
  EXPECT_EQ(j.dump(), atlas_to_json(m, enumerate_zariski_chambers(m)).dump());
}

TEST(ChamberAtlas, TooManyCurvesForWeylEnumeration) {
  RatMatrix g(21);
  for (std::size_t i = 0; i < 21; ++i) g(i, i) = -2;
  std::vector<std::string> names;
  for (int i = 0; i < 21; ++i) names.push_back("C" + std::to_string(i));
  const SurfaceModel m = SurfaceModel::configuration(g, names, RatVector(21, 1), 2);
  EXPECT_EQ(code_of([&] { enumerate_weyl_chambers(m); }), ErrorCode::InvalidArgument);
}
