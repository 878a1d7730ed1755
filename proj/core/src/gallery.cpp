#include "k3chambers/gallery.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>

#include "k3chambers/error.hpp"

namespace k3chambers {

namespace {

bool admissible_ample(const RatMatrix& gram, const std::vector<Curve>& curves,
                      const RatVector& h) {
  const RatVector gh = gram * h;
  if (sign(dot(h, gh)) <= 0) return false;
  return std::all_of(curves.begin(), curves.end(),
                     [&](const Curve& c) { return sign(dot(c.coords, gh)) > 0; });
}

std::vector<Curve> basis_curves(const std::vector<std::string>& names) {
  std::vector<Curve> curves;
  for (std::size_t i = 0; i < names.size(); ++i) {
    RatVector e(names.size());
    e[i] = 1;
    curves.push_back({names[i], std::move(e)});
  }
  return curves;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

RatVector choose_ample(const RatMatrix& gram, const std::vector<Curve>& curves,
                       const RatVector& candidate) {
  if (admissible_ample(gram, curves, candidate)) return candidate;
  const std::size_t n = gram.dim();
  constexpr long kMaxEntry = 8;
  constexpr std::size_t kMaxSearchRank = 6;
  if (n == 0 || n > kMaxSearchRank) {
    throw Error(ErrorCode::InvalidModel, "ample class search only covers ranks 1..6");
  }
  std::vector<std::vector<long>> pool;
  std::vector<long> v(n, 1);
  for (;;) {
    pool.push_back(v);
    std::size_t i = n;
    while (i > 0 && v[i - 1] == kMaxEntry) v[--i] = 1;
    if (i == 0) break;
    ++v[i - 1];
  }
  std::stable_sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), 0L) < std::accumulate(b.begin(), b.end(), 0L);
  });
  for (const auto& p : pool) {
    RatVector h(p.begin(), p.end());
    if (admissible_ample(gram, curves, h)) return h;
  }
  throw Error(ErrorCode::InvalidModel, "no small positive integer ample class found");
}

GalleryEntry quartic_example() {
  const RatMatrix gram{{-2, 1, 2}, {1, -2, 2}, {2, 2, -2}};
  auto curves = basis_curves({"L1", "L2", "C"});
  RatVector ample = choose_ample(gram, curves, {2, 2, 2});
  GalleryEntry entry{
      "quartic",
      "smooth quartic with hyperplane section L1 + L2 + C, Picard number three",
      SurfaceModel::full_lattice(gram, std::move(curves), std::move(ample)),
      {}};
  entry.expected.chamber_count = 5;
  entry.expected.coincide = false;
  entry.expected.inclusion = {
      {{}, true, true},        {{0}, false, true},   {{1}, false, true},
      {{2}, true, true},       {{0, 1}, true, false},
  };
  return entry;
}

GalleryEntry double_cover_example() {
  const RatMatrix gram{{-2, 0, 2}, {0, -2, 2}, {2, 2, -2}};
  auto curves = basis_curves({"F1", "F2", "C"});
  RatVector ample = choose_ample(gram, curves, {2, 2, 2});
  GalleryEntry entry{
      "double-cover",
      "double cover of the plane blown up in two points, curves F1, F2, C",
      SurfaceModel::full_lattice(gram, std::move(curves), std::move(ample)),
      {}};
  entry.expected.chamber_count = 5;
  entry.expected.coincide = true;
  entry.expected.inclusion = {
      {{}, true, true}, {{0}, true, true}, {{1}, true, true},
      {{2}, true, true}, {{0, 1}, true, true},
  };
  return entry;
}

GalleryEntry picard_one_example() {
  GalleryEntry entry{"picard-one", "Picard number one, H^2 = 4, no (-2)-curves",
                     SurfaceModel::full_lattice(RatMatrix{{4}}, {}, {1}), {}};
  entry.expected.chamber_count = 1;
  entry.expected.coincide = true;
  entry.expected.inclusion = {{{}, true, true}};
  return entry;
}

std::vector<std::string> gallery_ids() { return {"quartic", "double-cover", "picard-one"}; }

GalleryEntry gallery_entry(const std::string& id) {
  if (id == "quartic") return quartic_example();
  if (id == "double-cover") return double_cover_example();
  if (id == "picard-one") return picard_one_example();
  throw Error(ErrorCode::InvalidArgument, "unknown gallery id '" + id + "'");
}

SurfaceModel random_configuration(std::uint64_t seed, std::size_t curve_count,
                                  double edge_density) {
  if (curve_count > 12) throw Error(ErrorCode::InvalidArgument, "at most 12 curves");
  std::mt19937_64 rng(seed);
  RatMatrix g(curve_count);
  for (std::size_t i = 0; i < curve_count; ++i) {
    g(i, i) = -2;
    for (std::size_t j = i + 1; j < curve_count; ++j) {
      const bool edge = unit(rng) < edge_density;
      const std::uint64_t value = draw(rng, 2) + 1;
      g(i, j) = g(j, i) = edge ? static_cast<long>(value) : 0L;
    }
  }
  RatVector dots(curve_count);
  for (auto& d : dots) d = static_cast<long>(draw(rng, 5) + 1);
  const Rational self = static_cast<long>(2 * (draw(rng, 6) + 1));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < curve_count; ++i) names.push_back("C" + std::to_string(i + 1));
  return SurfaceModel::configuration(std::move(g), std::move(names), std::move(dots), self);
}

AdeSample random_ade_gram(std::uint64_t seed, std::size_t max_nodes) {
  if (max_nodes == 0) throw Error(ErrorCode::InvalidArgument, "max_nodes must be positive");
  std::mt19937_64 rng(seed);
  const std::size_t total = static_cast<std::size_t>(draw(rng, max_nodes)) + 1;

  std::vector<AdeType> components;
  for (std::size_t left = total; left > 0;) {
    std::vector<AdeType> options;
    for (std::size_t n = 1; n <= left; ++n) options.push_back({AdeFamily::A, n});
    for (std::size_t n = 4; n <= left; ++n) options.push_back({AdeFamily::D, n});
    for (std::size_t n = 6; n <= std::min<std::size_t>(8, left); ++n) {
      options.push_back({AdeFamily::E, n});
    }
    const AdeType pick = options[draw(rng, options.size())];
    components.push_back(pick);
    left -= pick.rank;
  }

  std::vector<std::size_t> perm(total);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = total; i > 1; --i) std::swap(perm[i - 1], perm[draw(rng, i)]);

  AdeSample sample{RatMatrix(total), components};
  std::size_t offset = 0;
  for (const auto& type : components) {
    const RatMatrix block = dynkin_gram(type);
    for (std::size_t i = 0; i < type.rank; ++i) {
      for (std::size_t j = 0; j < type.rank; ++j) {
        sample.gram(perm[offset + i], perm[offset + j]) = block(i, j);
      }
    }
    offset += type.rank;
  }
  std::sort(sample.components.begin(), sample.components.end(),
            [](const AdeType& a, const AdeType& b) { return a.name() < b.name(); });
  return sample;
}

}  // namespace k3chambers
