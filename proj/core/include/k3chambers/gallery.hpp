#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "k3chambers/ade.hpp"
#include "k3chambers/lattice_model.hpp"

namespace k3chambers {

struct InclusionRow {
  CurveSet support;
  bool weyl_in_zariski = true;
  bool zariski_interior_in_weyl = true;

  friend bool operator==(const InclusionRow&, const InclusionRow&) = default;
};

struct GalleryExpected {
  std::size_t chamber_count = 0;
  bool coincide = true;
  /// One row per chamber in atlas order.
  std::vector<InclusionRow> inclusion;
};

struct GalleryEntry {
  std::string id;
  std::string description;
  SurfaceModel model;
  GalleryExpected expected;
};

/// Quartic with a hyperplane section L1 + L2 + C (two lines, a conic),
/// Picard number three, basis (L1, L2, C).
GalleryEntry quartic_example();
/// K3 double cover with curves F1, F2, C, F1.F2 = 0, F_i.C = 2.
GalleryEntry double_cover_example();
/// Picard number one, H^2 = 4, no (-2)-curves.
GalleryEntry picard_one_example();

std::vector<std::string> gallery_ids();
/// Throws InvalidArgument for unknown ids.
GalleryEntry gallery_entry(const std::string& id);

/// Returns `candidate` if it pairs positively with every curve and has
/// positive square; otherwise the first positive integer vector (entries
/// up to 8, ordered by entry sum, then lexicographically) that does.
/// Throws InvalidModel if none is found.
RatVector choose_ample(const RatMatrix& gram, const std::vector<Curve>& curves,
                       const RatVector& candidate);

/// Configuration-mode model with `curve_count` (<= 12) curves C1..Cn.
/// Each off-diagonal entry is nonzero with probability `edge_density`,
/// then 1 or 2 with equal odds; ample intersections in 1..5, ample square
/// in {2, 4, ..., 12}. Deterministic in `seed`.
SurfaceModel random_configuration(std::uint64_t seed, std::size_t curve_count,
                                  double edge_density);

struct AdeSample {
  RatMatrix gram;
  /// Component types sorted by name.
  std::vector<AdeType> components;
};

/// -2 I + adjacency of a random disjoint union of Dynkin diagrams on
/// 1..max_nodes nodes, with shuffled node labels.
AdeSample random_ade_gram(std::uint64_t seed, std::size_t max_nodes = 8);

}  // namespace k3chambers
