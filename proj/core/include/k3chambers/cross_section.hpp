#pragma once

#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "k3chambers/chamber_atlas.hpp"

namespace k3chambers {

enum class PlotMode { Weyl, Zariski, Both };

/// A triangular slice of the cone spanned by three divisor classes.
struct CrossSectionSpec {
  std::array<DivisorClass, 3> corners;
  /// Subdivisions per edge; the triangle is cut into resolution^2 cells.
  std::size_t resolution = 400;
  PlotMode mode = PlotMode::Both;
  /// Worker threads for classification; 0 picks hardware concurrency.
  std::size_t threads = 0;
};

/// Corners = the first three curve classes. Throws DegenerateCorners if
/// the model has fewer than three curves.
CrossSectionSpec default_cross_section(const SurfaceModel& m);

/// Barycentric coordinates (numerators over 3 * resolution) of a cell
/// centroid. Cells are numbered row by row from the edge opposite the
/// third corner; row r holds 2 * (resolution - r) - 1 alternating up and
/// down triangles.
struct CellPosition {
  std::size_t row = 0;
  std::size_t column = 0;
  std::array<std::size_t, 3> weights{};
};

struct CellSample {
  CellPosition position;
  bool big = false;
  ChamberSignature weyl;
  ChamberSignature zariski;
};

struct CrossSection {
  std::size_t resolution = 0;
  PlotMode mode = PlotMode::Both;
  /// Curve name, "H", or the coordinate tuple of each corner.
  std::array<std::string, 3> corner_labels;
  /// Row-major cell order.
  std::vector<CellSample> cells;
};

/// Throws DegenerateCorners for linearly dependent corners and
/// InvalidArgument for resolution < 2.
CrossSection classify_cross_section(const SurfaceModel& m, const CrossSectionSpec& spec);

struct CrossSectionSummary {
  std::size_t cells = 0;
  std::size_t not_big = 0;
  std::size_t weyl_boundary = 0;
  std::size_t zariski_boundary = 0;
  /// Supports attained by big samples off the walls.
  std::set<CurveSet> weyl_supports;
  std::set<CurveSet> zariski_supports;
  /// Big samples, off the walls in both panels, with different supports.
  std::size_t differing = 0;
};

CrossSectionSummary summarize(const CrossSection& section);

/// SVG 1.1 document, one panel per requested decomposition, plus legend.
/// Byte-identical for identical inputs.
std::string render_svg(const SurfaceModel& m, const CrossSection& section);

std::string render_cross_section(const SurfaceModel& m, const CrossSectionSpec& spec);

}  // namespace k3chambers
