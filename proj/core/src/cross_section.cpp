#include "k3chambers/cross_section.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <map>
#include <thread>

#include "k3chambers/error.hpp"

namespace k3chambers {

namespace {

constexpr double kSide = 400.0;
constexpr double kHeight = 346.41016151377545;  // kSide * sqrt(3) / 2
constexpr double kMargin = 24.0;
constexpr double kTitleBand = 28.0;
constexpr double kPanelGap = 40.0;
constexpr double kLegendRow = 18.0;

constexpr const char* kBoundaryColor = "#9e9e9e";
constexpr std::array<const char*, 12> kPalette = {
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
    "#b3de69", "#fccde5", "#bc80bd", "#ccebc5", "#ffed6f", "#e5c494",
};

RatVector flatten(const DivisorClass& d) {
  if (d.mode == ModelMode::FullLattice) return d.coords;
  RatVector v{d.ample_coeff};
  v.insert(v.end(), d.curve_coeffs.begin(), d.curve_coeffs.end());
  return v;
}

std::size_t row_offset(std::size_t n, std::size_t r) { return r * (2 * n - r); }

CellPosition cell_position(std::size_t n, std::size_t r, std::size_t t) {
  CellPosition p;
  p.row = r;
  p.column = t;
  const std::size_t m = t / 2;
  if (t % 2 == 0) {
    p.weights = {3 * (n - r - m) - 2, 3 * m + 1, 3 * r + 1};
  } else {
    p.weights = {3 * (n - r - m) - 4, 3 * m + 2, 3 * r + 2};
  }
  return p;
}

struct Point {
  double x;
  double y;
};

struct Panel {
  double left;
  double top;

  Point lattice(std::size_t n, std::size_t j, std::size_t k) const {
    // i * A + j * B + k * C over n; A bottom-left, B bottom-right, C apex.
    const double fj = static_cast<double>(j) / static_cast<double>(n);
    const double fk = static_cast<double>(k) / static_cast<double>(n);
    return {left + kSide * (fj + fk / 2.0), top + kHeight * (1.0 - fk)};
  }

  Point centroid(std::size_t n, const CellPosition& p) const {
    const double d = 3.0 * static_cast<double>(n);
    const double fj = static_cast<double>(p.weights[1]) / d;
    const double fk = static_cast<double>(p.weights[2]) / d;
    return {left + kSide * (fj + fk / 2.0), top + kHeight * (1.0 - fk)};
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string joined_names(const SurfaceModel& m, const CurveSet& s) {
  std::string out;
  for (const auto& name : curve_set_names(m, s)) {
    if (!out.empty()) out += ",";
    out += name;
  }
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

bool size_lex_less(const CurveSet& a, const CurveSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Palette slot per support: hash of the curve names, probing forward on
// collisions while free slots remain.
std::map<CurveSet, std::size_t> assign_colors(const SurfaceModel& m,
                                              std::vector<CurveSet> supports) {
  std::sort(supports.begin(), supports.end(), size_lex_less);
  std::map<CurveSet, std::size_t> colors;
  std::array<bool, kPalette.size()> used{};
  std::size_t used_count = 0;
  for (const auto& s : supports) {
    std::size_t slot = fnv1a(joined_names(m, s)) % kPalette.size();
    if (used_count < kPalette.size()) {
      while (used[slot]) slot = (slot + 1) % kPalette.size();
      used[slot] = true;
      ++used_count;
    }
    colors.emplace(s, slot);
  }
  return colors;
}

// -1 = not drawn, -2 = wall, otherwise an index into `supports`.
using PaintKey = long;

PaintKey paint_key(const CellSample& cell, ChamberKind kind,
                   const std::map<CurveSet, std::size_t>& ids) {
  if (!cell.big) return -1;
  const ChamberSignature& sig = kind == ChamberKind::Weyl ? cell.weyl : cell.zariski;
  if (sig.boundary) return -2;
  return static_cast<PaintKey>(ids.at(sig.support));
}

void polygon(std::string& out, const std::vector<Point>& pts, const char* fill) {
  out += "<polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += fmt(pts[i].x) + "," + fmt(pts[i].y);
  }
  out += "\" fill=\"";
  out += fill;
  out += "\" stroke=\"";
  out += fill;
  out += "\" stroke-width=\"0.3\"/>\n";
}

void text(std::string& out, Point p, const std::string& s, const char* anchor, int size) {
  out += "<text x=\"" + fmt(p.x) + "\" y=\"" + fmt(p.y) + "\" font-family=\"sans-serif\" font-size=\"" +
         std::to_string(size) + "\" text-anchor=\"" + anchor + "\">" + xml_escape(s) + "</text>\n";
}

void render_panel(std::string& out, const SurfaceModel& m, const CrossSection& section,
                  ChamberKind kind, const Panel& panel, const std::vector<CurveSet>& supports,
                  const std::map<CurveSet, std::size_t>& ids,
                  const std::map<CurveSet, std::size_t>& colors) {
  const auto& corner_labels = section.corner_labels;
  const std::size_t n = section.resolution;
  const char* title = kind == ChamberKind::Weyl ? "Weyl chambers" : "Zariski chambers";
  out += std::string("<g id=\"") + (kind == ChamberKind::Weyl ? "weyl" : "zariski") + "\">\n";
  text(out, {panel.left + kSide / 2.0, panel.top - 12.0}, title, "middle", 14);

  std::vector<double> sum_x(supports.size()), sum_y(supports.size());
  std::vector<std::size_t> hits(supports.size());

  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t width = 2 * (n - r) - 1;
    const std::size_t base = row_offset(n, r);
    std::size_t t = 0;
    while (t < width) {
      const PaintKey key = paint_key(section.cells[base + t], kind, ids);
      std::size_t end = t + 1;
      while (end < width && paint_key(section.cells[base + end], kind, ids) == key) ++end;
      if (key != -1) {
        // Bottom edge lies on C-weight r, top edge on r + 1.
        const std::size_t blo = (t % 2 == 0) ? t / 2 : t / 2 + 1;
        const std::size_t last = end - 1;
        const std::size_t bhi = last / 2 + 1;
        const std::size_t tlo = t / 2;
        const std::size_t thi = (last % 2 == 0) ? last / 2 : last / 2 + 1;
        std::vector<Point> pts{panel.lattice(n, blo, r)};
        if (bhi != blo) pts.push_back(panel.lattice(n, bhi, r));
        pts.push_back(panel.lattice(n, thi, r + 1));
        if (thi != tlo) pts.push_back(panel.lattice(n, tlo, r + 1));
        const char* fill = key == -2 ? kBoundaryColor
                                     : kPalette[colors.at(supports[static_cast<std::size_t>(key)])];
        polygon(out, pts, fill);
      }
      for (std::size_t q = t; q < end && key >= 0; ++q) {
        const Point c = panel.centroid(n, section.cells[base + q].position);
        sum_x[static_cast<std::size_t>(key)] += c.x;
        sum_y[static_cast<std::size_t>(key)] += c.y;
        ++hits[static_cast<std::size_t>(key)];
      }
      t = end;
    }
  }

  const std::string outline = fmt(panel.left) + "," + fmt(panel.top + kHeight) + " " +
                              fmt(panel.left + kSide) + "," + fmt(panel.top + kHeight) + " " +
                              fmt(panel.left + kSide / 2.0) + "," + fmt(panel.top);
  out += "<polygon points=\"" + outline + "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

  for (std::size_t i = 0; i < supports.size(); ++i) {
    if (hits[i] == 0 || supports[i].empty()) continue;
    const double h = static_cast<double>(hits[i]);
    text(out, {sum_x[i] / h, sum_y[i] / h + 4.0}, joined_names(m, supports[i]), "middle", 12);
  }
  text(out, {panel.left - 4.0, panel.top + kHeight + 16.0}, corner_labels[0], "start", 12);
  text(out, {panel.left + kSide + 4.0, panel.top + kHeight + 16.0}, corner_labels[1], "end", 12);
  text(out, {panel.left + kSide / 2.0 + 8.0, panel.top + 4.0}, corner_labels[2], "start", 12);
  out += "</g>\n";
}

std::string corner_label(const SurfaceModel& m, const DivisorClass& d) {
  for (std::size_t j = 0; j < m.curve_count(); ++j) {
    if (curve_class(m, j) == d) return m.curve_name(j);
  }
  if (ample_class(m) == d) return "H";
  std::string out = "(";
  const RatVector v = flatten(d);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

}  // namespace

CrossSectionSpec default_cross_section(const SurfaceModel& m) {
  if (m.curve_count() < 3) {
    throw Error(ErrorCode::DegenerateCorners, "default corners need three curves");
  }
  CrossSectionSpec spec;
  spec.corners = {curve_class(m, 0), curve_class(m, 1), curve_class(m, 2)};
  return spec;
}

CrossSection classify_cross_section(const SurfaceModel& m, const CrossSectionSpec& spec) {
  if (spec.resolution < 2) throw Error(ErrorCode::InvalidArgument, "resolution must be at least 2");
  for (const auto& c : spec.corners) check_divisor(m, c);
  if (rank({flatten(spec.corners[0]), flatten(spec.corners[1]), flatten(spec.corners[2])}) < 3) {
    throw Error(ErrorCode::DegenerateCorners, "cross-section corners are linearly dependent");
  }

  const std::size_t n = spec.resolution;
  CrossSection section;
  section.resolution = n;
  section.mode = spec.mode;
  for (std::size_t i = 0; i < 3; ++i) section.corner_labels[i] = corner_label(m, spec.corners[i]);
  section.cells.resize(n * n);

  auto work_row = [&](std::size_t r) {
    const std::size_t width = 2 * (n - r) - 1;
    const std::size_t base = row_offset(n, r);
    for (std::size_t t = 0; t < width; ++t) {
      CellSample& cell = section.cells[base + t];
      cell.position = cell_position(n, r, t);
      const auto& w = cell.position.weights;
      // Positive rescaling of D leaves both chamber signatures unchanged.
      const DivisorClass d = Rational(static_cast<long>(w[0])) * spec.corners[0] +
                             Rational(static_cast<long>(w[1])) * spec.corners[1] +
                             Rational(static_cast<long>(w[2])) * spec.corners[2];
      if (auto chambers = classify_divisor(m, d)) {
        cell.big = true;
        cell.weyl = chambers->weyl;
        cell.zariski = chambers->zariski;
      }
    }
  };

  std::size_t threads = spec.threads ? spec.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, n);
  if (threads == 1) {
    for (std::size_t r = 0; r < n; ++r) work_row(r);
    return section;
  }
  std::vector<std::exception_ptr> failures(threads);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t r = w; r < n; r += threads) work_row(r);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return section;
}

CrossSectionSummary summarize(const CrossSection& section) {
  CrossSectionSummary s;
  s.cells = section.cells.size();
  for (const auto& c : section.cells) {
    if (!c.big) {
      ++s.not_big;
      continue;
    }
    if (c.weyl.boundary) ++s.weyl_boundary;
    else s.weyl_supports.insert(c.weyl.support);
    if (c.zariski.boundary) ++s.zariski_boundary;
    else s.zariski_supports.insert(c.zariski.support);
    if (!c.weyl.boundary && !c.zariski.boundary && c.weyl.support != c.zariski.support) {
      ++s.differing;
    }
  }
  return s;
}

std::string render_svg(const SurfaceModel& m, const CrossSection& section) {
  std::vector<ChamberKind> kinds;
  if (section.mode != PlotMode::Zariski) kinds.push_back(ChamberKind::Weyl);
  if (section.mode != PlotMode::Weyl) kinds.push_back(ChamberKind::Zariski);

  const CrossSectionSummary summary = summarize(section);
  std::vector<CurveSet> supports;
  for (const auto kind : kinds) {
    const auto& family = kind == ChamberKind::Weyl ? summary.weyl_supports : summary.zariski_supports;
    for (const auto& s : family) {
      if (std::find(supports.begin(), supports.end(), s) == supports.end()) supports.push_back(s);
    }
  }
  std::sort(supports.begin(), supports.end(), size_lex_less);
  std::map<CurveSet, std::size_t> ids;
  for (std::size_t i = 0; i < supports.size(); ++i) ids.emplace(supports[i], i);
  const auto colors = assign_colors(m, supports);

  const double width = 2 * kMargin + kinds.size() * kSide + (kinds.size() - 1) * kPanelGap;
  const double legend_top = kMargin + kTitleBand + kHeight + 36.0;
  const double height = legend_top + (supports.size() + 2) * kLegendRow + kMargin;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(width) +
         "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
         "\" fill=\"#ffffff\"/>\n";

  for (std::size_t p = 0; p < kinds.size(); ++p) {
    const Panel panel{kMargin + p * (kSide + kPanelGap), kMargin + kTitleBand};
    render_panel(out, m, section, kinds[p], panel, supports, ids, colors);
  }

  out += "<g id=\"legend\">\n";
  double y = legend_top;
  auto entry = [&](const char* fill, const std::string& label) {
    out += "<rect x=\"" + fmt(kMargin) + "\" y=\"" + fmt(y - 11.0) +
           "\" width=\"12\" height=\"12\" fill=\"" + fill + "\" stroke=\"#000000\" stroke-width=\"0.5\"/>\n";
    text(out, {kMargin + 18.0, y}, label, "start", 12);
    y += kLegendRow;
  };
  for (const auto& s : supports) {
    entry(kPalette[colors.at(s)], s.empty() ? std::string("nef (empty support)")
                                            : "{" + joined_names(m, s) + "}");
  }
  entry(kBoundaryColor, "wall (boundary)");
  entry("#ffffff", "not big");
  out += "</g>\n</svg>\n";
  return out;
}

std::string render_cross_section(const SurfaceModel& m, const CrossSectionSpec& spec) {
  return render_svg(m, classify_cross_section(m, spec));
}

}  // namespace k3chambers
