#include "winding/regions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "winding/winding.hpp"

namespace winding {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  // "-0" and "0" must render identically.
  if (std::string(buf) == "-0") return "0";
  return buf;
}

std::string rgb(int r, int g, int b) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

// Diverging ramp: white at 0, red for positive, blue for negative labels.
std::string ramp(std::int64_t label, std::int64_t max_abs) {
  if (label == 0 || max_abs == 0) return "#ffffff";
  const double t = std::min(1.0, static_cast<double>(std::llabs(label)) / static_cast<double>(max_abs));
  const auto mix = [t](int end) { return static_cast<int>(std::lround(255.0 + (end - 255.0) * t)); };
  return label > 0 ? rgb(mix(178), mix(24), mix(43)) : rgb(mix(33), mix(102), mix(172));
}

}  // namespace

PointClass classify_point(const ClosedPolyline& l, Point p) {
  const auto segs = segments_of(l);
  bool on = point_on_segments(p, segs);
  for (const auto& v : l.points()) on = on || distance(v, p) <= tol::point;
  if (on) return {true, 0};
  return {false, winding_number(l, p).w};
}

bool interior_mod2(const PointClass& pc) {
  if (pc.on_boundary) throw Error(ErrorKind::boundary_point, "point lies on the line");
  return pc.winding % 2 != 0;
}

Point RegionGrid::cell_center(int ix, int iy) const {
  const double dx = (bbox.max.x() - bbox.min.x()) / nx;
  const double dy = (bbox.max.y() - bbox.min.y()) / ny;
  return {bbox.min.x() + (ix + 0.5) * dx, bbox.min.y() + (iy + 0.5) * dy};
}

RegionGrid mobius_alexander_grid(const ClosedPolyline& l, int nx, int ny) {
  if (nx < 2 || ny < 2) throw Error(ErrorKind::invalid_input, "grid needs at least 2x2 cells");
  const auto box = bounding_box(convex_hull(l.points()).points());
  double w = box.max.x() - box.min.x();
  double h = box.max.y() - box.min.y();
  const double fallback = std::max({w, h, 1.0});
  if (w == 0.0) w = fallback;
  if (h == 0.0) h = fallback;

  RegionGrid grid;
  grid.bbox = {{box.min.x() - 0.1 * w, box.min.y() - 0.1 * h}, {box.max.x() + 0.1 * w, box.max.y() + 0.1 * h}};
  grid.nx = nx;
  grid.ny = ny;
  grid.labels.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const auto pc = classify_point(l, grid.cell_center(ix, iy));
      grid.labels.push_back(pc.on_boundary ? std::nullopt : std::optional<std::int64_t>(pc.winding));
    }
  }
  return grid;
}

ParityGrid checkerboard_mask(const RegionGrid& grid) {
  ParityGrid mask{grid.nx, grid.ny, {}};
  mask.black.reserve(grid.labels.size());
  for (const auto& label : grid.labels) {
    mask.black.push_back(label ? std::optional<bool>(*label % 2 != 0) : std::nullopt);
  }
  return mask;
}

std::string render_svg(const ClosedPolyline& l, const RegionGrid& grid, RenderMode mode) {
  const double world_w = grid.bbox.max.x() - grid.bbox.min.x();
  const double world_h = grid.bbox.max.y() - grid.bbox.min.y();
  const double scale = 640.0 / std::max(world_w, world_h);
  const double width = world_w * scale;
  const double height = world_h * scale;
  const auto px = [&](Point p) {
    return num((p.x() - grid.bbox.min.x()) * scale) + " " + num((grid.bbox.max.y() - p.y()) * scale);
  };

  std::int64_t max_abs = 0;
  for (const auto& label : grid.labels) {
    if (label) max_abs = std::max(max_abs, static_cast<std::int64_t>(std::llabs(*label)));
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out +=
      "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" markerWidth=\"6\" "
      "markerHeight=\"6\" orient=\"auto\"><path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#222222\"/></marker></defs>\n";

  const double cw = world_w / grid.nx * scale;
  const double ch = world_h / grid.ny * scale;
  out += "<g stroke=\"none\">\n";
  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      const auto& label = grid.at(ix, iy);
      std::string fill = "#999999";
      if (label) {
        fill = mode == RenderMode::parity ? (*label % 2 != 0 ? "#000000" : "#ffffff") : ramp(*label, max_abs);
      }
      const double x = ix * cw;
      const double y = height - (iy + 1) * ch;
      out += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(cw) + "\" height=\"" + num(ch) +
             "\" fill=\"" + fill + "\"";
      if (mode == RenderMode::integer && label) out += "><title>" + std::to_string(*label) + "</title></rect>\n";
      else out += "/>\n";
    }
  }
  out += "</g>\n";

  // Each segment carries an arrow at its midpoint showing the traversal direction.
  const char* stroke = mode == RenderMode::parity ? "#d62728" : "#222222";
  out += "<g fill=\"none\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"1.5\">\n";
  for (const auto& s : segments_of(l)) {
    const Point mid{0.5 * (s.start.x() + s.end.x()), 0.5 * (s.start.y() + s.end.y())};
    out += "<path d=\"M " + px(s.start) + " L " + px(mid) + " L " + px(s.end) + "\" marker-mid=\"url(#arrow)\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

nlohmann::json grid_to_json(const RegionGrid& grid) {
  nlohmann::json rows = nlohmann::json::array();
  for (int iy = 0; iy < grid.ny; ++iy) {
    nlohmann::json row = nlohmann::json::array();
    for (int ix = 0; ix < grid.nx; ++ix) {
      const auto& label = grid.at(ix, iy);
      if (label) row.push_back(*label);
      else row.push_back(nullptr);
    }
    rows.push_back(std::move(row));
  }
  return {{"bbox", {{grid.bbox.min.x(), grid.bbox.min.y()}, {grid.bbox.max.x(), grid.bbox.max.y()}}},
          {"nx", grid.nx},
          {"ny", grid.ny},
          {"labels", std::move(rows)}};
}

}  // namespace winding
