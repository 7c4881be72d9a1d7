#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "winding/polyline.hpp"

namespace winding {

struct PointClass {
  bool on_boundary = false;
  std::int64_t winding = 0;  // meaningful only when !on_boundary
};

PointClass classify_point(const ClosedPolyline& l, Point p);

// Odd winding number. Throws BoundaryPoint for points on the line.
bool interior_mod2(const PointClass& pc);

// Cell labels of a sampled complement coloring. labels[iy * nx + ix] is the
// winding number at the centre of cell (ix, iy), or nullopt when the centre
// lies on the line. Row iy = 0 is the lowest one.
struct RegionGrid {
  BoundingBox bbox;
  int nx = 0;
  int ny = 0;
  std::vector<std::optional<std::int64_t>> labels;

  const std::optional<std::int64_t>& at(int ix, int iy) const {
    return labels[static_cast<std::size_t>(iy) * static_cast<std::size_t>(nx) + static_cast<std::size_t>(ix)];
  }
  Point cell_center(int ix, int iy) const;
};

// Labels every cell centre of an nx x ny grid spanning the line's bounding
// box inflated by 10% on each side.
RegionGrid mobius_alexander_grid(const ClosedPolyline& l, int nx, int ny);

// Parity of each label: true (black) for odd winding. Boundary cells stay empty.
struct ParityGrid {
  int nx = 0;
  int ny = 0;
  std::vector<std::optional<bool>> black;
};

ParityGrid checkerboard_mask(const RegionGrid& grid);

enum class RenderMode { integer, parity };

std::string render_svg(const ClosedPolyline& l, const RegionGrid& grid, RenderMode mode);

// {"bbox": [[x0, y0], [x1, y1]], "nx": .., "ny": .., "labels": [[..], ..]}
// with one inner array per row and null for boundary cells.
nlohmann::json grid_to_json(const RegionGrid& grid);

}  // namespace winding
