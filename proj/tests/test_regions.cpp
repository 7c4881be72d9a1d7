#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "winding/crossings.hpp"
#include "winding/regions.hpp"
#include "winding/testkit.hpp"

using namespace winding;

namespace {

bool throws_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

const ClosedPolyline square(std::vector<Point>{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});

std::set<std::int64_t> label_set(const RegionGrid& g) {
  std::set<std::int64_t> s;
  for (const auto& v : g.labels)
    if (v) s.insert(*v);
  return s;
}

}  // namespace

TEST_CASE("classify point examples") {
  CHECK(classify_point(square, {1, 0}).on_boundary);
  const auto center = classify_point(square, {0, 0});
  CHECK_FALSE(center.on_boundary);
  CHECK(center.winding == 1);
  CHECK(interior_mod2(center));
  const auto near = classify_point(gen_loop(2, {0, 0}, 1), {0.01, 0.02});
  CHECK(near.winding == 2);
  CHECK_FALSE(interior_mod2(near));
  CHECK(classify_point(square, {-1, -1}).on_boundary);
}

TEST_CASE("interior mod 2 examples") {
  CHECK(interior_mod2(PointClass{false, 1}));
  CHECK_FALSE(interior_mod2(PointClass{false, 0}));
  CHECK(interior_mod2(PointClass{false, -3}));
  CHECK(throws_kind(ErrorKind::boundary_point, [] { interior_mod2(PointClass{true, 0}); }));
}

TEST_CASE("square grid") {
  const auto g = mobius_alexander_grid(square, 10, 10);
  CHECK(g.nx == 10);
  CHECK(g.labels.size() == 100);
  CHECK(g.bbox.min.x() == doctest::Approx(-1.2));
  CHECK(g.bbox.max.y() == doctest::Approx(1.2));
  for (int iy = 0; iy < 10; ++iy) {
    for (int ix = 0; ix < 10; ++ix) {
      const Point c = g.cell_center(ix, iy);
      const auto& label = g.at(ix, iy);
      REQUIRE(label);
      const bool inside = std::abs(c.x()) < 1 && std::abs(c.y()) < 1;
      CHECK(*label == (inside ? 1 : 0));
    }
  }
  const auto mask = checkerboard_mask(g);
  CHECK(mask.black[0] == false);
  CHECK(mask.black[static_cast<std::size_t>(5 * 10 + 5)] == true);
}

TEST_CASE("double loop grid skips the 1 band") {
  const auto g = mobius_alexander_grid(gen_loop(2, {0, 0}, 1), 64, 64);
  const auto labels = label_set(g);
  CHECK(labels.count(0));
  CHECK(labels.count(2));
  CHECK_FALSE(labels.count(1));
  const auto mask = checkerboard_mask(g);
  for (std::size_t i = 0; i < g.labels.size(); ++i)
    if (g.labels[i]) CHECK(mask.black[i] == false);
}

TEST_CASE("grid size must be at least 2x2") {
  CHECK(throws_kind(ErrorKind::invalid_input, [] { mobius_alexander_grid(square, 1, 1); }));
  CHECK(throws_kind(ErrorKind::invalid_input, [] { mobius_alexander_grid(square, 5, 1); }));
  CHECK_NOTHROW(mobius_alexander_grid(square, 2, 2));
}

TEST_CASE("degenerate lines still get a grid") {
  const ClosedPolyline dot(std::vector<Point>{{3, 4}});
  const auto g = mobius_alexander_grid(dot, 4, 4);
  CHECK(label_set(g) == std::set<std::int64_t>{0});
  const ClosedPolyline flat(std::vector<Point>{{0, 0}, {5, 0}});
  const auto h = mobius_alexander_grid(flat, 5, 5);
  CHECK(label_set(h) == std::set<std::int64_t>{0});
}

TEST_CASE("boundary cells are marked") {
  // the middle grid column lands on x = 0, where the line has an edge
  const ClosedPolyline l(std::vector<Point>{{-1, -1}, {1, -1}, {1, 1}, {0, 1}, {0, 0}, {-1, 0}});
  const auto g = mobius_alexander_grid(l, 3, 3);
  bool any_boundary = false;
  for (const auto& v : g.labels) any_boundary = any_boundary || !v;
  CHECK(any_boundary);
  const auto js = grid_to_json(g);
  CHECK(js["labels"].size() == 3);
  bool any_null = false;
  for (const auto& row : js["labels"])
    for (const auto& v : row) any_null = any_null || v.is_null();
  CHECK(any_null);
}

TEST_CASE("outer frame is zero on random lines") {
  Rng rng(31);
  testkit::GenConfig cfg;
  cfg.coord_range = 1000;
  for (int i = 0; i < 20; ++i) {
    const auto g = mobius_alexander_grid(testkit::random_closed(rng, cfg), 32, 32);
    for (int k = 0; k < 32; ++k) {
      CHECK(g.at(k, 0) == std::optional<std::int64_t>(0));
      CHECK(g.at(k, 31) == std::optional<std::int64_t>(0));
      CHECK(g.at(0, k) == std::optional<std::int64_t>(0));
      CHECK(g.at(31, k) == std::optional<std::int64_t>(0));
    }
  }
}

TEST_CASE("adjacent labels differ by one across a single crossing") {
  Rng rng(44);
  testkit::GenConfig cfg;
  cfg.coord_range = 1000;
  int checked = 0;
  for (int i = 0; i < 10; ++i) {
    const auto l = testkit::random_closed(rng, cfg);
    const auto g = mobius_alexander_grid(l, 24, 24);
    for (int iy = 0; iy < 24; ++iy) {
      for (int ix = 0; ix + 1 < 24; ++ix) {
        const auto& a = g.at(ix, iy);
        const auto& b = g.at(ix + 1, iy);
        if (!a || !b) continue;
        try {
          const auto r = crossings(l, OpenPolyline({g.cell_center(ix, iy), g.cell_center(ix + 1, iy)}));
          if (r.count == 1) {
            CHECK(std::abs(*a - *b) == 1);
            ++checked;
          } else if (r.count == 0) {
            CHECK(*a == *b);
          }
        } catch (const Error&) {
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("svg rendering") {
  const auto g = mobius_alexander_grid(square, 8, 8);
  const auto parity = render_svg(square, g, RenderMode::parity);
  CHECK(parity.rfind("<?xml", 0) == 0);
  CHECK(parity.find("<svg") != std::string::npos);
  CHECK(parity.find("</svg>") != std::string::npos);
  CHECK(parity.find("#000000") != std::string::npos);
  CHECK(parity.find("#ffffff") != std::string::npos);
  CHECK(parity.find("marker") != std::string::npos);
  CHECK(render_svg(square, g, RenderMode::parity) == parity);
  const auto integer = render_svg(square, g, RenderMode::integer);
  CHECK(integer != parity);

  const ClosedPolyline far(std::vector<Point>{{0, 0}, {1, 0}, {0, 1}});
  const auto tiny = mobius_alexander_grid(far, 2, 2);
  const auto svg = render_svg(far, tiny, RenderMode::integer);
  CHECK(svg.find("</svg>") != std::string::npos);
}
