#pragma once

#include <concepts>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "winding/geom.hpp"

namespace winding {

// Ordered, non-empty point sequence. Repeated points are allowed and are
// significant: two lines with the same segment union are still different
// values when their point sequences differ.
class OpenPolyline {
 public:
  explicit OpenPolyline(std::vector<Point> points);

  std::span<const Point> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  Point start() const { return points_.front(); }
  Point end() const { return points_.back(); }

  friend bool operator==(const OpenPolyline&, const OpenPolyline&) = default;

 private:
  std::vector<Point> points_;
};

// Same data as OpenPolyline; the segment from the last point back to the
// first one is implied.
class ClosedPolyline {
 public:
  explicit ClosedPolyline(std::vector<Point> points);

  std::span<const Point> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  friend bool operator==(const ClosedPolyline&, const ClosedPolyline&) = default;

 private:
  std::vector<Point> points_;
};

template <typename T>
concept Polyline = std::same_as<T, OpenPolyline> || std::same_as<T, ClosedPolyline>;

// Integer 1-cycle: a multiset of directed, non-degenerate segments.
class OneCycle {
 public:
  explicit OneCycle(std::vector<Segment> segments);

  std::span<const Segment> segments() const noexcept { return segments_; }

 private:
  std::vector<Segment> segments_;
};

OpenPolyline reverse(const OpenPolyline& l);
// The same closed line traversed backwards, A_m ... A_1.
ClosedPolyline reverse(const ClosedPolyline& l);

// A_1...A_m C . C B_1...B_k = A_1...A_m C B_1...B_k. The shared point must be
// bit-identical; throws EndpointMismatch otherwise.
OpenPolyline concat_open(const OpenPolyline& l1, const OpenPolyline& l2);
// A_1...A_m C . B_1...B_k C = A_1...A_m C B_1...B_k C.
ClosedPolyline concat_closed(const ClosedPolyline& l1, const ClosedPolyline& l2);

// The point sequence of an open line read as a closed line.
ClosedPolyline as_closed(const OpenPolyline& l);

// Consecutive segments (plus the closing one for closed lines), with
// zero-length segments omitted.
std::vector<Segment> segments_of(const OpenPolyline& l);
std::vector<Segment> segments_of(const ClosedPolyline& l);

struct BoundingBox {
  Point min;
  Point max;
};

BoundingBox bounding_box(std::span<const Point> points);

// Counterclockwise hull vertices without collinear output vertices.
ClosedPolyline convex_hull(std::span<const Point> points);

// A point strictly outside the convex hull of the given points.
Point far_point(std::span<const Point> points);

template <Polyline L>
Point far_point(const L& l) {
  return far_point(l.points());
}

// Polyline file format: {"closed": bool, "points": [[x, y], ...]}.
using AnyPolyline = std::variant<OpenPolyline, ClosedPolyline>;

nlohmann::json to_json(const OpenPolyline& l);
nlohmann::json to_json(const ClosedPolyline& l);
AnyPolyline polyline_from_json(const nlohmann::json& doc);
AnyPolyline parse_polyline(const std::string& text);
AnyPolyline read_polyline_file(const std::string& path);

}  // namespace winding
