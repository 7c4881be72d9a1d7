#pragma once

#include <optional>
#include <span>
#include <vector>

#include "winding/errors.hpp"

namespace winding {

namespace tol {
// Relative collinearity threshold, multiplied by scale^2.
inline constexpr double orient = 1e-12;
// Absolute point coincidence / point-on-segment distance.
inline constexpr double point = 1e-9;
// Absolute angle tolerance in radians.
inline constexpr double angle = 1e-9;
// Maximum admissible |sum of angles - 2*pi*w| before a winding sum is rejected.
inline constexpr double integrality = 1e-6;
}  // namespace tol

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec2 {
  double dx = 0.0;
  double dy = 0.0;
};

inline double cross(Vec2 a, Vec2 b) { return a.dx * b.dy - a.dy * b.dx; }
inline double dot(Vec2 a, Vec2 b) { return a.dx * b.dx + a.dy * b.dy; }
double norm(Vec2 v);

// A plane point. Construction rejects NaN and infinities.
class Point {
 public:
  constexpr Point() = default;
  Point(double x, double y);

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

inline Vec2 operator-(Point a, Point b) { return {a.x() - b.x(), a.y() - b.y()}; }
inline Point operator+(Point p, Vec2 v) { return {p.x() + v.dx, p.y() + v.dy}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.dx, s * v.dy}; }

double distance(Point a, Point b);

struct Segment {
  Point start;
  Point end;

  bool degenerate() const { return start == end; }
  Segment reversed() const { return {end, start}; }

  friend bool operator==(const Segment&, const Segment&) = default;
};

// Distance from p to the closed segment s.
double distance(Point p, const Segment& s);

// An angle in (-pi, pi].
class OrientedAngle {
 public:
  explicit OrientedAngle(double radians);

  double radians() const noexcept { return value_; }

 private:
  double value_;
};

enum class Orientation { ccw, cw, collinear };

Orientation flip(Orientation o);

// Angle t in (-pi, pi] such that ray OB is ray OA rotated counterclockwise by t.
// Throws DegeneratePoint when A or B coincides with O.
OrientedAngle oriented_angle(Point o, Point a, Point b);

// Sign of (B-A)x(C-A), collinear when |cross| <= tol::orient * scale^2 with
// scale the largest coordinate magnitude among the three points.
Orientation orientation(Point a, Point b, Point c);

// Proper transversal crossing point of two segments, or nullopt when they are
// disjoint. Touching, overlapping and endpoint-on-segment configurations throw
// NonGenericIntersection.
std::optional<Point> segment_intersection(const Segment& s1, const Segment& s2);

bool point_on_segments(Point p, std::span<const Segment> segments);

// No three points collinear, no repeated point, and no three of the segments
// joining the points meet at a common interior point.
bool in_general_position(std::span<const Point> points);

// Sum of the oriented angles AOB, BOC and COA (the angles are taken at O).
double verify_triangle_angle_sum(Point o, Point a, Point b, Point c);

}  // namespace winding
