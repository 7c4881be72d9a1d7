#include "winding/geom.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace winding {

namespace {

double max_abs(std::initializer_list<Point> pts) {
  double s = 0.0;
  for (const auto& p : pts) s = std::max({s, std::abs(p.x()), std::abs(p.y())});
  return s;
}

Orientation orientation_scaled(Point a, Point b, Point c, double scale) {
  const double cr = cross(b - a, c - a);
  if (std::abs(cr) <= tol::orient * scale * scale) return Orientation::collinear;
  return cr > 0.0 ? Orientation::ccw : Orientation::cw;
}

// c is known to be collinear with ab; is it inside the closed bounding box of ab?
bool within_box(Point c, const Segment& s) {
  const double e = tol::point;
  return c.x() >= std::min(s.start.x(), s.end.x()) - e && c.x() <= std::max(s.start.x(), s.end.x()) + e &&
         c.y() >= std::min(s.start.y(), s.end.y()) - e && c.y() <= std::max(s.start.y(), s.end.y()) + e;
}

std::string describe(const Segment& s1, const Segment& s2) {
  std::ostringstream os;
  os.precision(12);
  os << "(" << s1.start.x() << "," << s1.start.y() << ")-(" << s1.end.x() << "," << s1.end.y() << ") vs ("
     << s2.start.x() << "," << s2.start.y() << ")-(" << s2.end.x() << "," << s2.end.y() << ")";
  return os.str();
}

[[noreturn]] void non_generic(const Segment& s1, const Segment& s2, const char* why) {
  throw Error(ErrorKind::non_generic_intersection, std::string(why) + " " + describe(s1, s2));
}

}  // namespace

double norm(Vec2 v) { return std::hypot(v.dx, v.dy); }

Point::Point(double x, double y) : x_(x), y_(y) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw Error(ErrorKind::invalid_input, "point coordinates must be finite");
  }
}

double distance(Point a, Point b) { return norm(a - b); }

double distance(Point p, const Segment& s) {
  const Vec2 d = s.end - s.start;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(p, s.start);
  const double t = std::clamp(dot(p - s.start, d) / len2, 0.0, 1.0);
  return distance(p, s.start + t * d);
}

OrientedAngle::OrientedAngle(double radians) : value_(radians) {
  if (!(radians > -kPi && radians <= kPi)) {
    throw Error(ErrorKind::invalid_input, "oriented angle outside (-pi, pi]");
  }
}

Orientation flip(Orientation o) {
  switch (o) {
    case Orientation::ccw: return Orientation::cw;
    case Orientation::cw: return Orientation::ccw;
    case Orientation::collinear: return Orientation::collinear;
  }
  return o;
}

OrientedAngle oriented_angle(Point o, Point a, Point b) {
  if (distance(a, o) <= tol::point || distance(b, o) <= tol::point) {
    throw Error(ErrorKind::degenerate_point, "angle vertex coincides with an endpoint");
  }
  const Vec2 oa = a - o;
  const Vec2 ob = b - o;
  double t = std::atan2(cross(oa, ob), dot(oa, ob));
  // atan2 yields -pi for a negative zero cross product; the half-turn is +pi.
  if (t <= -kPi) t = kPi;
  return OrientedAngle(t);
}

Orientation orientation(Point a, Point b, Point c) {
  return orientation_scaled(a, b, c, max_abs({a, b, c}));
}

std::optional<Point> segment_intersection(const Segment& s1, const Segment& s2) {
  const Point a = s1.start, b = s1.end, c = s2.start, d = s2.end;

  if (s1.degenerate() || s2.degenerate()) {
    if (s1.degenerate() && s2.degenerate()) {
      if (distance(a, c) <= tol::point) non_generic(s1, s2, "coincident points");
      return std::nullopt;
    }
    const Point q = s1.degenerate() ? a : c;
    const Segment& other = s1.degenerate() ? s2 : s1;
    if (distance(q, other) <= tol::point) non_generic(s1, s2, "point lies on segment");
    return std::nullopt;
  }

  const double scale = max_abs({a, b, c, d});
  const Orientation o1 = orientation_scaled(a, b, c, scale);
  const Orientation o2 = orientation_scaled(a, b, d, scale);
  const Orientation o3 = orientation_scaled(c, d, a, scale);
  const Orientation o4 = orientation_scaled(c, d, b, scale);

  if (o1 == Orientation::collinear && o2 == Orientation::collinear) {
    // Same supporting line: any shared point is an overlap or a touch.
    if (within_box(c, s1) || within_box(d, s1) || within_box(a, s2) || within_box(b, s2)) {
      non_generic(s1, s2, "collinear overlap");
    }
    return std::nullopt;
  }
  if ((o1 == Orientation::collinear && within_box(c, s1)) || (o2 == Orientation::collinear && within_box(d, s1)) ||
      (o3 == Orientation::collinear && within_box(a, s2)) || (o4 == Orientation::collinear && within_box(b, s2))) {
    non_generic(s1, s2, "endpoint lies on segment");
  }
  if (o1 == Orientation::collinear || o2 == Orientation::collinear || o3 == Orientation::collinear ||
      o4 == Orientation::collinear) {
    return std::nullopt;
  }
  if (o1 == o2 || o3 == o4) return std::nullopt;

  const Vec2 r = b - a;
  const Vec2 s = d - c;
  const double t = cross(c - a, s) / cross(r, s);
  return a + t * r;
}

bool point_on_segments(Point p, std::span<const Segment> segments) {
  return std::any_of(segments.begin(), segments.end(),
                     [&](const Segment& s) { return distance(p, s) <= tol::point; });
}

bool in_general_position(std::span<const Point> points) {
  const std::size_t n = points.size();
  double scale = 0.0;
  for (const auto& p : points) scale = std::max({scale, std::abs(p.x()), std::abs(p.y())});

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (distance(points[i], points[j]) <= tol::point) return false;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orientation_scaled(points[i], points[j], points[k], scale) == Orientation::collinear) return false;
      }
    }
  }

  // All segments joining the points; no three may share an interior point.
  struct Hit {
    Point at;
    std::size_t s1, s2;
  };
  std::vector<std::pair<std::size_t, std::size_t>> segs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) segs.emplace_back(i, j);

  std::vector<Hit> hits;
  for (std::size_t u = 0; u < segs.size(); ++u) {
    const auto [a, b] = segs[u];
    for (std::size_t v = u + 1; v < segs.size(); ++v) {
      const auto [c, d] = segs[v];
      if (a == c || a == d || b == c || b == d) continue;
      const Point pa = points[a], pb = points[b], pc = points[c], pd = points[d];
      // No three points are collinear, so the orientation signs are all strict.
      const bool ab_splits = (cross(pb - pa, pc - pa) > 0) != (cross(pb - pa, pd - pa) > 0);
      const bool cd_splits = (cross(pd - pc, pa - pc) > 0) != (cross(pd - pc, pb - pc) > 0);
      if (!ab_splits || !cd_splits) continue;
      const Vec2 r = pb - pa;
      const Vec2 s = pd - pc;
      hits.push_back({pa + (cross(pc - pa, s) / cross(r, s)) * r, u, v});
    }
  }

  // Intersection coordinates carry rounding error proportional to the
  // coordinate magnitude, so the coincidence radius scales with it.
  const double eps = tol::point * std::max(1.0, scale);
  std::sort(hits.begin(), hits.end(), [](const Hit& h1, const Hit& h2) { return h1.at.x() < h2.at.x(); });
  for (std::size_t i = 0; i < hits.size(); ++i) {
    for (std::size_t j = i + 1; j < hits.size() && hits[j].at.x() - hits[i].at.x() <= eps; ++j) {
      if (std::abs(hits[j].at.y() - hits[i].at.y()) <= eps) return false;
    }
  }
  return true;
}

double verify_triangle_angle_sum(Point o, Point a, Point b, Point c) {
  for (const Point v : {a, b, c}) {
    if (distance(o, v) <= tol::point) throw Error(ErrorKind::degenerate_point, "angle vertex coincides with a corner");
  }
  const Segment edges[] = {{a, b}, {b, c}, {c, a}};
  if (point_on_segments(o, edges)) {
    throw Error(ErrorKind::point_on_line, "angle-sum vertex lies on the triangle boundary");
  }
  return oriented_angle(o, a, b).radians() + oriented_angle(o, b, c).radians() + oriented_angle(o, c, a).radians();
}

}  // namespace winding
