#include "winding/crossings.hpp"

#include <cmath>
#include <string>

namespace winding {

namespace {

constexpr double kGoldenAngle = 2.39996322972865332;  // pi * (3 - sqrt(5))

void require_endpoints_off(const OpenPolyline& line, const std::vector<Segment>& other_segments,
                           std::span<const Point> other_points) {
  for (const Point e : {line.start(), line.end()}) {
    bool on = point_on_segments(e, other_segments);
    // A one-point line has no segments but is still its own point set.
    if (other_segments.empty()) on = distance(e, other_points.front()) <= tol::point;
    if (on) throw Error(ErrorKind::endpoint_on_line, "an endpoint lies on the other polygonal line");
  }
}

}  // namespace

int crossing_sign(const Segment& ab, const Segment& cd) {
  if (!segment_intersection(ab, cd)) {
    throw Error(ErrorKind::non_generic_intersection, "segments do not cross");
  }
  const Point a = ab.start, b = ab.end, c = cd.start, d = cd.end;
  if (orientation(a, b, c) == Orientation::collinear || orientation(a, b, d) == Orientation::collinear ||
      orientation(a, c, d) == Orientation::collinear || orientation(b, c, d) == Orientation::collinear) {
    throw Error(ErrorKind::non_generic_intersection, "three of the four endpoints are collinear");
  }
  int sign = orientation(a, b, c) == Orientation::cw ? 1 : -1;
#ifdef WINDING_MUTANT_FLIP_CROSSING_SIGN
  sign = -sign;
#endif
  return sign;
}

CrossingReport crossings(std::span<const Segment> l, std::span<const Segment> p) {
  CrossingReport report;
  for (std::size_t i = 0; i < l.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      std::optional<Point> hit;
      int sign = 0;
      try {
        hit = segment_intersection(l[i], p[j]);
        if (hit) sign = crossing_sign(l[i], p[j]);
      } catch (const Error& e) {
        throw Error(ErrorKind::general_position_violation, "segment " + std::to_string(i) + " of the first line and segment " +
                                                               std::to_string(j) + " of the second: " + e.what());
      }
      if (!hit) continue;
      report.crossings.push_back({*hit, sign, i, j});
      report.count += 1;
      report.signed_sum += sign;
    }
  }
  return report;
}

IntPair stokes_parity_check(const ClosedPolyline& l, const OpenPolyline& p) {
  const auto diff = winding_number(l, p.end()).w - winding_number(l, p.start()).w;
  const auto report = crossings(l, p);
  return {((diff % 2) + 2) % 2, report.count % 2};
}

IntPair stokes_signed_check(const ClosedPolyline& l, const OpenPolyline& p) {
  const auto diff = winding_number(l, p.end()).w - winding_number(l, p.start()).w;
  return {diff, crossings(l, p).signed_sum};
}

WindingResult winding_via_ray(const ClosedPolyline& l, Point p, int max_attempts) {
  const auto segs = segments_of(l);
  for (const auto& v : l.points()) {
    if (distance(v, p) <= tol::point) throw Error(ErrorKind::point_on_line, "point coincides with a vertex");
  }
  if (point_on_segments(p, segs)) throw Error(ErrorKind::point_on_line, "point lies on the polygonal line");

  const auto box = bounding_box(l.points());
  const Point center = box.min + 0.5 * (box.max - box.min);
  const Point far = far_point(l);
  const double radius = distance(center, far);
  const double base_angle = std::atan2(far.y() - center.y(), far.x() - center.x());

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const double a = base_angle + attempt * kGoldenAngle;
    const Point start = attempt == 0 ? far : center + Vec2{radius * std::cos(a), radius * std::sin(a)};
    const Segment path[] = {{start, p}};
    try {
      return {crossings(segs, path).signed_sum, 0.0};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::general_position_violation) throw;
    }
  }
  throw Error(ErrorKind::general_position_violation,
              "no transversal ray found after " + std::to_string(max_attempts) + " attempts");
}

BoundaryPairing boundary_pairing(const OpenPolyline& l, const OpenPolyline& p) {
  const auto ls = segments_of(l);
  const auto ps = segments_of(p);
  require_endpoints_off(l, ps, p.points());
  require_endpoints_off(p, ls, l.points());

  const double value = w_prime(l, p.end()).value - w_prime(p, l.end()).value - w_prime(l, p.start()).value +
                       w_prime(p, l.start()).value;
  const auto rounded = static_cast<std::int64_t>(std::llround(value));
  const double residual = std::abs(value - static_cast<double>(rounded)) * kTwoPi;
  if (!(residual < tol::integrality)) {
    throw Error(ErrorKind::integrality_violation, "boundary pairing is not an integer");
  }
  return {value, rounded, residual};
}

bool bilinearity_check(const OpenPolyline& l1, const OpenPolyline& l2, const OpenPolyline& p) {
  const auto joined = concat_open(l1, l2);
  const double eps = 2.0 * tol::integrality;
  const double left = boundary_pairing(joined, p).value -
                      (boundary_pairing(l1, p).value + boundary_pairing(l2, p).value);
  const double right = boundary_pairing(p, joined).value -
                       (boundary_pairing(p, l1).value + boundary_pairing(p, l2).value);
  return std::abs(left) <= eps && std::abs(right) <= eps;
}

double four_angle_sum(Point a, Point b, Point c, Point d) {
  return oriented_angle(d, a, b).radians() + oriented_angle(b, d, c).radians() + oriented_angle(c, b, a).radians() +
         oriented_angle(a, c, d).radians();
}

}  // namespace winding
