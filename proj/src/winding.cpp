#include "winding/winding.hpp"

#include <cmath>
#include <cstdlib>

#include "winding/random.hpp"

namespace winding {

namespace {

void require_off_points(std::span<const Point> pts, Point o) {
  for (const auto& p : pts) {
    if (distance(p, o) <= tol::point) throw Error(ErrorKind::point_on_line, "point coincides with a vertex");
  }
}

void require_off_segments(std::span<const Segment> segs, Point o) {
  if (point_on_segments(o, segs)) throw Error(ErrorKind::point_on_line, "point lies on the polygonal line");
}

double angle_sum(std::span<const Point> pts, Point o, bool closed) {
  const std::size_t m = pts.size();
  const std::size_t count = closed ? m : m - 1;
  double sum = 0.0;
  for (std::size_t j = 0; j < count; ++j) sum += oriented_angle(o, pts[j], pts[(j + 1) % m]).radians();
  return sum;
}

WindingResult certify(double sum) {
  const double turns = sum / kTwoPi;
  const auto w = static_cast<std::int64_t>(std::llround(turns));
  const double residual = std::abs(sum - kTwoPi * static_cast<double>(w));
  if (!(residual < tol::integrality)) {
    throw Error(ErrorKind::integrality_violation, "angle sum is not a multiple of 2*pi (residual " +
                                                      std::to_string(residual) + ")");
  }
  return {w, residual};
}

Point rotate_about(Point p, Point center, double angle) {
  const Vec2 v = p - center;
  const double c = std::cos(angle), s = std::sin(angle);
  return center + Vec2{c * v.dx - s * v.dy, s * v.dx + c * v.dy};
}

// Closed path a, R(a), R^2(a), a, ... , a making n turns around o.
OpenPolyline loop_at(Point a, Point o, std::int64_t n) {
  std::vector<Point> pts{a};
  const double step = (n > 0 ? 1.0 : -1.0) * kTwoPi / 3.0;
  const Point b = rotate_about(a, o, step);
  const Point c = rotate_about(a, o, 2.0 * step);
  for (std::int64_t i = 0; i < std::llabs(n); ++i) {
    pts.push_back(b);
    pts.push_back(c);
    pts.push_back(a);
  }
  return OpenPolyline(std::move(pts));
}

}  // namespace

WindingResult winding_number(const ClosedPolyline& l, Point o) {
  require_off_points(l.points(), o);
  const auto segs = segments_of(l);
  require_off_segments(segs, o);
  return certify(angle_sum(l.points(), o, true));
}

TurnFraction w_prime(const OpenPolyline& l, Point o) {
  require_off_points(l.points(), o);
  const auto segs = segments_of(l);
  require_off_segments(segs, o);
  return {angle_sum(l.points(), o, false) / kTwoPi};
}

WindingResult winding_of_cycle(const OneCycle& c, Point o) {
  require_off_segments(c.segments(), o);
  double sum = 0.0;
  for (const auto& s : c.segments()) sum += oriented_angle(o, s.start, s.end).radians();
  return certify(sum);
}

WindingResult fan_decomposition(const ClosedPolyline& l, Point o, Point p) {
  require_off_points(l.points(), o);
  require_off_segments(segments_of(l), o);
  for (const auto& a : l.points()) {
    if (distance(o, Segment{p, a}) <= tol::point) {
      throw Error(ErrorKind::fan_blocked, "point lies on a fan segment from the apex");
    }
  }
  const auto pts = l.points();
  const std::size_t m = pts.size();
  WindingResult total;
  for (std::size_t i = 0; i < m; ++i) {
    const auto term = winding_number(ClosedPolyline({p, pts[i], pts[(i + 1) % m]}), o);
    total.w += term.w;
    total.residual = std::max(total.residual, term.residual);
  }
  return total;
}

ClosedPolyline gen_loop(std::int64_t n, Point o, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorKind::invalid_input, "loop radius must be positive");
  const Point a = o + Vec2{radius, 0.0};
  if (n == 0) return ClosedPolyline({a});
  auto loop = loop_at(a, o, n);
  std::vector<Point> pts(loop.points().begin(), loop.points().end() - 1);
  return ClosedPolyline(std::move(pts));
}

ClosedPolyline gen_symmetric(int k, Point o, std::uint64_t seed) {
  if (k < 2) throw Error(ErrorKind::invalid_input, "symmetric line needs k >= 2");
  Rng rng(seed);
  for (;;) {
    std::vector<Vec2> half;
    half.reserve(static_cast<std::size_t>(k));
    if (rng.uniform_int(0, 1) == 0) {
      for (int j = 0; j < k; ++j) {
        half.push_back({static_cast<double>(rng.uniform_int(-100, 100)),
                        static_cast<double>(rng.uniform_int(-100, 100))});
      }
    } else {
      // Angular walk, biased forward so that larger odd windings show up.
      double theta = rng.uniform(0.0, kTwoPi);
      for (int j = 0; j < k; ++j) {
        const double r = static_cast<double>(rng.uniform_int(10, 1000));
        half.push_back({std::round(r * std::cos(theta)), std::round(r * std::sin(theta))});
        theta += rng.uniform(-0.3 * kPi, 0.95 * kPi);
      }
    }
    std::vector<Point> pts;
    pts.reserve(2 * half.size());
    for (const auto& v : half) pts.push_back(o + v);
    for (const auto& v : half) pts.push_back(o + Vec2{-v.dx, -v.dy});
    ClosedPolyline l(std::move(pts));
    const auto segs = segments_of(l);
    bool through = point_on_segments(o, segs);
    for (const auto& p : l.points()) through = through || distance(p, o) <= tol::point;
    if (!through) return l;
  }
}

ClosedPolyline gen_symmetric_spiral(int k, int turns, Point o, double radius) {
  if (turns % 2 == 0 || 2 * k <= 2 * std::abs(turns)) {
    throw Error(ErrorKind::invalid_input, "spiral needs an odd turn count and k > |turns|");
  }
  const double step = static_cast<double>(turns) * kPi / static_cast<double>(k);
  std::vector<Vec2> half;
  for (int j = 0; j < k; ++j) {
    const double r = radius * (1.0 + static_cast<double>(j) / static_cast<double>(k));
    half.push_back({r * std::cos(j * step), r * std::sin(j * step)});
  }
  std::vector<Point> pts;
  for (const auto& v : half) pts.push_back(o + v);
  for (const auto& v : half) pts.push_back(o + Vec2{-v.dx, -v.dy});
  return ClosedPolyline(std::move(pts));
}

ThreePaths gen_three_paths(std::int64_t n1, std::int64_t n2, Point a, Point b, Point o) {
  if (distance(a, b) <= tol::point || distance(a, o) <= tol::point || distance(b, o) <= tol::point) {
    throw Error(ErrorKind::degenerate_input, "a, b and o must be pairwise distinct");
  }
  std::vector<Point> base_pts{a};
  if (distance(o, Segment{a, b}) <= tol::point) {
    const Vec2 ab = b - a;
    const Point mid = a + 0.5 * ab;
    base_pts.push_back(mid + Vec2{-0.5 * ab.dy, 0.5 * ab.dx});
  }
  base_pts.push_back(b);
  OpenPolyline base(std::move(base_pts));
  return {concat_open(loop_at(a, o, n1), base), base, concat_open(loop_at(a, o, -n2), base)};
}

bool segment_hits_ray(const Segment& s, Point origin, Point through) {
  if (distance(origin, s) <= tol::point) return true;
  const Vec2 d = through - origin;
  const Vec2 e = s.end - s.start;
  const Vec2 os = origin - s.start;
  const double denom = cross(e, d);
  const double scale = norm(d) * norm(e);
  if (std::abs(denom) <= 1e-12 * scale) {
    // Parallel: only a collinear segment can meet the ray.
    if (std::abs(cross(os, d)) > 1e-12 * norm(os) * norm(d) + tol::point * norm(d)) return false;
    return dot(s.start - origin, d) >= 0.0 || dot(s.end - origin, d) >= 0.0;
  }
  const double t = cross(os, d) / denom;
  const double u = cross(os, e) / denom;
  const double eps = 1e-12;
  return t >= -eps && t <= 1.0 + eps && u >= -eps;
}

OpenPolyline gen_sector_path(int j, const std::array<Point, 3>& triangle, Point o, std::uint64_t seed) {
  if (j < 0 || j > 2) throw Error(ErrorKind::invalid_input, "sector index must be 0, 1 or 2");
  const Point blocked = triangle[static_cast<std::size_t>(j)];
  const Point from = triangle[static_cast<std::size_t>((j + 1) % 3)];
  const Point to = triangle[static_cast<std::size_t>((j + 2) % 3)];
  const double r = distance(o, from);
  Rng rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Point> pts{from};
    const auto interior = rng.uniform_int(0, 6);
    for (std::int64_t i = 0; i < interior; ++i) {
      pts.push_back(o + Vec2{rng.uniform(-2.0 * r, 2.0 * r), rng.uniform(-2.0 * r, 2.0 * r)});
    }
    pts.push_back(to);
    OpenPolyline l(std::move(pts));
    bool ok = true;
    for (const auto& s : segments_of(l)) {
      if (segment_hits_ray(s, o, blocked)) {
        ok = false;
        break;
      }
    }
    if (ok) return l;
  }
  return OpenPolyline({from, to});
}

}  // namespace winding
