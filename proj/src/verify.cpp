#include "winding/verify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "winding/crossings.hpp"
#include "winding/regions.hpp"
#include "winding/winding.hpp"

namespace winding::verify {

namespace {

using testkit::GenConfig;
using testkit::Instance;

constexpr int kGridCells = 24;

GenConfig lattice(int max_vertices, std::int64_t range = 1000000) {
  GenConfig cfg;
  cfg.max_vertices = max_vertices;
  cfg.coord_range = range;
  return cfg;
}

std::vector<Point> pts_of(std::span<const Point> s) { return {s.begin(), s.end()}; }

ClosedPolyline closed_l(const Instance& i) { return ClosedPolyline(i.l); }
OpenPolyline open_l(const Instance& i) { return OpenPolyline(i.l); }
OpenPolyline open_p(const Instance& i) { return OpenPolyline(i.p); }

Point distinct_from(Rng& rng, const GenConfig& cfg, std::initializer_list<Point> avoid) {
  for (;;) {
    const Point q = testkit::random_lattice_point(rng, cfg);
    if (std::none_of(avoid.begin(), avoid.end(), [&](Point a) { return distance(a, q) <= tol::point; })) return q;
  }
}

bool near_multiple_of_2pi(double v, double eps) { return std::abs(std::remainder(v, kTwoPi)) <= eps; }

// Barycentric inside test, strict.
bool strictly_inside_triangle(Point o, Point a, Point b, Point c) {
  const double d = cross(b - a, c - a);
  if (d == 0.0) return false;
  const double l1 = cross(b - o, c - o) / d;
  const double l2 = cross(c - o, a - o) / d;
  const double l3 = cross(a - o, b - o) / d;
  return l1 > 0 && l2 > 0 && l3 > 0;
}

Instance closed_with_point(Rng& rng, const GenConfig& cfg) {
  auto l = testkit::random_closed(rng, cfg);
  const Point o = testkit::random_point_off(rng, cfg, l);
  return {pts_of(l.points()), true, {}, o, {}};
}

Instance gp_closed_with_point(Rng& rng, const GenConfig& cfg) {
  auto [l, p] = testkit::gen_general_position_pair(rng, cfg);
  return {pts_of(l.points()), true, {}, p.start(), {}};
}

Instance gp_pair(Rng& rng, const GenConfig& cfg) {
  auto [l, p] = testkit::gen_general_position_pair(rng, cfg);
  return {pts_of(l.points()), true, pts_of(p.points()), std::nullopt, {}};
}

Instance gp_open_pair(Rng& rng, const GenConfig& cfg) {
  auto [l, p] = testkit::gen_general_position_open_pair(rng, cfg);
  return {pts_of(l.points()), false, pts_of(p.points()), std::nullopt, {}};
}

// Crossings of l with a straight path between two points, or nullopt when
// the path is not transversal to l.
std::optional<CrossingReport> path_crossings(const std::vector<Segment>& segs, Point a, Point b) {
  const Segment path[] = {{a, b}};
  try {
    return crossings(segs, path);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::general_position_violation) return std::nullopt;
    throw;
  }
}

std::array<Point, 3> equilateral(Point o, double r, double phase) {
  std::array<Point, 3> t;
  for (int k = 0; k < 3; ++k) {
    const double a = phase + k * kTwoPi / 3.0;
    t[static_cast<std::size_t>(k)] = o + Vec2{r * std::cos(a), r * std::sin(a)};
  }
  return t;
}

// ---------------------------------------------------------------- angles

std::vector<Property> angle_properties() {
  std::vector<Property> out;
  const GenConfig cfg = lattice(12);

  out.push_back({"angles.antisymmetry", Suite::angles,
                 [cfg](Rng& rng) {
                   const Point o = testkit::random_lattice_point(rng, cfg);
                   const Point a = distinct_from(rng, cfg, {o});
                   const Point b = distinct_from(rng, cfg, {o});
                   return Instance{{a, b}, false, {}, o, {}};
                 },
                 [](const Instance& i) {
                   const double ab = oriented_angle(*i.o, i.l[0], i.l[1]).radians();
                   const double ba = oriented_angle(*i.o, i.l[1], i.l[0]).radians();
                   if (ab == kPi) return ba == kPi;
                   return std::abs(ab + ba) <= tol::angle;
                 }});

  out.push_back({"angles.mod2pi_additivity", Suite::angles,
                 [cfg](Rng& rng) {
                   const Point o = testkit::random_lattice_point(rng, cfg);
                   return Instance{{distinct_from(rng, cfg, {o}), distinct_from(rng, cfg, {o}),
                                    distinct_from(rng, cfg, {o})},
                                   false, {}, o, {}};
                 },
                 [](const Instance& i) {
                   const Point o = *i.o;
                   const double d = oriented_angle(o, i.l[0], i.l[1]).radians() +
                                    oriented_angle(o, i.l[1], i.l[2]).radians() -
                                    oriented_angle(o, i.l[0], i.l[2]).radians();
                   return near_multiple_of_2pi(d, tol::angle);
                 }});

  const GenConfig small = lattice(12, 50);
  out.push_back({"angles.triangle_sum", Suite::angles,
                 [small](Rng& rng) {
                   for (;;) {
                     const Point a = testkit::random_lattice_point(rng, small);
                     const Point b = testkit::random_lattice_point(rng, small);
                     const Point c = testkit::random_lattice_point(rng, small);
                     const Point o = testkit::random_lattice_point(rng, small);
                     const Segment edges[] = {{a, b}, {b, c}, {c, a}};
                     if (o == a || o == b || o == c || point_on_segments(o, edges)) continue;
                     return Instance{{a, b, c}, true, {}, o, {}};
                   }
                 },
                 [](const Instance& i) {
                   const double sum = verify_triangle_angle_sum(*i.o, i.l[0], i.l[1], i.l[2]);
                   if (strictly_inside_triangle(*i.o, i.l[0], i.l[1], i.l[2])) {
                     return std::abs(std::abs(sum) - kTwoPi) <= 4 * tol::angle;
                   }
                   return std::abs(sum) <= 4 * tol::angle;
                 }});

  out.push_back({"angles.orientation_antisymmetry", Suite::angles,
                 [cfg](Rng& rng) {
                   return Instance{{testkit::random_lattice_point(rng, cfg), testkit::random_lattice_point(rng, cfg),
                                    testkit::random_lattice_point(rng, cfg)},
                                   false, {}, std::nullopt, {}};
                 },
                 [](const Instance& i) {
                   const Point a = i.l[0], b = i.l[1], c = i.l[2];
                   const Orientation o = orientation(a, b, c);
                   if (o == Orientation::collinear) return true;
                   return orientation(b, a, c) == flip(o) && orientation(a, c, b) == flip(o) &&
                          orientation(c, b, a) == flip(o);
                 }});
  return out;
}

// ---------------------------------------------------------------- winding

std::vector<Property> winding_properties() {
  std::vector<Property> out;
  const GenConfig big = lattice(30);
  const GenConfig cfg = lattice(12);

  out.push_back({"winding.integrality", Suite::winding,
                 [big](Rng& rng) { return closed_with_point(rng, big); },
                 [](const Instance& i) { return winding_number(closed_l(i), *i.o).residual < tol::integrality; }});

  out.push_back({"winding.triple_oracle", Suite::winding,
                 [cfg](Rng& rng) { return gp_closed_with_point(rng, cfg); },
                 [](const Instance& i) {
                   const auto l = closed_l(i);
                   const auto w = winding_number(l, *i.o).w;
                   const double sampled = testkit::sampled_angle_oracle(l, *i.o, 8);
                   return winding_via_ray(l, *i.o).w == w && std::llround(sampled / kTwoPi) == w &&
                          std::abs(sampled - kTwoPi * static_cast<double>(w)) < tol::integrality;
                 }});

  out.push_back({"winding.prefix_mod2pi", Suite::winding,
                 [cfg](Rng& rng) {
                   auto inst = closed_with_point(rng, cfg);
                   inst.l_closed = false;
                   return inst;
                 },
                 [](const Instance& i) {
                   const auto l = open_l(i);
                   if (l.start() == l.end()) return true;
                   const double first_last = oriented_angle(*i.o, l.start(), l.end()).radians();
                   return near_multiple_of_2pi(first_last - kTwoPi * w_prime(l, *i.o).value, tol::angle);
                 }});

  out.push_back({"winding.reversal", Suite::winding,
                 [cfg](Rng& rng) { return closed_with_point(rng, cfg); },
                 [](const Instance& i) {
                   const auto l = closed_l(i);
                   const bool closed_ok = winding_number(reverse(l), *i.o).w == -winding_number(l, *i.o).w;
                   const auto open = open_l(i);
                   return closed_ok && std::abs(w_prime(reverse(open), *i.o).value + w_prime(open, *i.o).value) <=
                                           tol::angle;
                 }});

  out.push_back({"winding.wprime_identities", Suite::winding,
                 [cfg](Rng& rng) {
                   auto inst = closed_with_point(rng, cfg);
                   inst.params = {rng.uniform_int(0, static_cast<std::int64_t>(inst.l.size()) - 1)};
                   return inst;
                 },
                 [](const Instance& i) {
                   const auto& pts = i.l;
                   const auto j = static_cast<std::size_t>(std::min<std::int64_t>(
                       i.params.empty() ? 0 : i.params[0], static_cast<std::int64_t>(pts.size()) - 1));
                   const OpenPolyline whole(pts);
                   const OpenPolyline head({pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(j) + 1});
                   const OpenPolyline tail({pts.begin() + static_cast<std::ptrdiff_t>(j), pts.end()});
                   std::vector<Point> looped = pts;
                   looped.push_back(pts.front());
                   const double split = w_prime(whole, *i.o).value - w_prime(head, *i.o).value -
                                        w_prime(tail, *i.o).value;
                   const double closing =
                       w_prime(OpenPolyline(looped), *i.o).value -
                       static_cast<double>(winding_number(ClosedPolyline(pts), *i.o).w);
                   // concatenation additivity on the same split
                   const double concat = w_prime(concat_open(head, tail), *i.o).value - w_prime(head, *i.o).value -
                                         w_prime(tail, *i.o).value;
                   return std::abs(split) <= tol::angle && std::abs(closing) <= tol::angle &&
                          std::abs(concat) <= tol::angle;
                 }});

  out.push_back({"winding.cycle", Suite::winding,
                 [cfg](Rng& rng) { return closed_with_point(rng, cfg); },
                 [](const Instance& i) {
                   auto segs = segments_of(closed_l(i));
                   std::reverse(segs.begin(), segs.end());
                   const auto twice = [&] {
                     auto d = segs;
                     d.insert(d.end(), segs.begin(), segs.end());
                     return d;
                   }();
                   const auto w = winding_number(closed_l(i), *i.o).w;
                   return winding_of_cycle(OneCycle(segs), *i.o).w == w &&
                          winding_of_cycle(OneCycle(twice), *i.o).w == 2 * w;
                 }});

  out.push_back({"winding.borsuk_ulam", Suite::winding,
                 [](Rng& rng) {
                   const GenConfig c = lattice(12, 1000);
                   const Point o = testkit::random_lattice_point(rng, c);
                   const auto k = rng.uniform_int(2, 8);
                   const auto l = gen_symmetric(static_cast<int>(k), o, rng.next_u64());
                   return Instance{pts_of(l.points()), true, {}, o, {k}};
                 },
                 [](const Instance& i) {
                   const std::size_t k = i.l.size() / 2;
                   for (std::size_t j = 0; j < k; ++j) {
                     const Point a = i.l[j], b = i.l[j + k];
                     if (distance(Point{0.5 * (a.x() + b.x()), 0.5 * (a.y() + b.y())}, *i.o) > tol::point) return false;
                   }
                   return winding_number(closed_l(i), *i.o).w % 2 != 0;
                 }});

  out.push_back({"winding.three_paths", Suite::winding,
                 [](Rng& rng) {
                   const GenConfig c = lattice(12, 1000);
                   const Point o = testkit::random_lattice_point(rng, c);
                   const Point a = distinct_from(rng, c, {o});
                   const Point b = distinct_from(rng, c, {o, a});
                   return Instance{{a, b}, false, {}, o, {rng.uniform_int(-5, 5), rng.uniform_int(-5, 5)}};
                 },
                 [](const Instance& i) {
                   const auto n1 = i.params.at(0), n2 = i.params.at(1);
                   const auto paths = gen_three_paths(n1, n2, i.l.at(0), i.l.at(1), *i.o);
                   const auto w = [&](const OpenPolyline& x, const OpenPolyline& y) {
                     return winding_number(as_closed(concat_open(x, reverse(y))), *i.o).w;
                   };
                   const auto w12 = w(paths.l1, paths.l2), w23 = w(paths.l2, paths.l3), w13 = w(paths.l1, paths.l3);
                   return w12 == n1 && w23 == n2 && w13 == n1 + n2 && w12 + w23 == w13;
                 }});

  out.push_back({"winding.convex", Suite::winding,
                 [cfg](Rng& rng) {
                   for (;;) {
                     auto pts = testkit::random_closed(rng, cfg);
                     auto hull = convex_hull(pts.points());
                     if (hull.size() < 3) continue;
                     const auto box = bounding_box(hull.points());
                     const double w = box.max.x() - box.min.x(), h = box.max.y() - box.min.y();
                     const Point q{std::round(rng.uniform(box.min.x() - 0.2 * w, box.max.x() + 0.2 * w)),
                                   std::round(rng.uniform(box.min.y() - 0.2 * h, box.max.y() + 0.2 * h))};
                     const auto segs = segments_of(hull);
                     if (point_on_segments(q, segs)) continue;
                     return Instance{pts_of(hull.points()), true, {}, q, {}};
                   }
                 },
                 [](const Instance& i) {
                   bool inside = true;
                   const auto segs = segments_of(closed_l(i));
                   for (const auto& s : segs) inside = inside && cross(s.end - s.start, *i.o - s.start) > 0;
                   return winding_number(closed_l(i), *i.o).w == (inside ? 1 : 0);
                 }});

  out.push_back({"winding.star", Suite::winding,
                 [cfg](Rng& rng) {
                   auto l = testkit::gen_star_polygon(rng, cfg);
                   const Point q = testkit::random_point_off(rng, cfg, l);
                   return Instance{pts_of(l.points()), true, {}, q, {}};
                 },
                 [](const Instance& i) {
                   const auto w = winding_number(closed_l(i), *i.o).w;
                   return w == 0 || w == 1 || w == -1;
                 }});

  out.push_back({"winding.fan", Suite::winding,
                 [cfg](Rng& rng) {
                   auto inst = closed_with_point(rng, cfg);
                   for (;;) {
                     const Point p = testkit::random_lattice_point(rng, cfg);
                     bool blocked = false;
                     for (const auto& a : inst.l) blocked = blocked || distance(*inst.o, Segment{p, a}) <= tol::point;
                     if (blocked) continue;
                     inst.p = {p};
                     return inst;
                   }
                 },
                 [](const Instance& i) {
                   const auto l = closed_l(i);
                   return fan_decomposition(l, *i.o, i.p.at(0)).w == winding_number(l, *i.o).w;
                 }});

  out.push_back({"winding.sector", Suite::winding,
                 [](Rng& rng) {
                   const GenConfig c = lattice(12, 1000);
                   const Point o = testkit::random_lattice_point(rng, c);
                   const auto tri = equilateral(o, rng.uniform(1.0, 1000.0), rng.uniform(0.0, kTwoPi));
                   return Instance{{tri[0], tri[1], tri[2]},
                                   true,
                                   {},
                                   o,
                                   {static_cast<std::int64_t>(rng.next_u64() >> 1)}};
                 },
                 [](const Instance& i) {
                   const std::array<Point, 3> tri{i.l.at(0), i.l.at(1), i.l.at(2)};
                   const Point o = *i.o;
                   const auto seed = static_cast<std::uint64_t>(i.params.at(0));
                   std::vector<OpenPolyline> paths;
                   for (int j = 0; j < 3; ++j) paths.push_back(gen_sector_path(j, tri, o, seed + static_cast<std::uint64_t>(j)));
                   const auto whole = concat_open(concat_open(paths[0], paths[1]), paths[2]);
                   const auto w = winding_number(as_closed(whole), o).w;
                   if (w != 1 && w != -1) return false;
                   for (int j = 0; j < 3; ++j) {
                     const auto& lj = paths[static_cast<std::size_t>(j)];
                     if (std::abs(kTwoPi * w_prime(lj, o).value - kTwoPi / 3.0) > tol::angle) return false;
                     // Partial sums stay inside (-2pi/3, 4pi/3).
                     double partial = 0.0;
                     for (std::size_t k = 0; k + 1 < lj.size(); ++k) {
                       partial += oriented_angle(o, lj.points()[k], lj.points()[k + 1]).radians();
                       if (!(partial > -kTwoPi / 3.0 && partial < 2.0 * kTwoPi / 3.0)) return false;
                     }
                     // m_j = l_j a_j^-1 misses the ray O A_j entirely, so it winds zero
                     // times around O as it does around a far point on that ray.
                     const Point aj = tri[static_cast<std::size_t>(j)];
                     const auto mj = as_closed(concat_open(lj, OpenPolyline({lj.end(), lj.start()})));
                     for (const auto& s : segments_of(mj)) {
                       if (segment_hits_ray(s, o, aj)) return false;
                     }
                     const double reach = 2.0 * distance(o, far_point(mj)) / distance(o, aj);
                     if (winding_number(mj, o + reach * (aj - o)).w != 0 || winding_number(mj, o).w != 0) return false;
                   }
                   return true;
                 }});
  return out;
}

// ---------------------------------------------------------------- stokes

std::vector<Property> stokes_properties() {
  std::vector<Property> out;
  const GenConfig cfg = lattice(12);

  out.push_back({"stokes.parity_lemma", Suite::stokes,
                 [cfg](Rng& rng) {
                   auto [l, p] = testkit::gen_general_position_closed_pair(rng, cfg);
                   return Instance{pts_of(l.points()), true, pts_of(p.points()), std::nullopt, {}};
                 },
                 [](const Instance& i) { return crossings(closed_l(i), ClosedPolyline(i.p)).count % 2 == 0; }});

  out.push_back({"stokes.parity", Suite::stokes, [cfg](Rng& rng) { return gp_pair(rng, cfg); },
                 [](const Instance& i) {
                   const auto r = stokes_parity_check(closed_l(i), open_p(i));
                   return r.lhs == r.rhs;
                 }});

  out.push_back({"stokes.signed", Suite::stokes, [cfg](Rng& rng) { return gp_pair(rng, cfg); },
                 [](const Instance& i) {
                   const auto r = stokes_signed_check(closed_l(i), open_p(i));
                   return r.lhs == r.rhs;
                 }});

  out.push_back({"stokes.ray_oracle", Suite::stokes, [cfg](Rng& rng) { return closed_with_point(rng, cfg); },
                 [](const Instance& i) {
                   const auto l = closed_l(i);
                   return winding_via_ray(l, *i.o).w == winding_number(l, *i.o).w;
                 }});
  return out;
}

// ---------------------------------------------------------------- boundary

std::vector<Property> boundary_properties() {
  std::vector<Property> out;
  const GenConfig cfg = lattice(12);

  out.push_back({"boundary.equals_intersection", Suite::boundary, [cfg](Rng& rng) { return gp_open_pair(rng, cfg); },
                 [](const Instance& i) {
                   const auto l = open_l(i), p = open_p(i);
                   const auto report = crossings(l, p);
                   const auto d = boundary_pairing(l, p);
                   if (report.count == 0 && d.rounded != 0) return false;
                   return d.rounded == report.signed_sum && d.residual < tol::integrality;
                 }});

  out.push_back({"boundary.disjoint_zero", Suite::boundary,
                 [cfg](Rng& rng) {
                   auto l = testkit::random_open(rng, cfg);
                   auto p = testkit::random_open(rng, cfg);
                   // Shift p clear of l's bounding box.
                   const double shift = 3.0 * static_cast<double>(cfg.coord_range);
                   std::vector<Point> moved;
                   for (const auto& q : p.points()) moved.push_back(q + Vec2{shift, 0.0});
                   return Instance{pts_of(l.points()), false, moved, std::nullopt, {}};
                 },
                 [](const Instance& i) {
                   const auto l = open_l(i), p = open_p(i);
                   return crossings(l, p).count != 0 || boundary_pairing(l, p).rounded == 0;
                 }});

  out.push_back({"boundary.four_angle", Suite::boundary,
                 [cfg](Rng& rng) {
                   for (;;) {
                     std::vector<Point> pts;
                     for (int k = 0; k < 4; ++k) pts.push_back(testkit::random_lattice_point(rng, cfg));
                     if (!in_general_position(pts)) continue;
                     if (segment_intersection({pts[0], pts[1]}, {pts[2], pts[3]})) continue;
                     return Instance{{pts[0], pts[1]}, false, {pts[2], pts[3]}, std::nullopt, {}};
                   }
                 },
                 [](const Instance& i) {
                   if (segment_intersection({i.l[0], i.l[1]}, {i.p[0], i.p[1]})) return true;
                   return std::abs(four_angle_sum(i.l[0], i.l[1], i.p[0], i.p[1])) <= 4 * tol::angle;
                 }});

  out.push_back({"boundary.bilinearity", Suite::boundary,
                 [cfg](Rng& rng) {
                   auto inst = gp_open_pair(rng, cfg);
                   inst.params = {rng.uniform_int(0, static_cast<std::int64_t>(inst.l.size()) - 1)};
                   return inst;
                 },
                 [](const Instance& i) {
                   const auto j = static_cast<std::size_t>(std::min<std::int64_t>(
                       i.params.empty() ? 0 : i.params[0], static_cast<std::int64_t>(i.l.size()) - 1));
                   const OpenPolyline l1({i.l.begin(), i.l.begin() + static_cast<std::ptrdiff_t>(j) + 1});
                   const OpenPolyline l2({i.l.begin() + static_cast<std::ptrdiff_t>(j), i.l.end()});
                   const auto p = open_p(i);
                   if (!bilinearity_check(l1, l2, p)) return false;
                   // Segment-by-segment decomposition of the pairing.
                   double sum = 0.0;
                   for (const auto& ef : segments_of(open_l(i))) {
                     for (const auto& gh : segments_of(p)) {
                       sum += boundary_pairing(OpenPolyline({ef.start, ef.end}), OpenPolyline({gh.start, gh.end})).value;
                     }
                   }
                   return std::abs(sum - boundary_pairing(open_l(i), p).value) <= 2 * tol::integrality;
                 }});

  out.push_back({"boundary.sign_antisymmetry", Suite::boundary,
                 [cfg](Rng& rng) {
                   for (;;) {
                     std::vector<Point> pts;
                     for (int k = 0; k < 4; ++k) pts.push_back(testkit::random_lattice_point(rng, cfg));
                     if (!in_general_position(pts)) continue;
                     if (!segment_intersection({pts[0], pts[1]}, {pts[2], pts[3]})) continue;
                     return Instance{{pts[0], pts[1]}, false, {pts[2], pts[3]}, std::nullopt, {}};
                   }
                 },
                 [](const Instance& i) {
                   const Segment ab{i.l.at(0), i.l.at(1)}, cd{i.p.at(0), i.p.at(1)};
                   const int s = crossing_sign(ab, cd);
                   const auto d = boundary_pairing(OpenPolyline({ab.start, ab.end}), OpenPolyline({cd.start, cd.end}));
                   return crossing_sign(ab.reversed(), cd) == -s && crossing_sign(ab, cd.reversed()) == -s &&
                          crossing_sign(cd, ab) == -s && d.rounded == s;
                 }});
  return out;
}

// ---------------------------------------------------------------- regions

Instance random_grid_case(Rng& rng) {
  const GenConfig cfg = lattice(10);
  const auto l = testkit::random_closed(rng, cfg);
  return {pts_of(l.points()), true, {}, std::nullopt, {static_cast<std::int64_t>(rng.next_u64() >> 1)}};
}

std::vector<Property> region_properties() {
  std::vector<Property> out;

  out.push_back({"regions.frame", Suite::regions, random_grid_case, [](const Instance& i) {
                   const auto g = mobius_alexander_grid(closed_l(i), kGridCells, kGridCells);
                   for (int k = 0; k < kGridCells; ++k) {
                     for (const auto& label : {g.at(k, 0), g.at(k, kGridCells - 1), g.at(0, k), g.at(kGridCells - 1, k)}) {
                       if (!label || *label != 0) return false;
                     }
                   }
                   return true;
                 }});

  out.push_back({"regions.constancy", Suite::regions, random_grid_case, [](const Instance& i) {
                   const auto l = closed_l(i);
                   const auto segs = segments_of(l);
                   const auto g = mobius_alexander_grid(l, kGridCells, kGridCells);
                   Rng rng(static_cast<std::uint64_t>(i.params.at(0)));
                   for (int trial = 0; trial < 16; ++trial) {
                     const auto ix = static_cast<int>(rng.uniform_int(0, kGridCells - 1));
                     const auto iy = static_cast<int>(rng.uniform_int(0, kGridCells - 1));
                     const auto jx = static_cast<int>(std::clamp<std::int64_t>(ix + rng.uniform_int(-4, 4), 0, kGridCells - 1));
                     const auto jy = static_cast<int>(std::clamp<std::int64_t>(iy + rng.uniform_int(-4, 4), 0, kGridCells - 1));
                     const auto &a = g.at(ix, iy), &b = g.at(jx, jy);
                     if (!a || !b) continue;
                     const auto r = path_crossings(segs, g.cell_center(ix, iy), g.cell_center(jx, jy));
                     if (r && r->count == 0 && *a != *b) return false;
                   }
                   return true;
                 }});

  out.push_back({"regions.adjacency", Suite::regions, random_grid_case, [](const Instance& i) {
                   const auto l = closed_l(i);
                   const auto segs = segments_of(l);
                   const auto g = mobius_alexander_grid(l, kGridCells, kGridCells);
                   for (int iy = 0; iy < kGridCells; ++iy) {
                     for (int ix = 0; ix < kGridCells; ++ix) {
                       for (const auto& [jx, jy] : {std::pair{ix + 1, iy}, std::pair{ix, iy + 1}}) {
                         if (jx >= kGridCells || jy >= kGridCells) continue;
                         const auto &a = g.at(ix, iy), &b = g.at(jx, jy);
                         if (!a || !b) continue;
                         const auto r = path_crossings(segs, g.cell_center(ix, iy), g.cell_center(jx, jy));
                         if (!r) continue;
                         if (*b - *a != r->signed_sum) return false;
                         if (r->count == 1 && std::llabs(*b - *a) != 1) return false;
                       }
                     }
                   }
                   return true;
                 }});

  out.push_back({"regions.parity_mask", Suite::regions, random_grid_case, [](const Instance& i) {
                   const auto l = closed_l(i);
                   const auto g = mobius_alexander_grid(l, kGridCells, kGridCells);
                   const auto mask = checkerboard_mask(g);
                   for (int iy = 0; iy < kGridCells; ++iy) {
                     for (int ix = 0; ix < kGridCells; ++ix) {
                       const auto pc = classify_point(l, g.cell_center(ix, iy));
                       const auto& black = mask.black[static_cast<std::size_t>(iy * kGridCells + ix)];
                       if (pc.on_boundary != !black.has_value()) return false;
                       if (black && *black != interior_mod2(pc)) return false;
                     }
                   }
                   return true;
                 }});

  out.push_back({"regions.path_parity", Suite::regions,
                 [](Rng& rng) { return closed_with_point(rng, lattice(10)); },
                 [](const Instance& i) {
                   const auto l = closed_l(i);
                   const auto segs = segments_of(l);
                   const auto box = bounding_box(l.points());
                   const Point center = box.min + 0.5 * (box.max - box.min);
                   const double radius = distance(center, far_point(l));
                   for (int k = 0; k < 64; ++k) {
                     const double a = 0.25 * kPi + k * 2.39996322972865332;
                     const Point start = center + Vec2{radius * std::cos(a), radius * std::sin(a)};
                     const auto r = path_crossings(segs, start, *i.o);
                     if (!r) continue;
                     return (r->count % 2 != 0) == interior_mod2(classify_point(l, *i.o));
                   }
                   return false;
                 }});
  return out;
}

std::string fixed_id_filename(const std::string& id) {
  std::string out = id;
  for (auto& c : out) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_' || c == '-')) c = '_';
  }
  return out + ".json";
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::all, Suite::angles, Suite::winding, Suite::stokes, Suite::boundary, Suite::regions}) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::all: return "all";
    case Suite::angles: return "angles";
    case Suite::winding: return "winding";
    case Suite::stokes: return "stokes";
    case Suite::boundary: return "boundary";
    case Suite::regions: return "regions";
  }
  return "all";
}

std::vector<Property> properties(Suite suite) {
  std::vector<Property> all;
  for (auto&& group : {angle_properties(), winding_properties(), stokes_properties(), boundary_properties(),
                       region_properties()}) {
    for (const auto& p : group) {
      if (suite == Suite::all || p.suite == suite) all.push_back(p);
    }
  }
  return all;
}

PropertyResult run_property(const Property& prop, std::int64_t n, std::uint64_t seed,
                            const std::string& counterexample_dir) {
  PropertyResult result{prop.id, n, 0, {}, {}};
  const Rng stream = Rng(seed).split(prop.id);
  std::optional<Instance> first_failure;
  for (std::int64_t k = 0; k < n; ++k) {
    Rng rng = stream.split(static_cast<std::uint64_t>(k));
    bool ok = false;
    std::optional<Instance> inst;
    try {
      inst = prop.generate(rng);
      ok = prop.holds(*inst);
    } catch (const std::exception& e) {
      if (result.first_error.empty()) result.first_error = e.what();
    }
    if (ok) continue;
    ++result.failures;
    if (!first_failure && inst) first_failure = inst;
  }

  if (first_failure) {
    const auto shrunk = testkit::shrink(*first_failure, [&](const Instance& c) { return !prop.holds(c); });
    std::filesystem::create_directories(counterexample_dir);
    const auto path = (std::filesystem::path(counterexample_dir) / fixed_id_filename(prop.id)).string();
    std::ofstream(path) << testkit::counterexample_json(shrunk, prop.id).dump(2) << "\n";
    result.counterexample_path = path;
  }
  return result;
}

Report run(Suite suite, std::int64_t n, std::uint64_t seed, const std::string& counterexample_dir) {
  Report report;
  for (const auto& prop : properties(suite)) report.results.push_back(run_property(prop, n, seed, counterexample_dir));
  return report;
}

bool Report::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.failures == 0; });
}

std::string Report::format() const {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.failures == 0) {
      ++passed;
      os << "PASS " << r.id << " cases=" << r.cases << "\n";
    } else {
      os << "FAIL " << r.id << " cases=" << r.cases << " failures=" << r.failures;
      if (!r.counterexample_path.empty()) os << " counterexample=" << r.counterexample_path;
      os << "\n";
      if (!r.first_error.empty()) os << "  error: " << r.first_error << "\n";
    }
  }
  os << "properties=" << results.size() << " passed=" << passed << " failed=" << (results.size() - passed) << "\n";
  return os.str();
}

}  // namespace winding::verify
