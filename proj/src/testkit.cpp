#include "winding/testkit.hpp"

#include <algorithm>
#include <cmath>

namespace winding::testkit {

namespace {

constexpr int kMaxRejections = 10000;

std::vector<Point> random_points(Rng& rng, const GenConfig& cfg, int count) {
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) pts.push_back(random_lattice_point(rng, cfg));
  return pts;
}

int vertex_count(Rng& rng, const GenConfig& cfg, int min_vertices) {
  return static_cast<int>(rng.uniform_int(min_vertices, std::max(min_vertices, cfg.max_vertices)));
}

std::vector<Point> joined(std::span<const Point> a, std::span<const Point> b) {
  std::vector<Point> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return all;
}

double small_angle(Point o, Point a, Point b) {
  const double ax = a.x() - o.x(), ay = a.y() - o.y();
  const double bx = b.x() - o.x(), by = b.y() - o.y();
  return std::atan2(ax * by - ay * bx, ax * bx + ay * by);
}

// Turning along the straight piece from a to b, bisected until every piece
// subtends less than a quarter turn.
double sweep(Point o, Point a, Point b, int depth) {
  const double t = small_angle(o, a, b);
  if (std::abs(t) < 0.5 * kPi || depth > 60) return t;
  const Point mid{0.5 * (a.x() + b.x()), 0.5 * (a.y() + b.y())};
  return sweep(o, a, mid, depth + 1) + sweep(o, mid, b, depth + 1);
}

double halve(double v) {
  const double h = std::trunc(v / 2.0);
  return h == 0.0 ? 0.0 : h;  // no negative zeros in written counterexamples
}

Point halve(Point p) { return {halve(p.x()), halve(p.y())}; }

nlohmann::json points_array(std::span<const Point> pts) {
  auto arr = nlohmann::json::array();
  for (const auto& p : pts) arr.push_back({p.x(), p.y()});
  return arr;
}

}  // namespace

void GenConfig::validate() const {
  if (max_vertices < 3) throw Error(ErrorKind::invalid_input, "max_vertices must be at least 3");
  if (coord_range < 10) throw Error(ErrorKind::invalid_input, "coord_range must be at least 10");
  if (!(perturbation >= 0.0)) throw Error(ErrorKind::invalid_input, "perturbation must be non-negative");
}

Point random_lattice_point(Rng& rng, const GenConfig& cfg) {
  double x = static_cast<double>(rng.uniform_int(-cfg.coord_range, cfg.coord_range));
  double y = static_cast<double>(rng.uniform_int(-cfg.coord_range, cfg.coord_range));
  if (cfg.perturbation > 0.0) {
    x += rng.uniform(-cfg.perturbation, cfg.perturbation);
    y += rng.uniform(-cfg.perturbation, cfg.perturbation);
  }
  return {x, y};
}

ClosedPolyline random_closed(Rng& rng, const GenConfig& cfg, int min_vertices) {
  return ClosedPolyline(random_points(rng, cfg, vertex_count(rng, cfg, min_vertices)));
}

OpenPolyline random_open(Rng& rng, const GenConfig& cfg, int min_vertices) {
  return OpenPolyline(random_points(rng, cfg, vertex_count(rng, cfg, min_vertices)));
}

Point random_point_off(Rng& rng, const GenConfig& cfg, const ClosedPolyline& l) {
  const auto segs = segments_of(l);
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    const Point o = random_lattice_point(rng, cfg);
    const bool on_vertex = std::any_of(l.points().begin(), l.points().end(),
                                       [&](Point v) { return distance(v, o) <= tol::point; });
    if (!on_vertex && !point_on_segments(o, segs)) return o;
  }
  throw Error(ErrorKind::generation_exhausted, "no off-line point found");
}

std::pair<ClosedPolyline, OpenPolyline> gen_general_position_pair(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return gen_general_position_pair(rng, cfg);
}

std::pair<ClosedPolyline, OpenPolyline> gen_general_position_pair(Rng& rng, const GenConfig& cfg) {
  cfg.validate();
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    auto l = random_closed(rng, cfg);
    auto p = random_open(rng, cfg);
    if (in_general_position(joined(l.points(), p.points()))) return {std::move(l), std::move(p)};
  }
  throw Error(ErrorKind::generation_exhausted, "general-position rejection sampling exhausted");
}

std::pair<ClosedPolyline, ClosedPolyline> gen_general_position_closed_pair(Rng& rng, const GenConfig& cfg) {
  cfg.validate();
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    auto l = random_closed(rng, cfg);
    auto p = random_closed(rng, cfg);
    if (in_general_position(joined(l.points(), p.points()))) return {std::move(l), std::move(p)};
  }
  throw Error(ErrorKind::generation_exhausted, "general-position rejection sampling exhausted");
}

std::pair<OpenPolyline, OpenPolyline> gen_general_position_open_pair(Rng& rng, const GenConfig& cfg) {
  cfg.validate();
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    auto l = random_open(rng, cfg);
    auto p = random_open(rng, cfg);
    if (in_general_position(joined(l.points(), p.points()))) return {std::move(l), std::move(p)};
  }
  throw Error(ErrorKind::generation_exhausted, "general-position rejection sampling exhausted");
}

ClosedPolyline gen_star_polygon(Rng& rng, const GenConfig& cfg) {
  const int m = vertex_count(rng, cfg, 3);
  const double range = static_cast<double>(cfg.coord_range);
  const Point center{rng.uniform(-0.5 * range, 0.5 * range), rng.uniform(-0.5 * range, 0.5 * range)};
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    std::vector<double> angles;
    for (int i = 0; i < m; ++i) angles.push_back(rng.uniform(0.0, kTwoPi));
    std::sort(angles.begin(), angles.end());
    // Distinct angles with every gap below a half-turn keep the centre inside.
    bool ok = angles.back() - angles.front() > kPi;
    for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
      const double gap = angles[i + 1] - angles[i];
      ok = ok && gap > 1e-6 && gap < kPi;
    }
    ok = ok && (kTwoPi - (angles.back() - angles.front())) < kPi;
    if (!ok) continue;
    std::vector<Point> pts;
    for (double a : angles) {
      const double r = rng.uniform(0.2, 0.5) * range;
      pts.push_back(center + Vec2{r * std::cos(a), r * std::sin(a)});
    }
    return ClosedPolyline(std::move(pts));
  }
  throw Error(ErrorKind::generation_exhausted, "star polygon sampling exhausted");
}

double sampled_angle_oracle(const ClosedPolyline& l, Point o, int steps_per_segment) {
  if (steps_per_segment < 2) throw Error(ErrorKind::invalid_input, "need at least two steps per segment");
  const auto pts = l.points();
  const std::size_t m = pts.size();
  for (const auto& s : segments_of(l)) {
    if (distance(o, s) <= tol::point) throw Error(ErrorKind::point_on_line, "oracle point lies on the line");
  }
  for (const auto& v : pts) {
    if (distance(o, v) <= tol::point) throw Error(ErrorKind::point_on_line, "oracle point is a vertex");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const Point a = pts[i];
    const Point b = pts[(i + 1) % m];
    if (a == b) continue;
    Point prev = a;
    for (int k = 1; k <= steps_per_segment; ++k) {
      const double t = static_cast<double>(k) / steps_per_segment;
      const Point next = k == steps_per_segment ? b : Point{a.x() + t * (b.x() - a.x()), a.y() + t * (b.y() - a.y())};
      total += sweep(o, prev, next, 0);
      prev = next;
    }
  }
  return total;
}

Instance shrink(const Instance& failing, const FailurePredicate& fails, int max_rounds) {
  const auto still_fails = [&](const Instance& inst) {
    try {
      return fails(inst);
    } catch (...) {
      return false;
    }
  };
  Instance cur = failing;
  if (!still_fails(cur)) return cur;

  for (int round = 0; round < max_rounds; ++round) {
    bool improved = false;

    for (auto* pts : {&cur.l, &cur.p}) {
      for (std::size_t i = 0; pts->size() > 1 && i < pts->size() && !improved; ++i) {
        Instance cand = cur;
        auto& target = pts == &cur.l ? cand.l : cand.p;
        target.erase(target.begin() + static_cast<std::ptrdiff_t>(i));
        if (still_fails(cand)) {
          cur = std::move(cand);
          improved = true;
        }
      }
    }
    if (improved) continue;

    Instance all = cur;
    for (auto& v : all.l) v = halve(v);
    for (auto& v : all.p) v = halve(v);
    if (all.o) all.o = halve(*all.o);
    if (!(all == cur) && still_fails(all)) {
      cur = std::move(all);
      continue;
    }

    for (std::size_t i = 0; i < cur.l.size() + cur.p.size() && !improved; ++i) {
      Instance cand = cur;
      Point& v = i < cand.l.size() ? cand.l[i] : cand.p[i - cand.l.size()];
      const Point h = halve(v);
      if (h == v) continue;
      v = h;
      if (still_fails(cand)) {
        cur = std::move(cand);
        improved = true;
      }
    }
    if (!improved) break;
  }
  return cur;
}

nlohmann::json counterexample_json(const Instance& inst, const std::string& property) {
  nlohmann::json doc = {{"property", property}, {"closed", inst.l_closed}, {"points", points_array(inst.l)}};
  if (!inst.p.empty()) doc["p"] = {{"closed", false}, {"points", points_array(inst.p)}};
  if (inst.o) doc["point"] = {inst.o->x(), inst.o->y()};
  if (!inst.params.empty()) doc["params"] = inst.params;
  return doc;
}

}  // namespace winding::testkit
