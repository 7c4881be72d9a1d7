#include "winding/polyline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace winding {

namespace {

std::vector<Point> require_non_empty(std::vector<Point> points) {
  if (points.empty()) throw Error(ErrorKind::invalid_input, "polyline needs at least one point");
  return points;
}

std::vector<Segment> consecutive_segments(std::span<const Point> pts, bool closed) {
  std::vector<Segment> out;
  const std::size_t m = pts.size();
  const std::size_t count = closed ? m : (m == 0 ? 0 : m - 1);
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Segment s{pts[i], pts[(i + 1) % m]};
    if (!s.degenerate()) out.push_back(s);
  }
  return out;
}

nlohmann::json points_json(std::span<const Point> pts) {
  auto arr = nlohmann::json::array();
  for (const auto& p : pts) arr.push_back({p.x(), p.y()});
  return arr;
}

}  // namespace

OpenPolyline::OpenPolyline(std::vector<Point> points) : points_(require_non_empty(std::move(points))) {}

ClosedPolyline::ClosedPolyline(std::vector<Point> points) : points_(require_non_empty(std::move(points))) {}

OneCycle::OneCycle(std::vector<Segment> segments) : segments_(std::move(segments)) {
  for (const auto& s : segments_) {
    if (s.degenerate()) throw Error(ErrorKind::invalid_input, "1-cycle segment with equal endpoints");
  }
}

OpenPolyline reverse(const OpenPolyline& l) {
  std::vector<Point> pts(l.points().rbegin(), l.points().rend());
  return OpenPolyline(std::move(pts));
}

ClosedPolyline reverse(const ClosedPolyline& l) {
  std::vector<Point> pts(l.points().rbegin(), l.points().rend());
  return ClosedPolyline(std::move(pts));
}

OpenPolyline concat_open(const OpenPolyline& l1, const OpenPolyline& l2) {
  if (!(l1.end() == l2.start())) {
    throw Error(ErrorKind::endpoint_mismatch, "end of the first line differs from start of the second");
  }
  std::vector<Point> pts(l1.points().begin(), l1.points().end());
  pts.insert(pts.end(), l2.points().begin() + 1, l2.points().end());
  return OpenPolyline(std::move(pts));
}

ClosedPolyline concat_closed(const ClosedPolyline& l1, const ClosedPolyline& l2) {
  if (!(l1.points().back() == l2.points().back())) {
    throw Error(ErrorKind::endpoint_mismatch, "closed lines do not share their last point");
  }
  std::vector<Point> pts(l1.points().begin(), l1.points().end());
  pts.insert(pts.end(), l2.points().begin(), l2.points().end());
  return ClosedPolyline(std::move(pts));
}

ClosedPolyline as_closed(const OpenPolyline& l) {
  return ClosedPolyline(std::vector<Point>(l.points().begin(), l.points().end()));
}

std::vector<Segment> segments_of(const OpenPolyline& l) { return consecutive_segments(l.points(), false); }
std::vector<Segment> segments_of(const ClosedPolyline& l) { return consecutive_segments(l.points(), true); }

BoundingBox bounding_box(std::span<const Point> points) {
  if (points.empty()) throw Error(ErrorKind::invalid_input, "bounding box of no points");
  double x0 = points[0].x(), x1 = x0, y0 = points[0].y(), y1 = y0;
  for (const auto& p : points) {
    x0 = std::min(x0, p.x());
    x1 = std::max(x1, p.x());
    y0 = std::min(y0, p.y());
    y1 = std::max(y1, p.y());
  }
  return {{x0, y0}, {x1, y1}};
}

ClosedPolyline convex_hull(std::span<const Point> points) {
  if (points.empty()) throw Error(ErrorKind::invalid_input, "convex hull of no points");
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(),
            [](Point a, Point b) { return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y()); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return ClosedPolyline(pts);

  // Andrew's monotone chain; only strict left turns are kept.
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) != Orientation::ccw) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], pts[i]) != Orientation::ccw) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return ClosedPolyline(std::move(hull));
}

Point far_point(std::span<const Point> points) {
  const auto box = bounding_box(points);
  double diag = distance(box.min, box.max);
  if (diag == 0.0) diag = 1.0;
  return {box.max.x() + diag, box.max.y() + diag};
}

nlohmann::json to_json(const OpenPolyline& l) {
  return {{"closed", false}, {"points", points_json(l.points())}};
}

nlohmann::json to_json(const ClosedPolyline& l) {
  return {{"closed", true}, {"points", points_json(l.points())}};
}

AnyPolyline polyline_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::invalid_input, "polyline document must be a JSON object");
  const auto closed = doc.find("closed");
  const auto points = doc.find("points");
  if (closed == doc.end() || !closed->is_boolean()) {
    throw Error(ErrorKind::invalid_input, "missing boolean field \"closed\"");
  }
  if (points == doc.end() || !points->is_array() || points->empty()) {
    throw Error(ErrorKind::invalid_input, "field \"points\" must be a non-empty array");
  }
  std::vector<Point> pts;
  pts.reserve(points->size());
  for (const auto& item : *points) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
      throw Error(ErrorKind::invalid_input, "each point must be a [x, y] pair of numbers");
    }
    pts.emplace_back(item[0].get<double>(), item[1].get<double>());
  }
  if (closed->get<bool>()) return ClosedPolyline(std::move(pts));
  return OpenPolyline(std::move(pts));
}

AnyPolyline parse_polyline(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::invalid_input, std::string("malformed JSON: ") + e.what());
  }
  return polyline_from_json(doc);
}

AnyPolyline read_polyline_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_input, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polyline(buf.str());
}

}  // namespace winding
