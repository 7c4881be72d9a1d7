#include <fstream>
#include <vector>

#include "doctest.h"
#include "winding/polyline.hpp"
#include "winding/random.hpp"
#include "winding/winding.hpp"

using namespace winding;

namespace {

const Point A{0, 0}, B{4, 1}, C{2, 3}, D{-1, 2}, E{-3, -1};

bool throws_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

std::vector<Point> pts(std::initializer_list<Point> list) { return list; }

}  // namespace

TEST_CASE("polylines need at least one point") {
  CHECK(throws_kind(ErrorKind::invalid_input, [] { OpenPolyline(std::vector<Point>{}); }));
  CHECK(throws_kind(ErrorKind::invalid_input, [] { ClosedPolyline(std::vector<Point>{}); }));
}

TEST_CASE("polylines are value objects over the whole point sequence") {
  const ClosedPolyline abc(pts({A, B, C}));
  const ClosedPolyline twice(pts({A, B, C, A, B, C}));
  CHECK_FALSE(abc.points().size() == twice.points().size());
  CHECK(abc == ClosedPolyline(pts({A, B, C})));
}

TEST_CASE("reverse") {
  CHECK(reverse(OpenPolyline(pts({A, B, C}))) == OpenPolyline(pts({C, B, A})));
  CHECK(reverse(OpenPolyline(pts({A}))) == OpenPolyline(pts({A})));
  const OpenPolyline l(pts({A, B, C, D}));
  CHECK(reverse(reverse(l)) == l);
  const Point o{1, 1.2};
  CHECK(w_prime(reverse(l), o).value == doctest::Approx(-w_prime(l, o).value));
}

TEST_CASE("reverse flips and reorders segments") {
  const OpenPolyline l(pts({A, B, C, D}));
  const auto fwd = segments_of(l);
  const auto back = segments_of(reverse(l));
  REQUIRE(fwd.size() == back.size());
  for (std::size_t i = 0; i < fwd.size(); ++i) CHECK(back[i] == fwd[fwd.size() - 1 - i].reversed());
}

TEST_CASE("concat open") {
  CHECK(concat_open(OpenPolyline(pts({A, C})), OpenPolyline(pts({C, B}))) == OpenPolyline(pts({A, C, B})));
  CHECK(concat_open(OpenPolyline(pts({A})), OpenPolyline(pts({A, B}))) == OpenPolyline(pts({A, B})));
  CHECK(throws_kind(ErrorKind::endpoint_mismatch,
                    [] { concat_open(OpenPolyline(pts({A, C})), OpenPolyline(pts({D, B}))); }));
  // bit-exact: a nearby point is still a mismatch
  CHECK(throws_kind(ErrorKind::endpoint_mismatch, [] {
    concat_open(OpenPolyline(pts({A, C})), OpenPolyline(pts({Point(2, 3 + 1e-15), B})));
  }));
}

TEST_CASE("concat open is associative and w' is additive") {
  const OpenPolyline l1(pts({A, B})), l2(pts({B, C, D})), l3(pts({D, E}));
  CHECK(concat_open(concat_open(l1, l2), l3) == concat_open(l1, concat_open(l2, l3)));
  const Point o{0.7, 1.9};
  CHECK(w_prime(concat_open(l1, l2), o).value ==
        doctest::Approx(w_prime(l1, o).value + w_prime(l2, o).value));
}

TEST_CASE("concat closed") {
  CHECK(concat_closed(ClosedPolyline(pts({A, B, C})), ClosedPolyline(pts({D, E, C}))) ==
        ClosedPolyline(pts({A, B, C, D, E, C})));
  CHECK(throws_kind(ErrorKind::endpoint_mismatch,
                    [] { concat_closed(ClosedPolyline(pts({A, C})), ClosedPolyline(pts({B, D}))); }));
  const ClosedPolyline l1(pts({{1, 0}, {0, 1}, {-1, -1}}));
  const ClosedPolyline l2(pts({{2, 1}, {-3, 2}, {-1, -1}}));
  const Point o{0.1, 0.05};
  CHECK(winding_number(concat_closed(l1, l2), o).w == winding_number(l1, o).w + winding_number(l2, o).w);
}

TEST_CASE("segments of") {
  const auto closed = segments_of(ClosedPolyline(pts({A, B, C})));
  REQUIRE(closed.size() == 3);
  CHECK(closed[0] == Segment{A, B});
  CHECK(closed[1] == Segment{B, C});
  CHECK(closed[2] == Segment{C, A});
  const auto open = segments_of(OpenPolyline(pts({A, B, C})));
  REQUIRE(open.size() == 2);
  CHECK(open[1] == Segment{B, C});
  CHECK(segments_of(ClosedPolyline(pts({A}))).empty());
  // repeated consecutive points are dropped, the point list is kept
  const ClosedPolyline rep(pts({A, A, B, C, C}));
  CHECK(rep.size() == 5);
  CHECK(segments_of(rep).size() == 3);
}

TEST_CASE("one-cycle rejects degenerate segments") {
  CHECK(throws_kind(ErrorKind::invalid_input, [] { OneCycle(std::vector<Segment>{{A, A}}); }));
  CHECK_NOTHROW(OneCycle(std::vector<Segment>{{A, B}, {B, A}}));
}

TEST_CASE("convex hull") {
  const auto hull = convex_hull(pts({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}}));
  CHECK(hull == ClosedPolyline(pts({{0, 0}, {2, 0}, {2, 2}, {0, 2}})));
  CHECK(convex_hull(pts({{0, 0}, {1, 1}, {2, 2}})) == ClosedPolyline(pts({{0, 0}, {2, 2}})));
  CHECK(convex_hull(hull.points()) == hull);
  CHECK(convex_hull(pts({A})) == ClosedPolyline(pts({A})));
}

TEST_CASE("far point lies outside the hull") {
  const auto fp = far_point(pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
  CHECK(fp.x() >= 2);
  CHECK(fp.y() >= 2);
  CHECK_FALSE(far_point(pts({A})) == A);

  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    std::vector<Point> v;
    const int m = static_cast<int>(rng.uniform_int(3, 15));
    for (int k = 0; k < m; ++k) v.push_back({double(rng.uniform_int(-1000, 1000)), double(rng.uniform_int(-1000, 1000))});
    const ClosedPolyline l(v);
    CHECK(winding_number(l, far_point(l)).w == 0);
    // every vertex is inside or on the hull: winding of the hull never negative
    const auto hull = convex_hull(v);
    CHECK(winding_number(hull, far_point(l)).w == 0);
  }
}

TEST_CASE("bounding box") {
  const auto bb = bounding_box(pts({A, B, C, D, E}));
  CHECK(bb.min == Point(-3, -1));
  CHECK(bb.max == Point(4, 3));
}

TEST_CASE("json round trip") {
  const ClosedPolyline l(pts({{0.1, -2.5}, {1e6, 3}, {-7.25, 1.0 / 3}}));
  const auto back = parse_polyline(to_json(l).dump());
  REQUIRE(std::holds_alternative<ClosedPolyline>(back));
  CHECK(std::get<ClosedPolyline>(back) == l);
  const OpenPolyline o(pts({A, B}));
  const auto back_open = parse_polyline(to_json(o).dump());
  REQUIRE(std::holds_alternative<OpenPolyline>(back_open));
  CHECK(std::get<OpenPolyline>(back_open) == o);
}

TEST_CASE("json rejects malformed documents") {
  for (const char* text : {"", "[]", "{\"closed\": true}", "{\"points\": [[0,0]]}", "{\"closed\": 1, \"points\": [[0,0]]}",
                           "{\"closed\": true, \"points\": []}", "{\"closed\": true, \"points\": [[0]]}",
                           "{\"closed\": true, \"points\": [[0, \"a\"]]}", "{\"closed\": true, \"points\": [[0,0]"}) {
    CAPTURE(text);
    CHECK(throws_kind(ErrorKind::invalid_input, [&] { parse_polyline(text); }));
  }
  CHECK(throws_kind(ErrorKind::invalid_input, [] { read_polyline_file("/nonexistent/line.json"); }));
}

TEST_CASE("json fixture files parse") {
  const auto sq = read_polyline_file(WINDING_DATA_DIR "/square.json");
  REQUIRE(std::holds_alternative<ClosedPolyline>(sq));
  CHECK(std::get<ClosedPolyline>(sq).size() == 4);
}
