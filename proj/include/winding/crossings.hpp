#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "winding/geom.hpp"
#include "winding/polyline.hpp"
#include "winding/winding.hpp"

namespace winding {

struct Crossing {
  Point point;
  int sign = 0;
  std::size_t l_segment_index = 0;
  std::size_t p_segment_index = 0;
};

struct CrossingReport {
  std::vector<Crossing> crossings;  // sorted by (l_segment_index, p_segment_index)
  std::int64_t count = 0;
  std::int64_t signed_sum = 0;
};

// +1 when the traversal A, B, C is clockwise for crossing directed segments
// AB and CD, -1 when it is counterclockwise.
int crossing_sign(const Segment& ab, const Segment& cd);

// All transversal crossings between the segments of l and the segments of p,
// every (l segment, p segment) pair counted separately. Any touching or
// overlapping pair raises GeneralPositionViolation.
CrossingReport crossings(std::span<const Segment> l, std::span<const Segment> p);

template <Polyline L, Polyline P>
CrossingReport crossings(const L& l, const P& p) {
  const auto ls = segments_of(l);
  const auto ps = segments_of(p);
  return crossings(ls, ps);
}

struct IntPair {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

// lhs = (w(l, P1) - w(l, P0)) mod 2, rhs = |l n p| mod 2.
IntPair stokes_parity_check(const ClosedPolyline& l, const OpenPolyline& p);

// lhs = w(l, P1) - w(l, P0), rhs = l . p.
IntPair stokes_signed_check(const ClosedPolyline& l, const OpenPolyline& p);

// Winding number as the signed crossing count of l with a straight path from
// a far point to `p`. The far point is re-aimed along a golden-angle sequence
// until the path is transversal to l.
WindingResult winding_via_ray(const ClosedPolyline& l, Point p, int max_attempts = 64);

struct BoundaryPairing {
  double value = 0.0;
  std::int64_t rounded = 0;
  double residual = 0.0;
};

// w'(l, D) - w'(p, B) - w'(l, C) + w'(p, A) for l = A...B and p = C...D.
BoundaryPairing boundary_pairing(const OpenPolyline& l, const OpenPolyline& p);

// Additivity of the boundary pairing in each argument under concatenation.
bool bilinearity_check(const OpenPolyline& l1, const OpenPolyline& l2, const OpenPolyline& p);

// Angle ADB + angle DBC + angle BCA + angle CAD with the vertex of each angle
// at its middle letter.
double four_angle_sum(Point a, Point b, Point c, Point d);

}  // namespace winding
