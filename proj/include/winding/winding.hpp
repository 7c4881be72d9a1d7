#pragma once

#include <array>
#include <cstdint>

#include "winding/geom.hpp"
#include "winding/polyline.hpp"

namespace winding {

struct WindingResult {
  std::int64_t w = 0;
  // |sum of angles - 2*pi*w|, radians.
  double residual = 0.0;
};

// Real-valued number of turns of an open line; integral only for closed paths.
struct TurnFraction {
  double value = 0.0;
};

// Sum of the oriented angles A_j O A_{j+1} over consecutive points, closing
// pair included, divided by 2*pi. O must not lie on the line.
WindingResult winding_number(const ClosedPolyline& l, Point o);

// The same sum without the closing pair; 0 for a single point.
TurnFraction w_prime(const OpenPolyline& l, Point o);

// Sum of the angles AOB over the segments AB of the cycle.
WindingResult winding_of_cycle(const OneCycle& c, Point o);

// Sum over i of w(P A_i A_{i+1}, O). Throws FanBlocked when O lies on some PA_i.
WindingResult fan_decomposition(const ClosedPolyline& l, Point o, Point p);

// A closed line winding n times around o: the single point o + (radius, 0)
// for n = 0, otherwise an equilateral triangle centred at o repeated |n|
// times, counterclockwise for n > 0.
ClosedPolyline gen_loop(std::int64_t n, Point o, double radius);

// A random 2k-point closed line centrally symmetric about o
// (A_{k+j} = 2o - A_j) that does not pass through o.
ClosedPolyline gen_symmetric(int k, Point o, std::uint64_t seed);

// A centrally symmetric 2k-gon spiralling `turns` times around o; turns must
// be odd and 2k > 2 * turns so every step is shorter than a half-turn.
ClosedPolyline gen_symmetric_spiral(int k, int turns, Point o, double radius);

struct ThreePaths {
  OpenPolyline l1;
  OpenPolyline l2;
  OpenPolyline l3;
};

// Three lines from a to b avoiding o with w(l1 l2^-1) = n1, w(l2 l3^-1) = n2
// and w(l1 l3^-1) = n1 + n2. l2 is a base path; l1 and l3 prepend loops of
// n1 and -n2 turns around o that start and end at a.
ThreePaths gen_three_paths(std::int64_t n1, std::int64_t n2, Point a, Point b, Point o);

// A random line from triangle[(j+1)%3] to triangle[(j+2)%3] none of whose
// segments meets the closed ray from o through triangle[j].
OpenPolyline gen_sector_path(int j, const std::array<Point, 3>& triangle, Point o, std::uint64_t seed);

// True if the segment meets the closed ray starting at origin through `through`.
bool segment_hits_ray(const Segment& s, Point origin, Point through);

}  // namespace winding
