#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "winding/polyline.hpp"
#include "winding/random.hpp"

namespace winding::testkit {

struct GenConfig {
  std::uint64_t seed = 0;
  int max_vertices = 12;
  std::int64_t coord_range = 1000000;  // lattice half-width
  double perturbation = 0.0;           // uniform jitter added after the lattice draw

  void validate() const;
};

Point random_lattice_point(Rng& rng, const GenConfig& cfg);

// m in [min_vertices, cfg.max_vertices] lattice vertices.
ClosedPolyline random_closed(Rng& rng, const GenConfig& cfg, int min_vertices = 3);
OpenPolyline random_open(Rng& rng, const GenConfig& cfg, int min_vertices = 2);

// A lattice point that is neither a vertex of l nor on any of its segments.
Point random_point_off(Rng& rng, const GenConfig& cfg, const ClosedPolyline& l);

// Closed and open lines whose combined vertex set is in general position.
// Throws GenerationExhausted after 10^4 rejected draws.
std::pair<ClosedPolyline, OpenPolyline> gen_general_position_pair(const GenConfig& cfg);
std::pair<ClosedPolyline, OpenPolyline> gen_general_position_pair(Rng& rng, const GenConfig& cfg);

// Two closed lines whose combined vertex set is in general position.
std::pair<ClosedPolyline, ClosedPolyline> gen_general_position_closed_pair(Rng& rng, const GenConfig& cfg);
// Two open lines, likewise.
std::pair<OpenPolyline, OpenPolyline> gen_general_position_open_pair(Rng& rng, const GenConfig& cfg);

// Simple polygon: vertices at sorted random angles around a centre with
// random radii, counterclockwise.
ClosedPolyline gen_star_polygon(Rng& rng, const GenConfig& cfg);

// Accumulates the turning of the vector from o to a point sliding along l in
// short steps, each subtending less than a quarter turn (refined as needed).
double sampled_angle_oracle(const ClosedPolyline& l, Point o, int steps_per_segment);

// A generated test case. l is closed unless l_closed is false; p and o are
// optional companions.
struct Instance {
  std::vector<Point> l;
  bool l_closed = true;
  std::vector<Point> p;
  std::optional<Point> o;
  std::vector<std::int64_t> params;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Returns true when the instance still exhibits the failure. Exceptions from
// the predicate count as "does not fail".
using FailurePredicate = std::function<bool(const Instance&)>;

// Greedy shrinking: drops vertices and halves coordinates toward zero while
// the failure persists. A passing instance is returned unchanged.
Instance shrink(const Instance& failing, const FailurePredicate& fails, int max_rounds = 200);

// Polyline JSON of instance.l with the property id and companions attached.
nlohmann::json counterexample_json(const Instance& inst, const std::string& property);

}  // namespace winding::testkit
