#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "winding/crossings.hpp"
#include "winding/regions.hpp"
#include "winding/verify.hpp"
#include "winding/winding.hpp"

namespace {

using namespace winding;

enum Exit : int {
  kOk = 0,
  kPropertyFailure = 1,
  kInputError = 2,
  kGeometryError = 3,
  kGeneralPosition = 4,
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  if (std::string(buf) == "-0") return "0";
  return buf;
}

Point parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::invalid_input, "expected a point as x,y: " + text);
  try {
    std::size_t used_x = 0, used_y = 0;
    const std::string xs = text.substr(0, comma), ys = text.substr(comma + 1);
    const double x = std::stod(xs, &used_x);
    const double y = std::stod(ys, &used_y);
    if (used_x != xs.size() || used_y != ys.size()) throw std::invalid_argument("trailing characters");
    return {x, y};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::invalid_input, "expected a point as x,y: " + text);
  }
}

ClosedPolyline read_closed(const std::string& path) {
  auto any = read_polyline_file(path);
  if (auto* l = std::get_if<ClosedPolyline>(&any)) return *l;
  throw Error(ErrorKind::invalid_input, path + ": expected a closed polyline");
}

OpenPolyline read_open(const std::string& path) {
  auto any = read_polyline_file(path);
  if (auto* l = std::get_if<OpenPolyline>(&any)) return *l;
  throw Error(ErrorKind::invalid_input, path + ": expected an open polyline");
}

std::vector<Segment> read_segments(const std::string& path) {
  return std::visit([](const auto& l) { return segments_of(l); }, read_polyline_file(path));
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input:
    case ErrorKind::generation_exhausted:
      return kInputError;
    case ErrorKind::general_position_violation:
    case ErrorKind::non_generic_intersection:
      return kGeneralPosition;
    default:
      return kGeometryError;
  }
}

int cmd_wind(const std::string& file, const std::string& point) {
  const auto r = winding_number(read_closed(file), parse_point(point));
  std::cout << "w=" << r.w << " residual=" << num(r.residual) << "\n";
  return kOk;
}

int cmd_wprime(const std::string& file, const std::string& point) {
  const auto t = w_prime(read_open(file), parse_point(point));
  std::cout << "w'=" << num(t.value) << "\n";
  return kOk;
}

int cmd_classify(const std::string& file, const std::string& point) {
  const auto pc = classify_point(read_closed(file), parse_point(point));
  if (pc.on_boundary) {
    std::cout << "class=boundary\n";
  } else {
    std::cout << "class=off w=" << pc.winding << " interior_mod2=" << (interior_mod2(pc) ? "yes" : "no") << "\n";
  }
  return kOk;
}

int cmd_cross(const std::string& a, const std::string& b, bool with_signs) {
  const auto report = crossings(read_segments(a), read_segments(b));
  if (!with_signs) {
    std::cout << "count=" << report.count << "\n";
    return kOk;
  }
  for (const auto& c : report.crossings) {
    std::cout << "(" << num(c.point.x()) << "," << num(c.point.y()) << ") " << (c.sign > 0 ? "+1" : "-1") << "\n";
  }
  std::cout << "count=" << report.count << " signed=" << report.signed_sum << "\n";
  return kOk;
}

int cmd_boundary(const std::string& a, const std::string& b) {
  const auto l = read_open(a);
  const auto p = read_open(b);
  const auto pairing = boundary_pairing(l, p);
  const auto report = crossings(l, p);
  std::cout << "∂=" << pairing.rounded << " value=" << num(pairing.value) << " l·p=" << report.signed_sum
            << " agree=" << (pairing.rounded == report.signed_sum ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_color(const std::string& file, const std::string& grid_spec, const std::string& mode,
              const std::string& out, const std::string& json_out) {
  int nx = 0, ny = 0;
  char sep = 0;
  std::istringstream gs(grid_spec);
  if (!(gs >> nx >> sep >> ny) || (sep != 'x' && sep != 'X') || !gs.eof()) {
    throw Error(ErrorKind::invalid_input, "grid must look like 64x64");
  }
  RenderMode render_mode;
  if (mode == "integer") render_mode = RenderMode::integer;
  else if (mode == "parity") render_mode = RenderMode::parity;
  else throw Error(ErrorKind::invalid_input, "mode must be integer or parity");

  const auto l = read_closed(file);
  const auto grid = mobius_alexander_grid(l, nx, ny);
  {
    std::ofstream svg(out, std::ios::binary);
    if (!svg) throw Error(ErrorKind::invalid_input, "cannot write " + out);
    svg << render_svg(l, grid, render_mode);
  }
  if (!json_out.empty()) {
    std::ofstream js(json_out, std::ios::binary);
    if (!js) throw Error(ErrorKind::invalid_input, "cannot write " + json_out);
    js << grid_to_json(grid).dump() << "\n";
  }

  std::map<std::int64_t, std::int64_t> histogram;
  std::int64_t boundary = 0;
  for (const auto& label : grid.labels) {
    if (label) ++histogram[*label];
    else ++boundary;
  }
  for (const auto& [label, cells] : histogram) std::cout << "label=" << label << " cells=" << cells << "\n";
  if (boundary > 0) std::cout << "label=boundary cells=" << boundary << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Winding numbers, signed crossings and complement colorings of polygonal lines"};
  app.require_subcommand(1);

  std::string file, file_b, point, grid_spec = "64x64", mode = "integer", out = "coloring.svg", json_out;
  bool with_signs = false;

  auto* wind = app.add_subcommand("wind", "Winding number of a closed line around a point");
  wind->add_option("line", file, "closed polyline JSON")->required();
  wind->add_option("point", point, "x,y")->required();

  auto* wprime = app.add_subcommand("wprime", "Turn fraction of an open line around a point");
  wprime->add_option("line", file, "open polyline JSON")->required();
  wprime->add_option("point", point, "x,y")->required();

  auto* classify = app.add_subcommand("classify", "Boundary / winding / interior-mod-2 classification");
  classify->add_option("line", file, "closed polyline JSON")->required();
  classify->add_option("point", point, "x,y")->required();

  auto* cross = app.add_subcommand("cross", "Crossings of two polygonal lines");
  cross->add_option("first", file, "polyline JSON")->required();
  cross->add_option("second", file_b, "polyline JSON")->required();
  cross->add_flag("--signed", with_signs, "print every crossing with its sign and the signed total");

  auto* boundary = app.add_subcommand("boundary", "Boundary pairing of two open lines against their crossings");
  boundary->add_option("first", file, "open polyline JSON")->required();
  boundary->add_option("second", file_b, "open polyline JSON")->required();

  auto* color = app.add_subcommand("color", "Render the winding-number coloring of the complement as SVG");
  color->add_option("line", file, "closed polyline JSON")->required();
  color->add_option("--grid", grid_spec, "cells as NXxNY")->capture_default_str();
  color->add_option("--mode", mode, "integer or parity")->capture_default_str();
  color->add_option("--out", out, "SVG output path")->capture_default_str();
  color->add_option("--json", json_out, "optional grid label export");

  auto* gen = app.add_subcommand("gen", "Emit generated polylines as JSON");
  gen->require_subcommand(1);
  std::int64_t n = 0, n1 = 0, n2 = 0;
  int k = 3, j = 0, turns = 0;
  std::uint64_t seed = 0;
  double radius = 1.0, phase = 0.0;
  std::string center = "0,0", a_pt = "-1,1", b_pt = "1,1";

  auto* gen_loop_cmd = gen->add_subcommand("loop", "closed line winding n times around the centre");
  gen_loop_cmd->add_option("--n", n)->required();
  gen_loop_cmd->add_option("--center", center)->capture_default_str();
  gen_loop_cmd->add_option("--radius", radius)->capture_default_str();

  auto* gen_sym = gen->add_subcommand("symmetric", "random closed line symmetric about the centre");
  gen_sym->add_option("--k", k, "half the number of points")->capture_default_str();
  gen_sym->add_option("--seed", seed)->capture_default_str();
  gen_sym->add_option("--center", center)->capture_default_str();
  gen_sym->add_option("--turns", turns, "odd: emit a spiral with this many turns instead of a random line");
  gen_sym->add_option("--radius", radius, "spiral radius")->capture_default_str();

  auto* gen_three = gen->add_subcommand("threepaths", "three paths a->b with prescribed pairwise windings");
  gen_three->add_option("--n1", n1)->required();
  gen_three->add_option("--n2", n2)->required();
  gen_three->add_option("--a", a_pt)->capture_default_str();
  gen_three->add_option("--b", b_pt)->capture_default_str();
  gen_three->add_option("--center", center)->capture_default_str();

  auto* gen_sector = gen->add_subcommand("sector", "random path avoiding one ray of an equilateral triangle");
  gen_sector->add_option("--j", j, "0, 1 or 2")->capture_default_str();
  gen_sector->add_option("--center", center)->capture_default_str();
  gen_sector->add_option("--radius", radius)->capture_default_str();
  gen_sector->add_option("--phase", phase, "angle of the first vertex, radians")->capture_default_str();
  gen_sector->add_option("--seed", seed)->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites");
  std::string suite = "all", out_dir = "counterexamples";
  std::int64_t cases = 1000;
  verify_cmd->add_option("--suite", suite, "all|angles|winding|stokes|boundary|regions")->capture_default_str();
  verify_cmd->add_option("--n", cases, "cases per property")->capture_default_str();
  verify_cmd->add_option("--seed", seed)->capture_default_str();
  verify_cmd->add_option("--out-dir", out_dir, "where counterexamples are written")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*wind) return cmd_wind(file, point);
    if (*wprime) return cmd_wprime(file, point);
    if (*classify) return cmd_classify(file, point);
    if (*cross) return cmd_cross(file, file_b, with_signs);
    if (*boundary) return cmd_boundary(file, file_b);
    if (*color) return cmd_color(file, grid_spec, mode, out, json_out);
    if (*gen_loop_cmd) {
      std::cout << to_json(gen_loop(n, parse_point(center), radius)).dump() << "\n";
      return kOk;
    }
    if (*gen_sym) {
      const Point o = parse_point(center);
      const auto l = turns != 0 ? gen_symmetric_spiral(k, turns, o, radius) : gen_symmetric(k, o, seed);
      std::cout << to_json(l).dump() << "\n";
      return kOk;
    }
    if (*gen_three) {
      const auto paths = gen_three_paths(n1, n2, parse_point(a_pt), parse_point(b_pt), parse_point(center));
      std::cout << nlohmann::json::array({to_json(paths.l1), to_json(paths.l2), to_json(paths.l3)}).dump() << "\n";
      return kOk;
    }
    if (*gen_sector) {
      if (!(radius > 0.0)) throw Error(ErrorKind::invalid_input, "radius must be positive");
      const Point o = parse_point(center);
      std::array<Point, 3> tri;
      for (int v = 0; v < 3; ++v) {
        const double ang = phase + v * kTwoPi / 3.0;
        tri[static_cast<std::size_t>(v)] = o + Vec2{radius * std::cos(ang), radius * std::sin(ang)};
      }
      std::cout << to_json(gen_sector_path(j, tri, o, seed)).dump() << "\n";
      return kOk;
    }
    if (*verify_cmd) {
      const auto s = verify::parse_suite(suite);
      if (!s) throw Error(ErrorKind::invalid_input, "unknown suite " + suite);
      if (cases < 0) throw Error(ErrorKind::invalid_input, "--n must be non-negative");
      const auto report = verify::run(*s, cases, seed, out_dir);
      std::cout << report.format();
      return report.all_passed() ? kOk : kPropertyFailure;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
