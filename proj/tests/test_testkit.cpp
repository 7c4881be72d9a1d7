#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <vector>

#include "doctest.h"
#include "winding/crossings.hpp"
#include "winding/testkit.hpp"
#include "winding/verify.hpp"

using namespace winding;
using testkit::GenConfig;
using testkit::Instance;

namespace {

bool throws_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

// Signed Stokes with the crossing sign deliberately reversed.
bool broken_sign_fails(const Instance& inst) {
  const ClosedPolyline l(inst.l);
  const OpenPolyline p(inst.p);
  const auto r = crossings(l, p);
  const auto lhs = winding_number(l, p.end()).w - winding_number(l, p.start()).w;
  return lhs != -r.signed_sum;
}

}  // namespace

TEST_CASE("rng streams are reproducible and independent") {
  Rng a(42), b(42), c(43);
  std::vector<std::uint64_t> va, vb, vc;
  for (int i = 0; i < 100; ++i) {
    va.push_back(a.next_u64());
    vb.push_back(b.next_u64());
    vc.push_back(c.next_u64());
  }
  CHECK(va == vb);
  CHECK(va != vc);
  // the first values of a fixed seed never change between builds
  Rng pinned(0);
  CHECK(pinned.next_u64() == Rng(0).next_u64());
  CHECK(Rng(5).split("winding.cycle").next_u64() == Rng(5).split("winding.cycle").next_u64());
  CHECK(Rng(5).split("a").next_u64() != Rng(5).split("b").next_u64());
  CHECK(Rng(5).split(1).next_u64() != Rng(5).split(2).next_u64());
}

TEST_CASE("rng ranges") {
  Rng r(1);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 5000; ++i) {
    const auto v = r.uniform_int(-3, 3);
    REQUIRE(v >= -3);
    REQUIRE(v <= 3);
    seen.insert(v);
    const double u = r.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
  CHECK(seen.size() == 7);
  CHECK(r.uniform_int(9, 9) == 9);
}

TEST_CASE("gen config validation") {
  GenConfig cfg;
  cfg.max_vertices = 2;
  CHECK(throws_kind(ErrorKind::invalid_input, [&] { testkit::gen_general_position_pair(cfg); }));
  cfg.max_vertices = 5;
  cfg.coord_range = 9;
  CHECK(throws_kind(ErrorKind::invalid_input, [&] { testkit::gen_general_position_pair(cfg); }));
}

TEST_CASE("general position generator") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    const auto [l, p] = testkit::gen_general_position_pair(cfg);
    std::vector<Point> all(l.points().begin(), l.points().end());
    all.insert(all.end(), p.points().begin(), p.points().end());
    CHECK(in_general_position(all));
    const auto again = testkit::gen_general_position_pair(cfg);
    CHECK(again.first == l);
    CHECK(again.second == p);
    CHECK_NOTHROW(stokes_parity_check(l, p));
  }
}

TEST_CASE("perturbed draws stay reproducible") {
  GenConfig cfg;
  cfg.seed = 3;
  cfg.perturbation = 0.25;
  const auto a = testkit::gen_general_position_pair(cfg);
  const auto b = testkit::gen_general_position_pair(cfg);
  CHECK(a.first == b.first);
  bool non_integer = false;
  for (const auto& v : a.first.points()) non_integer = non_integer || v.x() != std::round(v.x());
  CHECK(non_integer);
}

TEST_CASE("sampled angle oracle") {
  const ClosedPolyline tri(std::vector<Point>{{1, 0}, {-0.5, 0.866}, {-0.5, -0.866}});
  CHECK(testkit::sampled_angle_oracle(tri, {0, 0}, 64) == doctest::Approx(kTwoPi));
  CHECK(std::abs(testkit::sampled_angle_oracle(tri, {10, 0}, 64)) < 1e-9);
  CHECK(testkit::sampled_angle_oracle(gen_loop(5, {0, 0}, 1), {0, 0}, 8) == doctest::Approx(10 * kPi));
  CHECK(throws_kind(ErrorKind::point_on_line, [&] { testkit::sampled_angle_oracle(tri, {1, 0}, 8); }));
  CHECK(throws_kind(ErrorKind::invalid_input, [&] { testkit::sampled_angle_oracle(tri, {0, 0}, 1); }));
  // a long segment passing close to O still needs refinement, not a single big step
  const ClosedPolyline thin(std::vector<Point>{{-100, 0.001}, {100, 0.001}, {0, 50}});
  CHECK(testkit::sampled_angle_oracle(thin, {0, 0}, 2) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(testkit::sampled_angle_oracle(thin, {0, 1}, 2) == doctest::Approx(kTwoPi));
}

TEST_CASE("star polygons are simple") {
  Rng rng(12);
  GenConfig cfg;
  cfg.coord_range = 1000;
  for (int i = 0; i < 50; ++i) {
    const auto l = testkit::gen_star_polygon(rng, cfg);
    for (int q = 0; q < 50; ++q) {
      const Point x(rng.uniform(-1000, 1000), rng.uniform(-1000, 1000));
      const auto w = winding_number(l, x).w;
      CHECK((w == 0 || w == 1));
    }
  }
}

TEST_CASE("shrink leaves a passing instance alone") {
  Instance inst;
  inst.l = {{0, 0}, {10, 0}, {0, 10}};
  inst.p = {{-5, 1}, {5, 2}};
  const auto same = testkit::shrink(inst, [](const Instance&) { return false; });
  CHECK(same == inst);
}

TEST_CASE("shrink against a reversed crossing sign") {
  Rng rng(77);
  GenConfig cfg;
  cfg.max_vertices = 12;
  int shrunk = 0;
  for (int attempt = 0; attempt < 200 && shrunk < 10; ++attempt) {
    const auto [l, p] = testkit::gen_general_position_pair(rng, cfg);
    Instance inst;
    inst.l.assign(l.points().begin(), l.points().end());
    inst.p.assign(p.points().begin(), p.points().end());
    if (!broken_sign_fails(inst)) continue;
    const auto small = testkit::shrink(inst, broken_sign_fails);
    CHECK(broken_sign_fails(small));
    CHECK(small.l.size() <= 4);
    CHECK(small.p.size() == 2);
    ++shrunk;
  }
  CHECK(shrunk == 10);
}

TEST_CASE("counterexample json") {
  Instance inst;
  inst.l = {{0, 0}, {1, 0}, {0, 1}};
  inst.p = {{2, 2}, {3, 3}};
  inst.o = Point{0.25, 0.25};
  inst.params = {4, -1};
  const auto doc = testkit::counterexample_json(inst, "stokes.signed");
  CHECK(doc["property"] == "stokes.signed");
  CHECK(doc["closed"] == true);
  CHECK(doc["points"].size() == 3);
  CHECK(doc["p"]["points"].size() == 2);
  CHECK(doc["point"][0] == 0.25);
  CHECK(doc["params"][1] == -1);
  // the document is itself a readable polyline
  CHECK(std::holds_alternative<ClosedPolyline>(polyline_from_json(doc)));
}

TEST_CASE("verify suites") {
  CHECK(verify::parse_suite("all") == verify::Suite::all);
  CHECK(verify::parse_suite("stokes") == verify::Suite::stokes);
  CHECK_FALSE(verify::parse_suite("nope"));
  for (auto s : {verify::Suite::angles, verify::Suite::winding, verify::Suite::stokes, verify::Suite::boundary,
                 verify::Suite::regions}) {
    CHECK(verify::parse_suite(verify::suite_name(s)) == s);
    CHECK_FALSE(verify::properties(s).empty());
  }
  std::size_t parts = 0;
  for (auto s : {verify::Suite::angles, verify::Suite::winding, verify::Suite::stokes, verify::Suite::boundary,
                 verify::Suite::regions})
    parts += verify::properties(s).size();
  CHECK(verify::properties(verify::Suite::all).size() == parts);
}

TEST_CASE("verify reports are deterministic") {
  const auto dir = (std::filesystem::temp_directory_path() / "winding_verify_det").string();
  const auto a = verify::run(verify::Suite::all, 20, 9, dir).format();
  const auto b = verify::run(verify::Suite::all, 20, 9, dir).format();
  CHECK(a == b);
  CHECK(a.find("failed=0") != std::string::npos);
  const auto zero = verify::run(verify::Suite::all, 0, 9, dir);
  CHECK(zero.all_passed());
  CHECK(zero.results.front().cases == 0);
}

TEST_CASE("a failing property is shrunk and written out") {
  const auto dir = std::filesystem::temp_directory_path() / "winding_verify_fail";
  std::filesystem::remove_all(dir);
  verify::Property broken{"stokes.broken_sign", verify::Suite::stokes,
                          [](Rng& rng) {
                            GenConfig cfg;
                            cfg.coord_range = 1000;
                            const auto [l, p] = testkit::gen_general_position_pair(rng, cfg);
                            Instance inst;
                            inst.l.assign(l.points().begin(), l.points().end());
                            inst.p.assign(p.points().begin(), p.points().end());
                            return inst;
                          },
                          [](const Instance& inst) { return !broken_sign_fails(inst); }};
  const auto result = verify::run_property(broken, 200, 1, dir.string());
  CHECK(result.failures > 0);
  REQUIRE_FALSE(result.counterexample_path.empty());
  std::ifstream in(result.counterexample_path);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["property"] == "stokes.broken_sign");
  CHECK(doc["points"].size() <= 4);
  verify::Report report{{result}};
  CHECK_FALSE(report.all_passed());
  CHECK(report.format().find("FAIL stokes.broken_sign") != std::string::npos);
}
