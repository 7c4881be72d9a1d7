#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "winding/random.hpp"
#include "winding/testkit.hpp"

namespace winding::verify {

enum class Suite { all, angles, winding, stokes, boundary, regions };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

// One executable property. `generate` draws a case from a per-case stream;
// `holds` checks it and may throw when the case violates a precondition.
struct Property {
  std::string id;
  Suite suite;
  std::function<testkit::Instance(Rng&)> generate;
  std::function<bool(const testkit::Instance&)> holds;
};

std::vector<Property> properties(Suite suite);

struct PropertyResult {
  std::string id;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string counterexample_path;  // empty when the property passed
  std::string first_error;
};

struct Report {
  std::vector<PropertyResult> results;

  bool all_passed() const;
  // Deterministic text: one line per property plus a summary line.
  std::string format() const;
};

// Case i of property `id` uses Rng(seed).split(id).split(i), so results do
// not depend on execution order. Failing properties get their first failing
// case shrunk and written to <counterexample_dir>/<id>.json.
PropertyResult run_property(const Property& prop, std::int64_t n, std::uint64_t seed,
                            const std::string& counterexample_dir);
Report run(Suite suite, std::int64_t n, std::uint64_t seed, const std::string& counterexample_dir);

}  // namespace winding::verify
