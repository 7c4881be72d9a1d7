#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace winding {

enum class ErrorKind {
  invalid_input,
  degenerate_point,
  non_generic_intersection,
  endpoint_mismatch,
  point_on_line,
  integrality_violation,
  fan_blocked,
  degenerate_input,
  general_position_violation,
  endpoint_on_line,
  boundary_point,
  generation_exhausted,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace winding
