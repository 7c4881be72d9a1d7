#include "winding/errors.hpp"

namespace winding {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "InvalidInput";
    case ErrorKind::degenerate_point: return "DegeneratePoint";
    case ErrorKind::non_generic_intersection: return "NonGenericIntersection";
    case ErrorKind::endpoint_mismatch: return "EndpointMismatch";
    case ErrorKind::point_on_line: return "PointOnLine";
    case ErrorKind::integrality_violation: return "IntegralityViolation";
    case ErrorKind::fan_blocked: return "FanBlocked";
    case ErrorKind::degenerate_input: return "DegenerateInput";
    case ErrorKind::general_position_violation: return "GeneralPositionViolation";
    case ErrorKind::endpoint_on_line: return "EndpointOnLine";
    case ErrorKind::boundary_point: return "BoundaryPoint";
    case ErrorKind::generation_exhausted: return "GenerationExhausted";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace winding
