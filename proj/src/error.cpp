#include "localgsp/error.hpp"

namespace localgsp {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::self_loop: return "self_loop";
    case Errc::node_out_of_range: return "node_out_of_range";
    case Errc::duplicate_edge: return "duplicate_edge";
    case Errc::weight_count_mismatch: return "weight_count_mismatch";
    case Errc::negative_weight: return "negative_weight";
    case Errc::signal_length_mismatch: return "signal_length_mismatch";
    case Errc::non_finite_value: return "non_finite_value";
    case Errc::missing_weights: return "missing_weights";
    case Errc::missing_signal: return "missing_signal";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::kind_mismatch: return "kind_mismatch";
    case Errc::ball_too_shallow: return "ball_too_shallow";
    case Errc::size_cap_exceeded: return "size_cap_exceeded";
    case Errc::empty_distribution: return "empty_distribution";
    case Errc::depth_mismatch: return "depth_mismatch";
    case Errc::invalid_parameter: return "invalid_parameter";
    case Errc::non_symmetric: return "non_symmetric";
    case Errc::map_not_total: return "map_not_total";
    case Errc::degree_bound_violation: return "degree_bound_violation";
    case Errc::signal_bound_violation: return "signal_bound_violation";
    case Errc::parse_error: return "parse_error";
    case Errc::io_error: return "io_error";
    case Errc::infeasible: return "infeasible";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

}  // namespace localgsp
