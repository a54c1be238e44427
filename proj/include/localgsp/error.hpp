#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace localgsp {

// Error conditions raised by the library. The CLI maps validation-type codes
// to exit status 3 and everything else to 1.
enum class Errc {
  self_loop,
  node_out_of_range,
  duplicate_edge,
  weight_count_mismatch,
  negative_weight,
  signal_length_mismatch,
  non_finite_value,
  missing_weights,
  missing_signal,
  dimension_mismatch,
  kind_mismatch,
  ball_too_shallow,
  size_cap_exceeded,
  empty_distribution,
  depth_mismatch,
  invalid_parameter,
  non_symmetric,
  map_not_total,
  degree_bound_violation,
  signal_bound_violation,
  parse_error,
  io_error,
  infeasible,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace localgsp
