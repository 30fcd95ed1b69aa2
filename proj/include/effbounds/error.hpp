#pragma once

#include <stdexcept>
#include <string>

namespace effbounds {

enum class errc {
  order_violation,
  indeterminate_order,
  capacity_exceeded,
  depth_exceeds_value,
  invalid_params,
  invalid_magnitude,
  invalid_betas,
  in_light_source,
  zero_vector,
  ambiguous_curve,
  no_curve,
  degenerate_subsystem,
  image_is_point,
  perturbation_rejected,
  shape_mismatch,
  inner_params_invalid,
  nonpositive_genus,
};

// CamelCase tag used in messages and machine-readable output.
const char* errc_name(errc code) noexcept;

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail);
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace effbounds
