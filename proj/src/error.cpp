#include "effbounds/error.hpp"

namespace effbounds {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::order_violation: return "OrderViolation";
    case errc::indeterminate_order: return "IndeterminateOrder";
    case errc::capacity_exceeded: return "CapacityExceeded";
    case errc::depth_exceeds_value: return "DepthExceedsValue";
    case errc::invalid_params: return "InvalidParams";
    case errc::invalid_magnitude: return "InvalidMagnitude";
    case errc::invalid_betas: return "InvalidBetas";
    case errc::in_light_source: return "InLightSource";
    case errc::zero_vector: return "ZeroVector";
    case errc::ambiguous_curve: return "AmbiguousCurve";
    case errc::no_curve: return "NoCurve";
    case errc::degenerate_subsystem: return "DegenerateSubsystem";
    case errc::image_is_point: return "ImageIsPoint";
    case errc::perturbation_rejected: return "PerturbationRejected";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::inner_params_invalid: return "InnerParamsInvalid";
    case errc::nonpositive_genus: return "NonpositiveGenus";
  }
  return "Unknown";
}

error::error(errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

}  // namespace effbounds
