#include "eqbif/error.hpp"

namespace eqbif {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::length_mismatch: return "length_mismatch";
    case ErrorCode::signature_violation: return "signature_violation";
    case ErrorCode::out_of_range: return "out_of_range";
    case ErrorCode::step_underflow: return "step_underflow";
    case ErrorCode::non_finite_state: return "non_finite_state";
    case ErrorCode::unresolved_bracket: return "unresolved_bracket";
    case ErrorCode::insufficient_scan: return "insufficient_scan";
    case ErrorCode::cluster_ambiguity: return "cluster_ambiguity";
    case ErrorCode::closed_form_regime: return "closed_form_regime";
    case ErrorCode::scan_bound_too_small: return "scan_bound_too_small";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

}  // namespace eqbif
