#pragma once

#include <stdexcept>
#include <string>

namespace eqbif {

enum class ErrorCode {
  invalid_argument,
  length_mismatch,
  signature_violation,
  out_of_range,
  step_underflow,
  non_finite_state,
  unresolved_bracket,
  insufficient_scan,
  cluster_ambiguity,
  closed_form_regime,
  scan_bound_too_small,
  parse_error,
  internal,
};

const char* to_string(ErrorCode code) noexcept;

/// Domain error raised by every module. The code identifies the failure class;
/// the message carries the diagnostic context.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eqbif
