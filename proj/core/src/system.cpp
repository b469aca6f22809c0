#include "eqbif/system.hpp"

#include <cstdio>
#include <numbers>

#include "eqbif/error.hpp"

namespace eqbif {

namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

BallRadius BallRadius::radians(double gamma) {
  if (!(gamma > 0.0) || !(gamma < std::numbers::pi)) {
    throw Error(ErrorCode::invalid_argument,
                "ball radius must lie in (0, pi), got " + fmt_double(gamma));
  }
  return BallRadius(false, gamma);
}

double BallRadius::value() const noexcept {
  return hemisphere_ ? std::numbers::pi / 2 : gamma_;
}

std::string BallRadius::label() const {
  return hemisphere_ ? std::string("hemisphere") : fmt_double(gamma_);
}

const char* to_string(Sign sign) noexcept {
  return sign == Sign::positive ? "positive" : "negative";
}

}  // namespace eqbif
