#pragma once

#include <string>

namespace eqbif {

/// Radius of the geodesic ball. The hemisphere is a distinct token so that
/// the exact path is never chosen by a floating-point comparison.
class BallRadius {
 public:
  static BallRadius hemisphere() { return BallRadius(true, 0.0); }
  /// Throws Error(invalid_argument) unless 0 < gamma < pi.
  static BallRadius radians(double gamma);

  bool is_hemisphere() const noexcept { return hemisphere_; }
  /// Radius in radians; pi/2 for the hemisphere token.
  double value() const noexcept;
  /// "hemisphere" or the radius in shortest round-trip decimal form.
  std::string label() const;

  friend bool operator==(const BallRadius&, const BallRadius&) = default;

 private:
  BallRadius(bool hemisphere, double gamma) : hemisphere_(hemisphere), gamma_(gamma) {}

  bool hemisphere_ = true;
  double gamma_ = 0.0;
};

enum class Sign { positive, negative };

const char* to_string(Sign sign) noexcept;

/// Dimension n of the sphere, ball radius, and signature (p-, p+) of the
/// diagonal coefficient matrix.
struct SystemConfig {
  int n = 2;
  BallRadius radius = BallRadius::hemisphere();
  unsigned p_minus = 0;
  unsigned p_plus = 0;

  /// p- for the positive branch, p+ for the negative one.
  unsigned count_for(Sign sign) const { return sign == Sign::positive ? p_minus : p_plus; }

  friend bool operator==(const SystemConfig&, const SystemConfig&) = default;
};

}  // namespace eqbif
