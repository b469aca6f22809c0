#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace eqbif {

/// Numerical tolerances of the radial shooting solver and of the spectrum
/// assembly. The signature string identifies a tolerance set in caches and
/// certificates.
struct Tolerances {
  double series_start = 1e-6;       // t0 of the Frobenius start
  double ode_abs = 1e-10;
  double ode_rel = 1e-10;
  double renormalize_above = 1e8;   // rescale (T, T') when its norm exceeds this
  double scan_start = 1e-3;         // first lambda of the bracketing grid
  double scan_step_max = 1.0;       // grid step is min(scan_step_max, lambda * scan_step_fraction)
  double scan_step_fraction = 0.125;
  double bisection_rel = 1e-9;
  double cluster_rel = 1e-6;
  double ambiguity_rel = 1e-5;
  double root_value = 1e-6;         // |radial_shoot| below this counts as a root

  std::string signature() const;

  friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

/// Radial part of the Dirichlet problem for -Laplace-Beltrami on a geodesic
/// ball B(gamma) of S^n, restricted to spherical-harmonic mode m:
///   T'' + (n-1) cot(t) T' + (lambda - beta_m / sin^2 t) T = 0,
///   beta_m = m (m + n - 2),  T regular at t = 0.
struct RadialProblem {
  int n = 2;
  int m = 0;
  double gamma = 0.0;

  double beta() const { return static_cast<double>(m) * static_cast<double>(m + n - 2); }
};

struct ShootResult {
  /// T(gamma) / |(T(gamma), T'(gamma) / sqrt(lambda))|; its sign is the sign
  /// of T_m(lambda, gamma) for the solution that is positive near t = 0.
  double value = 0.0;
  /// Sign changes of T on (0, gamma]; equals the number of mode-m Dirichlet
  /// eigenvalues below lambda.
  int sign_changes = 0;
  std::size_t steps = 0;
};

/// Integrates the regular solution T ~ t^m (1 + c t^2) from t0 to gamma with
/// an adaptive Dormand-Prince 5(4) pair.
/// Throws Error(step_underflow) or Error(non_finite_state) with (m, lambda, t).
ShootResult radial_shoot_detailed(const RadialProblem& problem, double lambda,
                                  const Tolerances& tol = {});

double radial_shoot(const RadialProblem& problem, double lambda, const Tolerances& tol = {});

/// All mode-m Dirichlet eigenvalues in (0, lambda_max], increasing.
///
/// Roots are bracketed on the scan grid by the sign-change counter and refined
/// by bisection. A grid cell holding more than one root raises
/// Error(unresolved_bracket).
std::vector<double> mode_eigenvalues(const RadialProblem& problem, double lambda_max,
                                     const Tolerances& tol = {});

}  // namespace eqbif
