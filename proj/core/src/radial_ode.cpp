#include "eqbif/radial_ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "eqbif/error.hpp"

namespace eqbif {

namespace {

struct State {
  double T = 0.0;
  double dT = 0.0;
};

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State out = y;
  for (const auto& [a, k] : terms) {
    out.T += h * a * k->T;
    out.dT += h * a * k->dT;
  }
  return out;
}

class RadialField {
 public:
  RadialField(const RadialProblem& p, double lambda)
      : n1_(static_cast<double>(p.n - 1)), beta_(p.beta()), lambda_(lambda) {}

  State operator()(double t, const State& y) const {
    const double s = std::sin(t);
    const double c = std::cos(t);
    return {y.dT, -n1_ * (c / s) * y.dT - (lambda_ - beta_ / (s * s)) * y.T};
  }

 private:
  double n1_;
  double beta_;
  double lambda_;
};

std::string describe(const RadialProblem& p, double lambda, double t) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "(n=%d, m=%d, lambda=%.17g, t=%.17g)", p.n, p.m, lambda, t);
  return buf;
}

void require_problem(const RadialProblem& p, const Tolerances& tol) {
  if (p.n < 2 || p.m < 0) {
    throw Error(ErrorCode::invalid_argument, "radial problem needs n >= 2 and m >= 0");
  }
  if (!(p.gamma > 10.0 * tol.series_start) || !(p.gamma < std::numbers::pi)) {
    throw Error(ErrorCode::invalid_argument,
                "ball radius must lie in (0, pi) and above the series start, got " +
                    std::to_string(p.gamma));
  }
}

// Dormand-Prince 5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

std::string Tolerances::signature() const {
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "t0=%.3g;abs=%.3g;rel=%.3g;renorm=%.3g;scan0=%.3g;step=%.3g;frac=%.3g;"
                "bisect=%.3g;cluster=%.3g;ambig=%.3g;root=%.3g",
                series_start, ode_abs, ode_rel, renormalize_above, scan_start, scan_step_max,
                scan_step_fraction, bisection_rel, cluster_rel, ambiguity_rel, root_value);
  return buf;
}

ShootResult radial_shoot_detailed(const RadialProblem& problem, double lambda,
                                  const Tolerances& tol) {
  require_problem(problem, tol);
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::invalid_argument, "lambda must be positive and finite");
  }
  const RadialField f(problem, lambda);
  const double n = problem.n;
  const double m = problem.m;

  // Frobenius start T = t^m (1 + c t^2), divided through by t0^m.
  const double t0 = tol.series_start;
  const double c = (((n - 1.0) * m + problem.beta()) / 3.0 - lambda) / (2.0 * (2.0 * m + n));
  State y{1.0 + c * t0 * t0, m / t0 + (m + 2.0) * c * t0};

  const double gamma = problem.gamma;
  const double h_max = std::min(0.1, 0.5 / std::sqrt(lambda));
  double t = t0;
  double h = 1e-2 * t0;
  int last_sign = 1;
  ShootResult result;

  State k1 = f(t, y);
  while (t < gamma) {
    if (t + h > gamma) h = gamma - t;
    if (h < 1e-15 * std::max(1.0, t)) {
      throw Error(ErrorCode::step_underflow, "step size underflow " + describe(problem, lambda, t));
    }
    const State k2 = f(t + c2 * h, axpy(y, h, {{a21, &k1}}));
    const State k3 = f(t + c3 * h, axpy(y, h, {{a31, &k1}, {a32, &k2}}));
    const State k4 = f(t + c4 * h, axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 = f(t + c5 * h, axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 =
        f(t + h, axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const State y_new = axpy(y, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const State k7 = f(t + h, y_new);

    const State err = axpy(State{}, h, {{e1, &k1}, {e3, &k3}, {e4, &k4}, {e5, &k5}, {e6, &k6}, {e7, &k7}});
    const double sT = tol.ode_abs + tol.ode_rel * std::max(std::abs(y.T), std::abs(y_new.T));
    const double sD = tol.ode_abs + tol.ode_rel * std::max(std::abs(y.dT), std::abs(y_new.dT));
    const double norm = std::sqrt(0.5 * ((err.T / sT) * (err.T / sT) + (err.dT / sD) * (err.dT / sD)));

    if (!std::isfinite(norm) || !std::isfinite(y_new.T) || !std::isfinite(y_new.dT)) {
      throw Error(ErrorCode::non_finite_state, "non-finite state " + describe(problem, lambda, t));
    }

    if (norm <= 1.0) {
      t = (h == gamma - t) ? gamma : t + h;
      y = y_new;
      k1 = k7;
      ++result.steps;
      if (y.T != 0.0) {
        const int s = y.T > 0.0 ? 1 : -1;
        if (s != last_sign) {
          ++result.sign_changes;
          last_sign = s;
        }
      }
      const double scale = std::max(std::abs(y.T), std::abs(y.dT));
      if (scale > tol.renormalize_above || scale < 1.0 / tol.renormalize_above) {
        y.T /= scale;
        y.dT /= scale;
        k1.T /= scale;
        k1.dT /= scale;
      }
    }
    const double factor = norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, 5.0);
    h = std::min(h * factor, h_max);
  }

  const double amplitude = std::hypot(y.T, y.dT / std::sqrt(lambda));
  result.value = amplitude == 0.0 ? 0.0 : y.T / amplitude;
  return result;
}

double radial_shoot(const RadialProblem& problem, double lambda, const Tolerances& tol) {
  return radial_shoot_detailed(problem, lambda, tol).value;
}

std::vector<double> mode_eigenvalues(const RadialProblem& problem, double lambda_max,
                                     const Tolerances& tol) {
  require_problem(problem, tol);
  if (!(lambda_max > 0.0) || !std::isfinite(lambda_max)) {
    throw Error(ErrorCode::invalid_argument, "lambda_max must be positive and finite");
  }
  // Roots within the bisection tolerance of lambda_max are kept.
  const double upper = lambda_max * (1.0 + 4.0 * tol.bisection_rel);

  double lo = std::min(tol.scan_start, 0.5 * lambda_max);
  int count_lo = radial_shoot_detailed(problem, lo, tol).sign_changes;
  if (count_lo != 0) {
    throw Error(ErrorCode::unresolved_bracket,
                "eigenvalue below the scan start " + describe(problem, lo, problem.gamma) +
                    "; lower Tolerances::scan_start");
  }

  std::vector<double> roots;
  while (lo < upper) {
    const double hi = std::min(lo + std::min(tol.scan_step_max, lo * tol.scan_step_fraction), upper);
    const int count_hi = radial_shoot_detailed(problem, hi, tol).sign_changes;
    const int found = count_hi - count_lo;
    if (found < 0) {
      throw Error(ErrorCode::internal,
                  "sign-change count decreased between lambda=" + std::to_string(lo) +
                      " and lambda=" + std::to_string(hi) + " for mode " + std::to_string(problem.m));
    }
    if (found > 1) {
      throw Error(ErrorCode::unresolved_bracket,
                  std::to_string(found) + " roots in one scan cell " + describe(problem, lo, problem.gamma) +
                      " to lambda=" + std::to_string(hi) + "; refine the scan grid");
    }
    if (found == 1) {
      double a = lo;
      double b = hi;
      while (b - a > tol.bisection_rel * b) {
        const double mid = 0.5 * (a + b);
        const int c = radial_shoot_detailed(problem, mid, tol).sign_changes;
        if (c <= count_lo) {
          a = mid;
        } else if (c == count_lo + 1) {
          b = mid;
        } else {
          throw Error(ErrorCode::unresolved_bracket,
                      "bisection met a second root near " + describe(problem, mid, problem.gamma));
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    lo = hi;
    count_lo = count_hi;
  }
  return roots;
}

}  // namespace eqbif
