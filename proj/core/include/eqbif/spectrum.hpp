#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqbif/radial_ode.hpp"
#include "eqbif/so2_rep.hpp"
#include "eqbif/system.hpp"

namespace eqbif {

/// One Dirichlet eigenvalue of -Laplace-Beltrami on B(gamma).
struct EigenvalueRecord {
  double lambda = 0.0;
  std::optional<std::int64_t> lambda_exact;  // set on the hemisphere path
  std::vector<int> gamma_set;                // modes m with lambda in A_m, increasing
  SO2Rep eigenspace;                         // SO(2)-decomposition of the eigenspace
  std::uint64_t mu = 0;                      // dim of the eigenspace
  std::uint64_t nu = 0;                      // mu_1 + ... + mu of this record

  friend bool operator==(const EigenvalueRecord&, const EigenvalueRecord&) = default;
};

/// Eigenvalues lambda_m = m (n + m - 1), m = 1..m_max, of the hemisphere with
/// eigenspaces H_{m-1} + H_{m-3} + ... (down to H_0 or H_1). Exact.
/// Throws Error(invalid_argument) for n < 2 or m_max < 1.
std::vector<EigenvalueRecord> hemisphere_spectrum(int n, int m_max);

struct Spectrum {
  int n = 2;
  BallRadius radius = BallRadius::hemisphere();
  double lambda_max = 0.0;
  Tolerances tolerances;
  std::vector<EigenvalueRecord> records;
  /// Highest mode that contributed a root (-1 when none did).
  int top_mode = -1;
  /// Diagnostics, e.g. coincident modes off the hemisphere.
  std::vector<std::string> notes;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Eigenvalue records of B(gamma) in (0, lambda_max].
///
/// The hemisphere token takes the exact path. Otherwise each mode is scanned
/// with mode_eigenvalues until a mode has no root below lambda_max (or up to
/// `m_scan_max`, which is then verified to be sufficient); roots of different
/// modes are merged into one record when they agree to tol.cluster_rel.
/// Errors: Error(insufficient_scan), Error(cluster_ambiguity).
Spectrum assemble_spectrum(int n, BallRadius radius, double lambda_max,
                           std::optional<int> m_scan_max = std::nullopt,
                           const Tolerances& tol = {});

/// Runs the numeric path at gamma = pi/2 and compares it with the exact
/// hemisphere records. Returns a list of disagreements (empty on success).
std::vector<std::string> cross_validate_hemisphere(int n, double lambda_max,
                                                   const Tolerances& tol = {});

/// A point of the signed candidate set: +lambda_index or -lambda_index.
struct SignedEigenvalue {
  Sign sign = Sign::positive;
  std::size_t index = 1;  // 1-based position in the spectrum
  double value = 0.0;     // signed

  std::string label() const;  // "+3" / "-3"

  friend bool operator==(const SignedEigenvalue&, const SignedEigenvalue&) = default;
};

/// Candidates for bifurcation among the given records, increasing by value:
/// positive eigenvalues when p- > 0, their negatives when p+ > 0.
/// Throws Error(signature_violation) when p- = p+ = 0.
std::vector<SignedEigenvalue> signed_candidate_set(std::span<const EigenvalueRecord> spectrum,
                                                   unsigned p_minus, unsigned p_plus);

}  // namespace eqbif
