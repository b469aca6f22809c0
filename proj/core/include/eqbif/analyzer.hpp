#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqbif/euler_ring.hpp"
#include "eqbif/radial_ode.hpp"
#include "eqbif/spectrum.hpp"
#include "eqbif/system.hpp"

namespace eqbif {

enum class CertificateKind { unbounded, necessary_conditions, symmetry_breaking, alternative_sum };
enum class Verdict { proved, refuted, hypothesis_not_met, inconclusive };

const char* to_string(CertificateKind kind) noexcept;
const char* to_string(Verdict verdict) noexcept;

/// Process exit code for a verdict: 0 proved, 2 hypothesis not met,
/// 3 inconclusive. A refutation never leaves the analyzer as a verdict.
int exit_code(Verdict verdict) noexcept;

struct Evidence {
  SignedEigenvalue point;
  EulerElement index;

  friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct Condition {
  std::string statement;
  std::string status;  // "satisfied", "violated" or "required"

  friend bool operator==(const Condition&, const Condition&) = default;
};

/// Inputs that, together with `config` and `tolerances`, reproduce a
/// certificate.
struct CertificateParameters {
  std::size_t m0 = 0;
  Sign sign = Sign::positive;
  std::size_t scan_bound = 0;
  std::uint64_t subset_budget = 0;
  std::optional<double> lambda_max;
  std::vector<SignedEigenvalue> candidates;

  friend bool operator==(const CertificateParameters&, const CertificateParameters&) = default;
};

struct Certificate {
  CertificateKind kind = CertificateKind::unbounded;
  SystemConfig config;
  CertificateParameters parameters;
  std::vector<SignedEigenvalue> subject;
  std::vector<Evidence> evidence;
  std::optional<EulerElement> sum;
  Verdict verdict = Verdict::inconclusive;
  std::vector<std::string> reasoning;
  std::vector<Condition> conditions;
  std::uint64_t subsets_enumerated = 0;
  std::uint64_t structural_cases = 0;
  Tolerances tolerances;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct AlternativeSum {
  EulerElement sum;
  bool is_theta = true;
  std::vector<Evidence> evidence;
};

/// Sum of the SO(2)-bifurcation indices over `candidates`.
/// Throws Error(invalid_argument) when a candidate is not in the signed
/// candidate set of `config`.
AlternativeSum alternative_sum(std::span<const SignedEigenvalue> candidates,
                               const SystemConfig& config,
                               std::span<const EigenvalueRecord> spectrum);

/// Certificate wrapper around alternative_sum: proved when the sum is not
/// Theta (the set cannot close a bounded continuum), inconclusive otherwise.
Certificate certify_alternative(std::span<const SignedEigenvalue> candidates,
                                const SystemConfig& config,
                                std::span<const EigenvalueRecord> spectrum,
                                std::optional<double> lambda_max = std::nullopt);

/// Top-coordinate test on the hemisphere: for a subset whose largest mode is
/// M >= 2 only +-lambda_M reach coordinate M - 1, so a nonzero value there
/// decides "sum != Theta". For M = 1 the whole sum lives in coordinate 0 and
/// the answer is exact. Returns nullopt when the test does not decide.
std::optional<bool> structural_sum_nonzero(std::span<const SignedEigenvalue> subset,
                                           const SystemConfig& config,
                                           std::span<const EigenvalueRecord> spectrum);

/// Hemisphere only. Shows that no finite subset of the candidate set up to
/// lambda_{scan_bound} containing +-lambda_{m0} has index sum Theta.
/// Brute-force enumeration runs when the subset count fits `subset_budget`;
/// the top-coordinate argument always runs and must cover every subset.
Certificate certify_unbounded(const SystemConfig& config, std::size_t m0, Sign sign,
                              std::size_t scan_bound,
                              std::uint64_t subset_budget = std::uint64_t{1} << 20);

/// Necessary conditions for a bounded continuum at +-lambda_{m0} when the
/// same-side count p-/p+ is even and positive.
Certificate bounded_necessary(const SystemConfig& config,
                              std::span<const EigenvalueRecord> spectrum, std::size_t m0,
                              Sign sign, std::optional<double> lambda_max = std::nullopt);

/// Global symmetry breaking at +-lambda_{m0}: proved when mode 0 does not
/// contribute to the eigenspace (its SO(n)-fixed part is then zero).
Certificate symmetry_breaking(const SystemConfig& config,
                              std::span<const EigenvalueRecord> spectrum, std::size_t m0,
                              Sign sign, std::optional<double> lambda_max = std::nullopt);

/// Recomputes a certificate from its config, parameters and tolerances and
/// compares the result field by field.
bool verify_certificate(const Certificate& certificate);

}  // namespace eqbif
