#include "eqbif/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "eqbif/combinatorics.hpp"
#include "eqbif/error.hpp"

namespace eqbif {

namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

SO2Rep eigenspace_of(int n, const std::vector<int>& modes) {
  SO2Rep rep;
  for (int m : modes) rep += so2_decompose(n, m);
  return rep;
}

}  // namespace

std::string SignedEigenvalue::label() const {
  return (sign == Sign::positive ? "+" : "-") + std::to_string(index);
}

std::vector<EigenvalueRecord> hemisphere_spectrum(int n, int m_max) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "hemisphere spectrum needs n >= 2");
  if (m_max < 1) throw Error(ErrorCode::invalid_argument, "hemisphere spectrum needs m_max >= 1");

  std::vector<EigenvalueRecord> records;
  records.reserve(static_cast<std::size_t>(m_max));
  std::uint64_t nu = 0;
  for (int m = 1; m <= m_max; ++m) {
    EigenvalueRecord rec;
    const std::int64_t lambda = static_cast<std::int64_t>(m) * (n + m - 1);
    rec.lambda_exact = lambda;
    rec.lambda = static_cast<double>(lambda);
    // Modes l <= m - 1 with m - 1 - l even.
    for (int l = (m - 1) % 2; l <= m - 1; l += 2) rec.gamma_set.push_back(l);
    rec.eigenspace = eigenspace_of(n, rec.gamma_set);
    rec.mu = to_u64(binomial(static_cast<std::uint64_t>(n + m - 2), static_cast<std::uint64_t>(n - 1)));
    if (rec.mu != rec.eigenspace.dimension()) {
      throw Error(ErrorCode::internal,
                  "hemisphere multiplicity " + std::to_string(rec.mu) + " differs from eigenspace dimension " +
                      std::to_string(rec.eigenspace.dimension()));
    }
    nu += rec.mu;
    rec.nu = nu;
    records.push_back(std::move(rec));
  }
  return records;
}

Spectrum assemble_spectrum(int n, BallRadius radius, double lambda_max,
                           std::optional<int> m_scan_max, const Tolerances& tol) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "spectrum needs n >= 2");
  if (!(lambda_max > 0.0) || !std::isfinite(lambda_max)) {
    throw Error(ErrorCode::invalid_argument, "lambda_max must be positive and finite");
  }
  Spectrum out;
  out.n = n;
  out.radius = radius;
  out.lambda_max = lambda_max;
  out.tolerances = tol;

  if (radius.is_hemisphere()) {
    int m_max = 0;
    while (static_cast<double>(m_max + 1) * (n + m_max) <= lambda_max) ++m_max;
    if (m_max >= 1) out.records = hemisphere_spectrum(n, m_max);
    for (const auto& rec : out.records) out.top_mode = std::max(out.top_mode, rec.gamma_set.back());
    return out;
  }

  struct Root {
    double lambda;
    int mode;
  };
  std::vector<Root> roots;
  double previous_first = 0.0;
  for (int m = 0;; ++m) {
    RadialProblem problem{n, m, radius.value()};
    if (m_scan_max && m > *m_scan_max) {
      const double upper = lambda_max * (1.0 + 4.0 * tol.bisection_rel);
      if (radial_shoot_detailed(problem, upper, tol).sign_changes != 0) {
        throw Error(ErrorCode::insufficient_scan,
                    "mode " + std::to_string(m) + " still has eigenvalues below lambda_max; raise m_scan_max above " +
                        std::to_string(*m_scan_max));
      }
      break;
    }
    const std::vector<double> mode_roots = mode_eigenvalues(problem, lambda_max, tol);
    if (mode_roots.empty()) break;
    if (mode_roots.front() <= previous_first) {
      throw Error(ErrorCode::internal, "first eigenvalue of mode " + std::to_string(m) +
                                           " does not exceed that of mode " + std::to_string(m - 1));
    }
    previous_first = mode_roots.front();
    for (double r : mode_roots) roots.push_back({r, m});
    out.top_mode = m;
  }

  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    return a.lambda < b.lambda || (a.lambda == b.lambda && a.mode < b.mode);
  });

  // Clusters of numerically coincident roots become one record.
  std::vector<std::vector<Root>> clusters;
  for (const Root& r : roots) {
    if (!clusters.empty() && r.lambda - clusters.back().front().lambda <= tol.cluster_rel * r.lambda) {
      clusters.back().push_back(r);
    } else {
      clusters.push_back({r});
    }
  }

  std::uint64_t nu = 0;
  for (std::size_t j = 0; j < clusters.size(); ++j) {
    const auto& cluster = clusters[j];
    if (j + 1 < clusters.size()) {
      const double gap = clusters[j + 1].front().lambda - cluster.back().lambda;
      if (gap < tol.ambiguity_rel * clusters[j + 1].front().lambda) {
        throw Error(ErrorCode::cluster_ambiguity,
                    "eigenvalues " + fmt_double(cluster.back().lambda) + " and " +
                        fmt_double(clusters[j + 1].front().lambda) +
                        " are too close to decide between one or two eigenvalues");
      }
    }
    EigenvalueRecord rec;
    double sum = 0.0;
    for (const Root& r : cluster) {
      sum += r.lambda;
      if (std::find(rec.gamma_set.begin(), rec.gamma_set.end(), r.mode) != rec.gamma_set.end()) {
        throw Error(ErrorCode::cluster_ambiguity,
                    "mode " + std::to_string(r.mode) + " contributes twice near lambda=" + fmt_double(r.lambda));
      }
      rec.gamma_set.push_back(r.mode);
    }
    std::sort(rec.gamma_set.begin(), rec.gamma_set.end());
    rec.lambda = sum / static_cast<double>(cluster.size());
    rec.eigenspace = eigenspace_of(n, rec.gamma_set);
    rec.mu = rec.eigenspace.dimension();
    nu += rec.mu;
    rec.nu = nu;
    if (rec.gamma_set.size() > 1) {
      std::string modes;
      for (int m : rec.gamma_set) modes += (modes.empty() ? "" : ",") + std::to_string(m);
      out.notes.push_back("coincident modes {" + modes + "} at lambda=" + fmt_double(rec.lambda));
    }
    out.records.push_back(std::move(rec));
  }
  return out;
}

std::vector<std::string> cross_validate_hemisphere(int n, double lambda_max, const Tolerances& tol) {
  std::vector<std::string> issues;
  const Spectrum numeric =
      assemble_spectrum(n, BallRadius::radians(std::numbers::pi / 2), lambda_max, std::nullopt, tol);
  const Spectrum exact = assemble_spectrum(n, BallRadius::hemisphere(), lambda_max, std::nullopt, tol);
  if (numeric.records.size() != exact.records.size()) {
    issues.push_back("record count " + std::to_string(numeric.records.size()) + " vs exact " +
                     std::to_string(exact.records.size()));
    return issues;
  }
  for (std::size_t j = 0; j < exact.records.size(); ++j) {
    const auto& a = numeric.records[j];
    const auto& b = exact.records[j];
    const std::string at = "record " + std::to_string(j + 1) + ": ";
    if (std::abs(a.lambda - b.lambda) > 1e-6 * b.lambda) {
      issues.push_back(at + "lambda " + fmt_double(a.lambda) + " vs " + fmt_double(b.lambda));
    }
    if (a.gamma_set != b.gamma_set) issues.push_back(at + "mode sets differ");
    if (a.eigenspace != b.eigenspace) issues.push_back(at + "eigenspaces differ");
    if (a.mu != b.mu || a.nu != b.nu) issues.push_back(at + "multiplicities differ");
  }
  return issues;
}

std::vector<SignedEigenvalue> signed_candidate_set(std::span<const EigenvalueRecord> spectrum,
                                                   unsigned p_minus, unsigned p_plus) {
  if (p_minus == 0 && p_plus == 0) {
    throw Error(ErrorCode::signature_violation, "signature needs p- + p+ >= 1");
  }
  std::vector<SignedEigenvalue> out;
  if (p_plus > 0) {
    for (std::size_t j = spectrum.size(); j-- > 0;) {
      out.push_back({Sign::negative, j + 1, -spectrum[j].lambda});
    }
  }
  if (p_minus > 0) {
    for (std::size_t j = 0; j < spectrum.size(); ++j) {
      out.push_back({Sign::positive, j + 1, spectrum[j].lambda});
    }
  }
  return out;
}

}  // namespace eqbif
