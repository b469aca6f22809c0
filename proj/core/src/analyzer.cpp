#include "eqbif/analyzer.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "eqbif/bifurcation_index.hpp"
#include "eqbif/error.hpp"

namespace eqbif {

const char* to_string(CertificateKind kind) noexcept {
  switch (kind) {
    case CertificateKind::unbounded: return "unbounded";
    case CertificateKind::necessary_conditions: return "necessary_conditions";
    case CertificateKind::symmetry_breaking: return "symmetry_breaking";
    case CertificateKind::alternative_sum: return "alternative_sum";
  }
  return "unknown";
}

const char* to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::proved: return "proved";
    case Verdict::refuted: return "refuted";
    case Verdict::hypothesis_not_met: return "hypothesis_not_met";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

int exit_code(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::proved: return 0;
    case Verdict::hypothesis_not_met: return 2;
    case Verdict::inconclusive: return 3;
    case Verdict::refuted: return 1;
  }
  return 1;
}

namespace {

const char* sign_char(Sign s) { return s == Sign::positive ? "+" : "-"; }
const char* count_name(Sign s) { return s == Sign::positive ? "p-" : "p+"; }
const char* other_count_name(Sign s) { return s == Sign::positive ? "p+" : "p-"; }

std::string lambda_name(Sign s, std::size_t m0) {
  return std::string(sign_char(s)) + "lambda_" + std::to_string(m0);
}

IndexRequest request_for(const SystemConfig& config, std::span<const EigenvalueRecord> spectrum,
                         std::size_t m0, Sign sign) {
  return IndexRequest{spectrum, m0, sign, config.p_minus, config.p_plus};
}

SignedEigenvalue point_for(std::span<const EigenvalueRecord> spectrum, std::size_t m0, Sign sign) {
  const double lambda = spectrum[m0 - 1].lambda;
  return {sign, m0, sign == Sign::positive ? lambda : -lambda};
}

void require_index(std::span<const EigenvalueRecord> spectrum, std::size_t m0) {
  if (m0 < 1 || m0 > spectrum.size()) {
    throw Error(ErrorCode::out_of_range, "m0=" + std::to_string(m0) + " outside the " +
                                             std::to_string(spectrum.size()) + " available eigenvalues");
  }
}

bool has_nontrivial_mode(const EigenvalueRecord& rec) {
  return std::any_of(rec.gamma_set.begin(), rec.gamma_set.end(), [](int m) { return m > 0; });
}

bool has_trivial_mode(const EigenvalueRecord& rec) {
  return std::find(rec.gamma_set.begin(), rec.gamma_set.end(), 0) != rec.gamma_set.end();
}

std::string gamma_string(const EigenvalueRecord& rec) {
  std::string s = "{";
  for (std::size_t i = 0; i < rec.gamma_set.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rec.gamma_set[i]);
  }
  return s + "}";
}

/// Hypothesis of the symmetric alternative at +-lambda_{m0}: the eigenspace is
/// a nontrivial SO(n)-representation or p * dim is odd.
bool alternative_hypothesis(const EigenvalueRecord& rec, unsigned p, std::vector<std::string>& reasoning,
                            std::size_t m0, Sign sign) {
  if (has_nontrivial_mode(rec)) {
    reasoning.push_back("eigenspace of lambda_" + std::to_string(m0) + " has modes " + gamma_string(rec) +
                        " and is a nontrivial SO(n)-representation");
    return true;
  }
  const std::uint64_t product = static_cast<std::uint64_t>(p) * rec.mu;
  if (product % 2 == 1) {
    reasoning.push_back("eigenspace of lambda_" + std::to_string(m0) + " is SO(n)-trivial but " + count_name(sign) +
                        " * dim = " + std::to_string(product) + " is odd");
    return true;
  }
  reasoning.push_back("eigenspace of lambda_" + std::to_string(m0) + " is SO(n)-trivial and " + count_name(sign) +
                      " * dim = " + std::to_string(product) + " is even");
  return false;
}

std::string parity_case(const SystemConfig& c) {
  auto parity = [](unsigned p) { return p % 2 == 0 ? "even" : "odd"; };
  return std::string("parity case: p- ") + parity(c.p_minus) + ", p+ " + parity(c.p_plus);
}

/// Coefficient at coordinate (top weight) of the index at candidate j.
/// Hemisphere only, where the top weight of lambda_j is j - 1.
BigInt top_coefficient(const SystemConfig& config, std::span<const EigenvalueRecord> spectrum,
                       std::size_t j, Sign sign) {
  const ClosedFormIndex cf = index_closed_form(request_for(config, spectrum, j, sign));
  if (!cf.top || cf.top->first != j - 1) {
    throw Error(ErrorCode::internal, "eigenspace of lambda_" + std::to_string(j) + " lacks top weight " +
                                         std::to_string(j - 1));
  }
  return cf.top->second;
}

std::string dump_subset(std::span<const SignedEigenvalue> subset, const EulerElement& sum) {
  std::ostringstream os;
  os << "subset {";
  for (std::size_t i = 0; i < subset.size(); ++i) os << (i ? ", " : "") << subset[i].label();
  os << "} has index sum " << sum.to_string();
  return os.str();
}

}  // namespace

AlternativeSum alternative_sum(std::span<const SignedEigenvalue> candidates, const SystemConfig& config,
                               std::span<const EigenvalueRecord> spectrum) {
  std::vector<SignedEigenvalue> sorted(candidates.begin(), candidates.end());
  for (auto& c : sorted) {
    if (c.index < 1 || c.index > spectrum.size()) {
      throw Error(ErrorCode::invalid_argument,
                  "candidate " + c.label() + " is outside the " + std::to_string(spectrum.size()) + " eigenvalues");
    }
    if (config.count_for(c.sign) == 0) {
      throw Error(ErrorCode::invalid_argument, "candidate " + c.label() + " is not in the candidate set since " +
                                                   count_name(c.sign) + " = 0");
    }
    c = point_for(spectrum, c.index, c.sign);
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const SignedEigenvalue& a, const SignedEigenvalue& b) { return a.value < b.value; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      throw Error(ErrorCode::invalid_argument, "candidate " + sorted[i].label() + " listed twice");
    }
  }

  AlternativeSum out;
  for (const auto& c : sorted) {
    EulerElement index = index_product(request_for(config, spectrum, c.index, c.sign));
    out.sum += index;
    out.evidence.push_back({c, std::move(index)});
  }
  out.is_theta = out.sum.is_zero();
  return out;
}

Certificate certify_alternative(std::span<const SignedEigenvalue> candidates, const SystemConfig& config,
                                std::span<const EigenvalueRecord> spectrum, std::optional<double> lambda_max) {
  AlternativeSum s = alternative_sum(candidates, config, spectrum);
  Certificate cert;
  cert.kind = CertificateKind::alternative_sum;
  cert.config = config;
  cert.parameters.lambda_max = lambda_max;
  cert.parameters.candidates.assign(candidates.begin(), candidates.end());
  for (const auto& e : s.evidence) cert.subject.push_back(e.point);
  cert.evidence = std::move(s.evidence);
  cert.sum = s.sum;
  if (s.is_theta) {
    cert.verdict = Verdict::inconclusive;
    cert.reasoning.push_back("index sum is Theta; the set may close a bounded continuum");
  } else {
    cert.verdict = Verdict::proved;
    cert.reasoning.push_back("index sum " + s.sum.to_string() + " is not Theta; no bounded continuum meets "
                             "the trivial branch exactly at this set");
  }
  return cert;
}

std::optional<bool> structural_sum_nonzero(std::span<const SignedEigenvalue> subset, const SystemConfig& config,
                                           std::span<const EigenvalueRecord> spectrum) {
  if (!config.radius.is_hemisphere()) return std::nullopt;
  if (subset.empty()) return false;
  std::size_t top = 0;
  for (const auto& c : subset) top = std::max(top, c.index);
  require_index(spectrum, top);
  if (top == 1) {
    EulerElement sum;
    for (const auto& c : subset) sum += index_product(request_for(config, spectrum, 1, c.sign));
    return !sum.is_zero();
  }
  BigInt value = 0;
  for (const auto& c : subset) {
    if (c.index == top) value += top_coefficient(config, spectrum, top, c.sign);
  }
  if (value != 0) return true;
  return std::nullopt;
}

Certificate certify_unbounded(const SystemConfig& config, std::size_t m0, Sign sign, std::size_t scan_bound,
                              std::uint64_t subset_budget) {
  if (!config.radius.is_hemisphere()) {
    throw Error(ErrorCode::invalid_argument, "unboundedness certificates are available on the hemisphere only");
  }
  if (m0 < 1) throw Error(ErrorCode::out_of_range, "m0 must be at least 1");
  if (scan_bound < m0) {
    throw Error(ErrorCode::scan_bound_too_small,
                "scan bound " + std::to_string(scan_bound) + " does not reach m0=" + std::to_string(m0));
  }
  if (config.count_for(sign) == 0) {
    throw Error(ErrorCode::signature_violation, std::string(count_name(sign)) + " must be positive at " +
                                                    lambda_name(sign, m0));
  }

  const std::vector<EigenvalueRecord> spectrum = hemisphere_spectrum(config.n, static_cast<int>(scan_bound));
  Certificate cert;
  cert.kind = CertificateKind::unbounded;
  cert.config = config;
  cert.parameters.m0 = m0;
  cert.parameters.sign = sign;
  cert.parameters.scan_bound = scan_bound;
  cert.parameters.subset_budget = subset_budget;
  cert.parameters.lambda_max = spectrum.back().lambda;
  const SignedEigenvalue subject = point_for(spectrum, m0, sign);
  cert.subject = {subject};

  if (!alternative_hypothesis(spectrum[m0 - 1], config.count_for(sign), cert.reasoning, m0, sign)) {
    cert.verdict = Verdict::hypothesis_not_met;
    cert.reasoning.push_back("the symmetric alternative says nothing about " + lambda_name(sign, m0));
    return cert;
  }
  cert.reasoning.push_back(parity_case(config));

  const std::vector<SignedEigenvalue> candidates =
      signed_candidate_set(spectrum, config.p_minus, config.p_plus);
  std::vector<EulerElement> indices;
  indices.reserve(candidates.size());
  for (const auto& c : candidates) {
    const IndexRequest req = request_for(config, spectrum, c.index, c.sign);
    EulerElement index = index_product(req);
    if (!index_closed_form(req).agrees_with(index)) {
      throw Error(ErrorCode::internal, "closed form disagrees with the product formula at " + c.label());
    }
    indices.push_back(index);
    cert.evidence.push_back({c, std::move(index)});
  }

  // Top-coordinate argument. A subset whose largest index is t >= 2 has a
  // sum whose coordinate t - 1 only sees the candidates +-lambda_t; at t = 1
  // the sum is computed exactly.
  std::vector<Sign> signs;
  if (config.p_plus > 0) signs.push_back(Sign::negative);
  if (config.p_minus > 0) signs.push_back(Sign::positive);
  bool structural_closed = true;
  for (std::size_t t = m0; t <= scan_bound; ++t) {
    const unsigned combos = 1u << signs.size();
    for (unsigned mask = 1; mask < combos; ++mask) {
      std::vector<Sign> chosen;
      for (std::size_t b = 0; b < signs.size(); ++b) {
        if (mask & (1u << b)) chosen.push_back(signs[b]);
      }
      if (t == m0 && std::find(chosen.begin(), chosen.end(), sign) == chosen.end()) continue;
      ++cert.structural_cases;
      bool closed = false;
      if (t == 1) {
        EulerElement sum;
        for (Sign s : chosen) sum += index_product(request_for(config, spectrum, 1, s));
        closed = !sum.is_zero();
      } else {
        BigInt value = 0;
        for (Sign s : chosen) value += top_coefficient(config, spectrum, t, s);
        closed = value != 0;
      }
      if (!closed) {
        structural_closed = false;
        std::string set;
        for (Sign s : chosen) set += (set.empty() ? "" : ", ") + lambda_name(s, t);
        cert.reasoning.push_back("top-coordinate argument leaves {" + set + "} open");
      }
    }
  }
  if (structural_closed) {
    cert.reasoning.push_back("top-coordinate argument closes all " + std::to_string(cert.structural_cases) +
                             " cases up to lambda_" + std::to_string(scan_bound));
  }

  // Brute force over every subset containing the subject.
  std::size_t subject_pos = 0;
  while (!(candidates[subject_pos].index == m0 && candidates[subject_pos].sign == sign)) ++subject_pos;
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (i != subject_pos) others.push_back(i);
  }
  bool exhausted = false;
  if (others.size() < 63 && (std::uint64_t{1} << others.size()) <= subset_budget) {
    const std::uint64_t total = std::uint64_t{1} << others.size();
    std::vector<bool> member(candidates.size(), false);
    std::vector<unsigned> per_index(scan_bound + 1, 0);
    member[subject_pos] = true;
    per_index[m0] = 1;
    EulerElement sum = indices[subject_pos];

    auto current_subset = [&] {
      std::vector<SignedEigenvalue> s;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (member[i]) s.push_back(candidates[i]);
      }
      return s;
    };
    auto check = [&] {
      std::size_t top = scan_bound;
      while (per_index[top] == 0) --top;
      bool structural = false;
      if (top == 1) {
        structural = !sum.is_zero();
      } else {
        BigInt value = 0;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          if (member[i] && candidates[i].index == top) value += indices[i].coeff(top - 1);
        }
        structural = value != 0;
      }
      if (sum.is_zero()) {
        throw Error(ErrorCode::internal,
                    "refutation of the unboundedness claim: " + dump_subset(current_subset(), sum));
      }
      if (!structural && structural_closed) {
        throw Error(ErrorCode::internal, "top-coordinate test disagrees with enumeration: " +
                                             dump_subset(current_subset(), sum));
      }
    };

    check();
    for (std::uint64_t k = 1; k < total; ++k) {
      const std::size_t i = others[static_cast<std::size_t>(std::countr_zero(k))];
      if (member[i]) {
        sum -= indices[i];
        --per_index[candidates[i].index];
      } else {
        sum += indices[i];
        ++per_index[candidates[i].index];
      }
      member[i] = !member[i];
      check();
    }
    cert.subsets_enumerated = total;
    exhausted = true;
    cert.reasoning.push_back("enumerated " + std::to_string(total) + " subsets containing " + subject.label() +
                             "; no index sum is Theta");
  } else {
    cert.reasoning.push_back("subset count exceeds the budget of " + std::to_string(subset_budget) +
                             "; enumeration skipped");
  }

  if (structural_closed || exhausted) {
    cert.verdict = Verdict::proved;
    cert.reasoning.push_back("no finite set of candidates up to lambda_" + std::to_string(scan_bound) +
                             " containing " + subject.label() + " has index sum Theta");
  } else {
    cert.verdict = Verdict::inconclusive;
  }
  return cert;
}

Certificate bounded_necessary(const SystemConfig& config, std::span<const EigenvalueRecord> spectrum,
                              std::size_t m0, Sign sign, std::optional<double> lambda_max) {
  require_index(spectrum, m0);
  Certificate cert;
  cert.kind = CertificateKind::necessary_conditions;
  cert.config = config;
  cert.parameters.m0 = m0;
  cert.parameters.sign = sign;
  cert.parameters.lambda_max = lambda_max;
  const SignedEigenvalue subject = point_for(spectrum, m0, sign);
  cert.subject = {subject};

  const unsigned same = config.count_for(sign);
  const unsigned other = sign == Sign::positive ? config.p_plus : config.p_minus;
  const std::string same_name = count_name(sign);
  const std::string other_name = other_count_name(sign);

  if (m0 == 1) {
    cert.verdict = Verdict::hypothesis_not_met;
    cert.reasoning.push_back("the necessary conditions exclude the first eigenvalue");
    return cert;
  }
  if (same == 0 || same % 2 == 1) {
    cert.verdict = Verdict::hypothesis_not_met;
    cert.conditions.push_back({same_name + " > 0 even", "violated"});
    cert.reasoning.push_back(same_name + " = " + std::to_string(same) + " is not a positive even number");
    return cert;
  }
  const EigenvalueRecord& rec = spectrum[m0 - 1];
  if (!has_nontrivial_mode(rec)) {
    cert.verdict = Verdict::hypothesis_not_met;
    cert.reasoning.push_back("eigenspace of lambda_" + std::to_string(m0) + " has modes " + gamma_string(rec) +
                             " and is SO(n)-trivial with even " + same_name + " * dim");
    return cert;
  }

  EulerElement index = index_product(request_for(config, spectrum, m0, sign));
  cert.evidence.push_back({subject, index});
  cert.conditions.push_back({same_name + " > 0 even", "satisfied"});
  cert.reasoning.push_back("eigenspace of lambda_" + std::to_string(m0) + " has modes " + gamma_string(rec) +
                           " and is a nontrivial SO(n)-representation");
  cert.reasoning.push_back("indices at " + std::string(sign_char(sign)) + "lambda_j lie in U_-(SO(2)) and " +
                           subject.label() + " gives " + index.to_string());

  const bool other_odd = other % 2 == 1;
  cert.conditions.push_back({other_name + " > 0 odd", other_odd ? "satisfied" : "violated"});
  const std::string opposite = sign == Sign::positive ? "-sigma" : "+sigma";
  cert.conditions.push_back({"a bounded continuum from " + subject.label() + " meets {0} x " + opposite,
                             "required"});
  cert.verdict = Verdict::proved;
  if (other_odd) {
    cert.reasoning.push_back("necessary conditions for a bounded continuum emitted");
  } else {
    cert.reasoning.push_back("boundedness impossible: " + other_name + " = " + std::to_string(other) +
                             " is even, so the continuum from " + subject.label() + " is unbounded");
  }
  return cert;
}

Certificate symmetry_breaking(const SystemConfig& config, std::span<const EigenvalueRecord> spectrum,
                              std::size_t m0, Sign sign, std::optional<double> lambda_max) {
  const IndexRequest req = request_for(config, spectrum, m0, sign);
  validate(req);
  Certificate cert;
  cert.kind = CertificateKind::symmetry_breaking;
  cert.config = config;
  cert.parameters.m0 = m0;
  cert.parameters.sign = sign;
  cert.parameters.lambda_max = lambda_max;
  const SignedEigenvalue subject = point_for(spectrum, m0, sign);
  cert.subject = {subject};
  cert.evidence.push_back({subject, index_product(req)});

  const EigenvalueRecord& rec = spectrum[m0 - 1];
  const bool zero_mode = has_trivial_mode(rec);
  const std::uint64_t fixed_dim = zero_mode ? config.count_for(sign) : 0;
  cert.conditions.push_back({"mode 0 absent from " + gamma_string(rec), zero_mode ? "violated" : "satisfied"});
  cert.reasoning.push_back("SO(n)-fixed part of the kernel at " + subject.label() + " has dimension " +
                           std::to_string(fixed_dim));
  if (config.radius.is_hemisphere()) {
    const bool even = m0 % 2 == 0;
    if (even == zero_mode) {
      throw Error(ErrorCode::internal, "mode set " + gamma_string(rec) + " contradicts the parity of m0=" +
                                           std::to_string(m0));
    }
    cert.reasoning.push_back(std::string("on the hemisphere m0 = ") + std::to_string(m0) + " is " +
                             (even ? "even" : "odd"));
  }
  if (zero_mode) {
    cert.verdict = Verdict::inconclusive;
    cert.reasoning.push_back("mode 0 contributes; no conclusion about symmetry breaking");
  } else {
    cert.verdict = Verdict::proved;
    cert.reasoning.push_back(subject.label() + " is a global symmetry-breaking bifurcation point");
  }
  return cert;
}

bool verify_certificate(const Certificate& certificate) {
  const auto& c = certificate.config;
  const auto& p = certificate.parameters;
  if (certificate.kind == CertificateKind::unbounded) {
    Certificate again = certify_unbounded(c, p.m0, p.sign, p.scan_bound, p.subset_budget);
    again.tolerances = certificate.tolerances;
    return again == certificate;
  }

  std::vector<EigenvalueRecord> records;
  if (p.lambda_max) {
    records = assemble_spectrum(c.n, c.radius, *p.lambda_max, std::nullopt, certificate.tolerances).records;
  } else if (c.radius.is_hemisphere()) {
    std::size_t needed = p.m0;
    for (const auto& cand : p.candidates) needed = std::max(needed, cand.index);
    records = hemisphere_spectrum(c.n, static_cast<int>(std::max<std::size_t>(needed, 1)));
  } else {
    throw Error(ErrorCode::invalid_argument, "certificate lacks lambda_max; its spectrum cannot be rebuilt");
  }

  Certificate again;
  switch (certificate.kind) {
    case CertificateKind::alternative_sum:
      again = certify_alternative(p.candidates, c, records, p.lambda_max);
      break;
    case CertificateKind::necessary_conditions:
      again = bounded_necessary(c, records, p.m0, p.sign, p.lambda_max);
      break;
    case CertificateKind::symmetry_breaking:
      again = symmetry_breaking(c, records, p.m0, p.sign, p.lambda_max);
      break;
    case CertificateKind::unbounded:
      break;
  }
  again.tolerances = certificate.tolerances;
  return again == certificate;
}

}  // namespace eqbif
