#include "eqbif/bifurcation_index.hpp"

#include "eqbif/degree.hpp"
#include "eqbif/error.hpp"

namespace eqbif {

namespace {

BigInt neg_one_pow(std::uint64_t e) { return (e % 2 == 0) ? BigInt(1) : BigInt(-1); }

const EigenvalueRecord& eigen_record(const IndexRequest& req) { return req.spectrum[req.m0 - 1]; }

}  // namespace

void validate(const IndexRequest& req) {
  if (req.m0 < 1 || req.m0 > req.spectrum.size()) {
    throw Error(ErrorCode::out_of_range, "m0=" + std::to_string(req.m0) + " outside the " +
                                             std::to_string(req.spectrum.size()) + " available eigenvalues");
  }
  if (req.exponent() == 0) {
    throw Error(ErrorCode::signature_violation,
                req.sign == Sign::positive ? "positive eigenvalues need p- > 0" : "negative eigenvalues need p+ > 0");
  }
}

SO2Rep lower_eigenspaces(const IndexRequest& req) {
  validate(req);
  SO2Rep lower;
  for (std::size_t j = 0; j + 1 < req.m0; ++j) lower += req.spectrum[j].eigenspace;
  return lower;
}

EulerElement index_product(const IndexRequest& req) {
  const SO2Rep lower = lower_eigenspaces(req);
  const EulerElement d_lower = deg_neg_id(lower);
  const EulerElement d_eigen = deg_neg_id(eigen_record(req).eigenspace);
  const std::uint64_t p = req.exponent();

  EulerElement left;
  if (req.sign == Sign::positive) {
    left = pow(d_lower, p);
  } else {
    const EulerElement inv = inverse(d_lower);
    if (inv * d_lower != EulerElement::unit()) {
      throw Error(ErrorCode::internal, "inverse check failed for " + d_lower.to_string());
    }
    left = pow(inv, p);
  }
  return left * (pow(d_eigen, p) - EulerElement::unit());
}

bool ClosedFormIndex::agrees_with(const EulerElement& index) const {
  if (index.coeff(0) != coord0) return false;
  if (top && index.coeff(top->first) != top->second) return false;
  for (const auto& [i, c] : index.terms()) {
    if (i >= zero_from && c != 0) return false;
  }
  return true;
}

ClosedFormIndex index_closed_form(const IndexRequest& req) {
  const SO2Rep lower = lower_eigenspaces(req);
  const EigenvalueRecord& rec = eigen_record(req);
  const std::uint64_t p = req.exponent();
  const std::uint64_t top_weight = rec.eigenspace.top_weight().value_or(0);
  const std::uint64_t lower_top = lower.top_weight().value_or(0);

  if (lower_top >= 1 && lower_top >= top_weight) {
    throw Error(ErrorCode::closed_form_regime,
                "eigenspaces below lambda_" + std::to_string(req.m0) + " reach weight " + std::to_string(lower_top) +
                    ", not below the top weight " + std::to_string(top_weight) + " of its eigenspace");
  }

  const std::uint64_t nu = rec.nu;
  const std::uint64_t nu_prev = nu - rec.mu;
  ClosedFormIndex out;
  out.coord0 = neg_one_pow(nu * p) - neg_one_pow(nu_prev * p);
  if (top_weight >= 1) {
    // The top weight of an eigenspace comes from a single harmonic space and
    // has multiplicity one.
    if (rec.eigenspace.multiplicity(top_weight) != 1) {
      throw Error(ErrorCode::closed_form_regime, "top weight of the eigenspace is not simple");
    }
    out.top = std::make_pair(top_weight, -neg_one_pow(nu * p) * BigInt(p));
  }
  out.zero_from = top_weight + 1;
  out.exact_spectrum = true;
  for (std::size_t j = 0; j < req.m0; ++j) {
    if (!req.spectrum[j].lambda_exact) out.exact_spectrum = false;
  }
  return out;
}

ConeReport cone_predicates(const IndexRequest& req) {
  const SO2Rep lower = lower_eigenspaces(req);
  ConeReport r;
  r.exponent = req.exponent();
  r.dim_eigenspace = eigen_record(req).eigenspace.dimension();
  r.dim_lower = lower.dimension();
  const bool dim_even = r.dim_eigenspace % 2 == 0;
  const bool product_even = (static_cast<std::uint64_t>(r.exponent) * r.dim_lower) % 2 == 0;
  r.exponent_even = r.exponent % 2 == 0;
  r.dim_even_and_product_even = dim_even && product_even;
  r.dim_even_and_product_odd = dim_even && !product_even;
  if (r.exponent_even || r.dim_even_and_product_even) {
    r.implied = Cone::minus_cone;
  } else if (r.dim_even_and_product_odd) {
    r.implied = Cone::plus_cone;
  }
  const EulerElement index = index_product(req);
  r.actual = classify(index);
  if (r.implied == Cone::minus_cone) r.consistent = in_minus_cone(index);
  if (r.implied == Cone::plus_cone) r.consistent = in_plus_cone(index);
  return r;
}

}  // namespace eqbif
