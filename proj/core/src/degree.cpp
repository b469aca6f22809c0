#include "eqbif/degree.hpp"

namespace eqbif {

EulerElement deg_neg_id(const SO2Rep& rep) {
  const std::uint64_t k0 = rep.trivial_dim();
  const int sign0 = (k0 % 2 == 0) ? 1 : -1;
  std::vector<EulerElement::Term> terms;
  terms.emplace_back(0, BigInt(sign0));
  for (const auto& [m, k] : rep.weights()) {
    if (m == 0) continue;
    terms.emplace_back(m, BigInt(-sign0) * k);
  }
  return EulerElement::from_terms(std::move(terms));
}

}  // namespace eqbif
