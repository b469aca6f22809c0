#pragma once

#include "eqbif/euler_ring.hpp"
#include "eqbif/so2_rep.hpp"

namespace eqbif {

/// SO(2)-equivariant gradient degree of -Id on the unit ball of `rep`:
///   alpha_0 = (-1)^{k0},  alpha_m = (-1)^{k0 + 1} k_m  for each weight m >= 1.
/// The zero representation gives the unit.
EulerElement deg_neg_id(const SO2Rep& rep);

/// Degree of Id on any ball; always the unit.
inline EulerElement deg_id(const SO2Rep&) { return EulerElement::unit(); }

}  // namespace eqbif
