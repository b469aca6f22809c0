#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "eqbif/euler_ring.hpp"
#include "eqbif/spectrum.hpp"
#include "eqbif/system.hpp"

namespace eqbif {

/// Bifurcation index request at +lambda_{m0} (sign positive, needs p- > 0)
/// or -lambda_{m0} (sign negative, needs p+ > 0). The spectrum must contain
/// every record up to m0 in increasing order.
struct IndexRequest {
  std::span<const EigenvalueRecord> spectrum;
  std::size_t m0 = 1;
  Sign sign = Sign::positive;
  unsigned p_minus = 0;
  unsigned p_plus = 0;

  unsigned exponent() const { return sign == Sign::positive ? p_minus : p_plus; }
};

/// Throws Error(out_of_range) or Error(signature_violation).
void validate(const IndexRequest& req);

/// Direct sum of the eigenspaces strictly below lambda_{m0}.
SO2Rep lower_eigenspaces(const IndexRequest& req);

/// SO(2)-bifurcation index through the Euler-ring product formula
///   positive:  D-^{p-} * (D0^{p-} - I)
///   negative:  D-^{-p+} * (D0^{p+} - I)
/// with D- = deg(-Id) on the eigenspaces below lambda_{m0} and D0 = deg(-Id)
/// on the eigenspace of lambda_{m0}.
EulerElement index_product(const IndexRequest& req);

/// Coordinate shortcut for the index: coordinate 0, the coordinate at the top
/// weight of the m0-th eigenspace, and the index from which all coordinates
/// vanish.
struct ClosedFormIndex {
  BigInt coord0;
  /// (top weight, coefficient); absent when the eigenspace is trivial.
  std::optional<std::pair<std::uint64_t, BigInt>> top;
  std::uint64_t zero_from = 1;
  /// True when the request came from exact hemisphere records.
  bool exact_spectrum = false;

  /// Compares the shortcut coordinates and the zero tail with `index`.
  bool agrees_with(const EulerElement& index) const;
};

/// Coordinate formulas in terms of nu_{m0} = mu_1 + ... + mu_{m0}:
///   coordinate 0     : (-1)^{nu_{m0} p} - (-1)^{nu_{m0-1} p}
///   coordinate top   : (-1)^{1 + nu_{m0} p} p
///   coordinates > top: 0
/// On the hemisphere top = m0 - 1. Off the hemisphere the shortcut is only
/// valid while every weight below lambda_{m0} is smaller than the top weight
/// of its eigenspace; otherwise Error(closed_form_regime) is thrown.
ClosedFormIndex index_closed_form(const IndexRequest& req);

/// Which parity rules for the index apply and whether the computed index
/// sits in the implied cone.
struct ConeReport {
  unsigned exponent = 0;             // p- or p+
  std::uint64_t dim_eigenspace = 0;  // dim V0
  std::uint64_t dim_lower = 0;       // dim V-
  bool exponent_even = false;                 // item 2
  bool dim_even_and_product_even = false;     // item 3
  bool dim_even_and_product_odd = false;      // item 4
  std::optional<Cone> implied;                // minus_cone or plus_cone
  Cone actual = Cone::theta;
  bool consistent = true;
};

ConeReport cone_predicates(const IndexRequest& req);

}  // namespace eqbif
