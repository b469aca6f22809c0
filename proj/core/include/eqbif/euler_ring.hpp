#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eqbif/combinatorics.hpp"

namespace eqbif {

/// Element of the Euler ring U(SO(2)).
///
/// A finitely supported integer sequence (a0, a1, a2, ...). Coordinate 0
/// belongs to the isotropy group SO(2) and coordinate i >= 1 to the cyclic
/// subgroup Z_i. Storage is a sorted list of (index, coefficient) pairs with
/// no zero coefficient, so structural equality is ring equality.
///
/// Multiplication is the twisted product
///   (a * b)_0 = a0 b0,   (a * b)_i = a_i b0 + a0 b_i  (i >= 1).
class EulerElement {
 public:
  using Index = std::uint64_t;
  using Term = std::pair<Index, BigInt>;

  /// The zero element Theta.
  EulerElement() = default;

  static EulerElement zero() { return {}; }
  static EulerElement unit();
  /// c at coordinate `index`, zero elsewhere.
  static EulerElement monomial(Index index, BigInt c);
  /// Dense constructor: coefficient k of the list sits at coordinate k.
  static EulerElement dense(std::initializer_list<long long> coeffs);
  /// Accepts unsorted input with repeated indices; repeats are summed.
  static EulerElement from_terms(std::vector<Term> terms);

  BigInt coeff(Index index) const;
  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::optional<Index> top_index() const;

  /// Invertible elements are exactly those with a0 = +-1.
  bool is_unit() const;

  EulerElement& operator+=(const EulerElement& rhs);
  EulerElement& operator-=(const EulerElement& rhs);
  EulerElement operator-() const;

  friend EulerElement operator+(EulerElement lhs, const EulerElement& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend EulerElement operator-(EulerElement lhs, const EulerElement& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend EulerElement operator*(const EulerElement& lhs, const EulerElement& rhs);
  friend bool operator==(const EulerElement&, const EulerElement&) = default;

  /// Support-only rendering, e.g. "{0: -2, 3: 1}"; Theta renders as "{}".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// p-fold product; pow(a, 0) is the unit.
EulerElement pow(const EulerElement& a, std::uint64_t p);

/// Multiplicative inverse of a unit (a0 = +-1): (a0; -a_i).
/// Throws Error(invalid_argument) when a is not a unit.
EulerElement inverse(const EulerElement& a);

/// Integer power; a negative exponent requires a unit and is resolved
/// through inverse().
EulerElement pow_signed(const EulerElement& a, std::int64_t p);

enum class Cone { theta, plus_cone, minus_cone, mixed };

const char* to_string(Cone cone) noexcept;

/// theta for zero; minus_cone when every coefficient is <= 0; plus_cone when
/// every coefficient is >= 0; mixed otherwise.
Cone classify(const EulerElement& a);

/// True when `a` lies in U_-(SO(2)) (Theta included).
bool in_minus_cone(const EulerElement& a);
/// True when `a` lies in U_+(SO(2)) (Theta included).
bool in_plus_cone(const EulerElement& a);

}  // namespace eqbif
