#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace eqbif {

/// Finite-dimensional orthogonal SO(2)-representation
///   R[k0, 0] + R[k1, 1] + ... + R[km, m].
///
/// Weight 0 counts real dimensions of the trivial part; weight m >= 1 counts
/// copies of the two-dimensional rotation R[1, m]. Zero multiplicities are
/// never stored.
class SO2Rep {
 public:
  using Weight = std::uint64_t;
  using Entry = std::pair<Weight, std::uint64_t>;

  SO2Rep() = default;

  /// R[k, m]; R[k, 0] is the trivial k-dimensional representation.
  static SO2Rep copies(std::uint64_t k, Weight m);
  static SO2Rep from_weights(std::vector<Entry> weights);

  std::uint64_t multiplicity(Weight m) const;
  std::uint64_t trivial_dim() const { return multiplicity(0); }
  std::uint64_t dimension() const;
  std::optional<Weight> top_weight() const;
  bool empty() const noexcept { return weights_.empty(); }
  std::span<const Entry> weights() const noexcept { return weights_; }

  SO2Rep& operator+=(const SO2Rep& rhs);
  friend SO2Rep operator+(SO2Rep lhs, const SO2Rep& rhs) {
    lhs += rhs;
    return lhs;
  }
  /// k-fold direct sum of this representation.
  SO2Rep scaled(std::uint64_t k) const;

  friend bool operator==(const SO2Rep&, const SO2Rep&) = default;

  /// "R[3,0] + R[2,1] + R[1,2]"; the zero representation renders as "0".
  std::string to_string() const;

 private:
  std::vector<Entry> weights_;
};

/// Dimension of the space of degree-m harmonic homogeneous polynomials in n
/// variables (equivalently the m-th eigenspace of the Laplacian on S^{n-1}).
/// Throws Error(invalid_argument) for n < 2.
std::uint64_t harmonic_dim(int n, int m);

/// Multiplicity of the weight-i summand in the SO(2)-restriction of H^n_m.
///
/// For n >= 3 this counts weakly decreasing chains m >= m1 >= ... >= m_{n-3} >= i,
/// which is binom(m - i + n - 3, n - 3). For n = 2 the space is R[1, m].
/// Returns 0 for i > m.
std::uint64_t weight_multiplicity(int n, int m, std::uint64_t i);

/// SO(2)-weight decomposition of H^n_m.
SO2Rep so2_decompose(int n, int m);

/// Weightwise sum of reps[j] taken multiplicities[j] times.
/// Throws Error(length_mismatch) when the spans differ in length.
SO2Rep direct_sum(std::span<const SO2Rep> reps, std::span<const std::uint64_t> multiplicities);

}  // namespace eqbif
