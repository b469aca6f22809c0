#pragma once

// Reference computations that share no code with the library. Each one
// reaches the same quantity by a different route.

#include <cstdint>
#include <vector>

namespace oracle {

/// Counts chains m >= m1 >= ... >= m_{n-3} >= i by explicit enumeration.
std::uint64_t enumerate_chains(int n, int m, int i);

/// dim P_m - dim P_{m-2} for homogeneous polynomials in n variables, with
/// P_k counted by enumerating exponent vectors.
std::uint64_t harmonic_dim_by_counting(int n, int m);

/// Rank modulo a large prime of the Laplacian P_m -> P_{m-2}. Full row rank
/// (= dim P_{m-2}) proves the kernel dimension dim P_m - dim P_{m-2}.
std::uint64_t laplacian_rank_mod_p(int n, int m);
std::uint64_t monomial_count(int n, int degree);

/// Dense Euler ring element with machine integers.
using Dense = std::vector<long long>;
Dense dense_mul(const Dense& a, const Dense& b);
Dense dense_add(const Dense& a, const Dense& b);
Dense dense_pow_closed_form(const Dense& a, unsigned p);
bool dense_is_zero(const Dense& a);

/// deg(-Id) from the dimension count of each isotypic component, written
/// as a product of the degrees of the irreducible summands.
Dense degree_by_factors(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& weights);

/// Dirichlet eigenvalues of the radial problem
///   -(s^{n-1} T')' + beta s^{n-3} T = lambda s^{n-1} T,  s = sin t, on (0, gamma)
/// from a cell-centred finite-difference discretisation with Richardson
/// extrapolation between N and 2N cells. Returns the eigenvalues <= lambda_max.
std::vector<double> fd_mode_eigenvalues(int n, int m, double gamma, double lambda_max, int cells = 2000);

}  // namespace oracle
