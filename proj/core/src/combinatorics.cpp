#include "eqbif/combinatorics.hpp"

#include <limits>
#include <string>

#include "eqbif/error.hpp"

namespace eqbif {

BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t k = 2; k <= n; ++k) result *= k;
  return result;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  // Exact at each step: the running value is binom(n - k + i, i).
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

std::uint64_t to_u64(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::out_of_range, "integer " + value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

}  // namespace eqbif
