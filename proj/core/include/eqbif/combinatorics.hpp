#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace eqbif {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(std::uint64_t n);
BigInt binomial(std::uint64_t n, std::uint64_t k);

// Throws Error(out_of_range) when the value does not fit.
std::uint64_t to_u64(const BigInt& value);

}  // namespace eqbif
