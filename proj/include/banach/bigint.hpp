#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace banach {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Parses an optionally signed decimal integer. Throws std::invalid_argument
/// on anything else (no whitespace, no hex).
BigInt parse_bigint(std::string_view text);

std::string to_decimal(const BigInt& value);

/// Number of decimal digits of |value| (1 for zero).
std::size_t decimal_digits(const BigInt& value);

BigInt pow(const BigInt& base, std::uint64_t exponent);

/// floor(value^(1/degree)) for value >= 0, degree >= 1.
BigInt iroot(const BigInt& value, unsigned degree);

/// Largest i >= 0 with base^i <= value, for value >= 1 and base >= 2.
std::uint64_t ilog(const BigInt& value, std::uint64_t base);

/// Index of the most significant set bit; value must be positive.
std::size_t msb(const BigInt& value);

/// Floor and ceiling division for a positive divisor.
BigInt floor_div(const BigInt& num, const BigInt& den);
BigInt ceil_div(const BigInt& num, const BigInt& den);

/// Non-negative remainder for a positive modulus.
BigInt mod_floor(const BigInt& num, const BigInt& den);

/// Converts to a machine size; throws std::overflow_error if it does not fit
/// or is negative.
std::size_t to_size(const BigInt& value);

}  // namespace banach
