#include "banach/bigint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace banach {

BigInt parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

std::size_t decimal_digits(const BigInt& value) {
  std::string s = value.str();
  return s.size() - (s[0] == '-' ? 1 : 0);
}

BigInt pow(const BigInt& base, std::uint64_t exponent) {
  if (exponent > std::numeric_limits<unsigned>::max()) {
    throw std::overflow_error("exponent too large");
  }
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

std::size_t msb(const BigInt& value) { return boost::multiprecision::msb(value); }

BigInt iroot(const BigInt& value, unsigned degree) {
  if (value < 0) throw std::domain_error("iroot of a negative number");
  if (degree == 0) throw std::domain_error("iroot of degree zero");
  if (value < 2 || degree == 1) return value;
  if (degree == 2) return boost::multiprecision::sqrt(value);
  // Bitwise construction from the top: result has at most msb/degree + 1 bits.
  const std::size_t bits = msb(value) / degree + 1;
  BigInt result = 0;
  for (std::size_t k = bits; k-- > 0;) {
    BigInt candidate = result;
    boost::multiprecision::bit_set(candidate, static_cast<unsigned>(k));
    if (boost::multiprecision::pow(candidate, degree) <= value) result = candidate;
  }
  return result;
}

std::uint64_t ilog(const BigInt& value, std::uint64_t base) {
  if (value < 1) throw std::domain_error("ilog of a non-positive number");
  if (base < 2) throw std::domain_error("ilog base must be at least 2");
  const double estimate =
      std::floor(static_cast<double>(msb(value)) / std::log2(static_cast<double>(base)));
  std::uint64_t i = estimate > 0 ? static_cast<std::uint64_t>(estimate) : 0;
  BigInt power = pow(BigInt(base), i);
  while (power > value) {
    power /= base;
    --i;
  }
  while (power * base <= value) {
    power *= base;
    ++i;
  }
  return i;
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) --q;
  return q;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

BigInt mod_floor(const BigInt& num, const BigInt& den) {
  BigInt r = num % den;
  if (r < 0) r += den;
  return r;
}

std::size_t to_size(const BigInt& value) {
  if (value < 0 || value > std::numeric_limits<std::size_t>::max()) {
    throw std::overflow_error("value " + value.str() + " does not fit a machine size");
  }
  return value.convert_to<std::size_t>();
}

}  // namespace banach
