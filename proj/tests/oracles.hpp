#pragma once

// Brute-force reference implementations used only by the tests. They work
// from definitions and never call into the routines they check.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "banach/bigint.hpp"

namespace banach::oracle {

/// Elements of run i of c^i-runs or i^p-runs, listed up to `limit`.
inline std::set<std::int64_t> generator_elements(bool power_base, std::int64_t param, std::int64_t limit) {
  std::set<std::int64_t> out;
  for (std::int64_t i = 1;; ++i) {
    std::int64_t start = 1;
    for (std::int64_t e = 0; e < (power_base ? i : param); ++e) start *= power_base ? param : i;
    if (start > limit) break;
    for (std::int64_t x = start; x <= start + i - 1 && x <= limit; ++x) out.insert(x);
  }
  return out;
}

/// max over u of |A ∩ [u, u+n-1]| by counting every interval from scratch.
inline std::size_t f_definition(const boost::dynamic_bitset<>& bits, std::size_t n) {
  std::size_t best = 0;
  for (std::size_t u = 0; u + n <= bits.size(); ++u) {
    std::size_t count = 0;
    for (std::size_t x = u; x < u + n; ++x) count += bits.test(x);
    best = std::max(best, count);
  }
  return best;
}

inline boost::dynamic_bitset<> random_bits(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  boost::dynamic_bitset<> bits(n);
  for (std::size_t k = 0; k < n; ++k) bits[k] = coin(rng);
  return bits;
}

/// Random bits whose runs never reach `cap` consecutive ones.
inline boost::dynamic_bitset<> random_bits_capped(std::mt19937_64& rng, std::size_t n, double density,
                                                  std::size_t cap) {
  std::bernoulli_distribution coin(density);
  boost::dynamic_bitset<> bits(n);
  std::size_t run = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const bool on = run + 1 < cap && coin(rng);
    bits[k] = on;
    run = on ? run + 1 : 0;
  }
  return bits;
}

inline std::size_t longest_ones(const boost::dynamic_bitset<>& bits) {
  std::size_t best = 0, cur = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    cur = bits.test(k) ? cur + 1 : 0;
    best = std::max(best, cur);
  }
  return best;
}

inline std::set<BigInt> sumset(const std::set<BigInt>& a, const std::set<BigInt>& b) {
  std::set<BigInt> out;
  for (const auto& x : a) {
    for (const auto& y : b) out.insert(x + y);
  }
  return out;
}

/// Smallest i >= 1 with 4^i - i > t, scanning from 1.
inline std::uint64_t escape_scan(std::uint64_t t) {
  for (std::uint64_t i = 1;; ++i) {
    BigInt p = 1;
    for (std::uint64_t e = 0; e < i; ++e) p *= 4;
    if (p - i > t) return i;
  }
}

/// Longest arithmetic progression with difference m inside `bits`,
/// by trying every start.
inline std::size_t longest_ap(const boost::dynamic_bitset<>& bits, std::size_t m) {
  std::size_t best = 0;
  for (std::size_t s = 0; s < bits.size(); ++s) {
    std::size_t len = 0;
    for (std::size_t x = s; x < bits.size() && bits.test(x); x += m) ++len;
    best = std::max(best, len);
  }
  return best;
}

}  // namespace banach::oracle
