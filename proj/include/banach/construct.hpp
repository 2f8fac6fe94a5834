#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "banach/intset.hpp"
#include "banach/sumset.hpp"

namespace banach {

/// Greedy sequence b_1 < b_2 < ... with interval lengths ell_j such that every
/// finite sum of the intervals [b_j, b_j + ell_j - 1] lies in the source set.
/// certificates[n] is the run of the set that was found at step n + 1.
struct BSequence {
  std::vector<std::uint64_t> ells;
  std::vector<BigInt> bs;
  std::vector<Run> certificates;

  std::size_t size() const noexcept { return bs.size(); }
  /// [b_j, b_j + ell_j - 1] for 1-based j.
  Run interval(std::size_t j) const { return Run(bs.at(j - 1), ells.at(j - 1)); }
};

enum class PartitionScheme { Residue, Blocks };

/// k_sets disjoint sets B_i, each a union of b-sequence intervals over an
/// index set X_i. X_i partition [1, source.size()].
struct BFamily {
  std::size_t k_sets = 0;
  std::vector<std::vector<std::uint32_t>> index_sets;
  std::vector<RunList> sets;
  BSequence source;
};

/// A' with m * A' + r inside the window's set, found through the longest
/// arithmetic progression with difference at most m0.
struct APReduction {
  std::uint64_t m = 1;
  std::uint64_t r = 0;
  ExplicitWindow derived;
  /// Length of the longest progression with difference m in class r.
  std::size_t evidence_len = 0;
  /// Longest run of consecutive integers in A'.
  std::size_t derived_longest_run = 0;
};

struct EscapeStep {
  std::uint64_t i = 0;
  /// 4^i+i+t < 2*4^i <= 2b < 2*4^i+2i < 4^(i+1)-2t <= 4^(i+1)-t for all b in run i.
  bool chain = false;
  /// 2b - t and 2b + t are both outside the set for all b in run i.
  bool escaped = false;
};

struct EscapeReport {
  BigInt t;
  std::uint64_t i0 = 1;
  std::uint64_t i_max = 1;
  bool all_escaped = false;
  std::vector<EscapeStep> steps;
};

/// Builds b_1..b_k. Each b_{n+1} is the smallest start >= b_n + ell_n of a
/// block of length ell_{n+1} + sum_{j<=n}(b_j + ell_j) inside `a`.
/// Throws NoSuitableRun when `a` has no such block and BudgetExceeded when
/// the numbers outgrow limits.digit_budget.
BSequence build_b_sequence(const IntSet& a, std::span<const std::uint64_t> ells, std::size_t k,
                           const SearchLimits& limits = {});

/// Checks every nonempty J within [1, k_limit] symbolically through run_sum,
/// and element by element whenever the summed interval has at most
/// brute_span elements.
Verdict verify_b_sequence(const BSequence& seq, const IntSet& a, std::size_t k_limit, std::size_t brute_span);

BFamily build_family(const BSequence& seq, PartitionScheme scheme, std::size_t k_sets);

/// Throws DisjointnessViolation if two B_i meet. Otherwise checks
/// sum_{i in I} B_i ⊆ A for every nonempty I, one tuple of intervals at a
/// time, plus an element-wise sumset when the tuple count is at most
/// brute_span.
Verdict verify_family(const BFamily& fam, const IntSet& a, std::size_t brute_span);

APReduction ap_reduce(const ExplicitWindow& w, std::size_t m0);

/// Smallest i >= 1 with 4^i - i > t.
std::uint64_t escape_i0(const BigInt& t);

EscapeReport verify_escape(const BigInt& t, std::uint64_t i_max);

}  // namespace banach
