#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "banach/intset.hpp"

namespace banach {

/// Largest k accepted by subset enumeration (2^k - 1 subsets).
inline constexpr std::size_t kMaxEnumeratedIndices = 24;

/// Nonempty finite set of positive indices, kept sorted ascending.
class SubsetIndex {
 public:
  explicit SubsetIndex(std::vector<std::uint32_t> members);
  static SubsetIndex from_mask(std::uint64_t mask);

  const std::vector<std::uint32_t>& members() const noexcept { return members_; }
  std::uint32_t max() const { return members_.back(); }
  std::uint64_t mask() const;

  friend bool operator==(const SubsetIndex&, const SubsetIndex&) = default;

 private:
  std::vector<std::uint32_t> members_;
};

enum class Status { Pass, Fail, PartialWindow };

std::string_view to_string(Status s);

using Interval = std::pair<BigInt, BigInt>;

struct Verdict {
  Status status = Status::Pass;
  /// Smallest element of the checked set missing from A (Fail only).
  std::optional<BigInt> witness;
  /// Hull of the sums that could actually be decided.
  std::optional<Interval> evaluable;
  /// Index set that produced the witness, when the check ran over subsets.
  std::optional<SubsetIndex> subset;
  /// Number of individual containment checks folded into this verdict.
  std::size_t checked = 0;

  bool passed() const { return status == Status::Pass; }
};

/// Folds `part` into `acc`. Fail dominates PartialWindow, which dominates
/// Pass; among failures the smallest witness wins, and ties keep `acc`, so
/// folding in enumeration order reports the first subset with that witness.
void absorb(Verdict& acc, const Verdict& part);

struct SumsetWindow {
  ExplicitWindow sums;
  /// True when some sum exceeded the cap and was dropped.
  bool truncated = false;
};

/// {b + c : b in B, c in C, b + c <= cap} by OR-ing shifted copies of C.
SumsetWindow pairwise_sumset(const ExplicitWindow& b, const ExplicitWindow& c, const BigInt& cap);

/// Iterated sumset over the 1-based selection `selection` of `family`.
SumsetWindow family_sumset(std::span<const ExplicitWindow> family, const std::vector<std::uint32_t>& selection,
                           const BigInt& cap);

/// The interval of sums of a nonempty list of runs.
Run run_sum(std::span<const Run> runs);

/// All nonempty subsets of [1, k]: the subsets of [1, n] followed by
/// {n+1} ∪ J for J ranging over ∅ and then those same subsets.
std::vector<SubsetIndex> enumerate_subsets(std::size_t k);

Verdict verify_containment(const Run& s, const IntSet& a, const std::optional<Interval>& range = std::nullopt);
Verdict verify_containment(const ExplicitWindow& s, const IntSet& a,
                           const std::optional<Interval>& range = std::nullopt);

}  // namespace banach
